#include "multlab/catalog.hpp"

namespace multlab {

namespace {

// Appends all exponent vectors of total degree d over `slots` variables,
// lexicographically descending.
void enumerate_degree(std::uint32_t d, std::size_t slot, Exponents& cur,
                      std::vector<Exponents>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = d;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur[slot] = e;
    enumerate_degree(d - e, slot + 1, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

BasisCatalog::BasisCatalog(RingSpec ring) : ring_(std::move(ring)) { degree_start_.push_back(0); }

void BasisCatalog::extend_to(std::uint32_t n) {
  while (enumerated_ < n) {
    const std::uint32_t d = enumerated_;
    if (ring_.is_curve()) {
      if (ring_.in_semigroup(d)) {
        curve_index_.push_back(static_cast<std::int64_t>(exps_.size()));
        exps_.push_back({d});
        degree_.push_back(d);
      } else {
        curve_index_.push_back(-1);
      }
    } else {
      std::vector<Exponents> fresh;
      Exponents cur(ring_.poly().vars.size(), 0);
      enumerate_degree(d, 0, cur, fresh);
      for (auto& e : fresh) {
        index_.emplace(e, exps_.size());
        exps_.push_back(std::move(e));
        degree_.push_back(d);
      }
    }
    ++enumerated_;
    degree_start_.push_back(exps_.size());
  }
}

std::size_t BasisCatalog::dim_below(std::uint32_t n) {
  extend_to(n);
  return degree_start_[n];
}

std::string BasisCatalog::label(std::size_t index) const {
  const Exponents& e = exps_[index];
  if (ring_.is_curve()) return e[0] == 0 ? "1" : (e[0] == 1 ? "t" : "t^" + std::to_string(e[0]));
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring_.poly().vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

long BasisCatalog::index_of(const Exponents& e) {
  if (ring_.is_curve()) {
    extend_to(e[0] + 1);
    return static_cast<long>(curve_index_[e[0]]);
  }
  extend_to(total_degree(e) + 1);
  auto it = index_.find(e);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

const std::vector<std::int32_t>& BasisCatalog::product_table(std::size_t j, std::uint32_t n) {
  const std::size_t dim = dim_below(n);
  Table& t = tables_[j];
  if (t.n >= n) return t.entries;
  t.n = n;
  t.entries.assign(dim, -1);
  const std::uint32_t dj = degree_[j];
  if (ring_.is_curve()) {
    const std::uint32_t sj = exps_[j][0];
    for (std::size_t i = 0; i < dim; ++i) {
      const std::uint32_t s = exps_[i][0] + sj;
      if (s < n) t.entries[i] = static_cast<std::int32_t>(curve_index_[s]);
    }
    return t.entries;
  }
  Exponents prod(exps_[j].size());
  for (std::size_t i = 0; i < dim; ++i) {
    if (degree_[i] + dj >= n) break;  // degrees are sorted
    for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = exps_[i][v] + exps_[j][v];
    t.entries[i] = static_cast<std::int32_t>(index_.at(prod));
  }
  return t.entries;
}

}  // namespace multlab
