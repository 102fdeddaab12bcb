#include "multlab/complex.hpp"

#include <algorithm>
#include <string>

namespace multlab {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

/// All k-subsets of {0..t-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t t, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > t) return out;
  for (;;) {
    out.push_back(cur);
    long i = static_cast<long>(k) - 1;
    while (i >= 0 && cur[i] == t - k + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <ExactField F>
void put_block(Matrix<F>& m, std::size_t r0, std::size_t c0, const Matrix<F>& b,
               const typename F::value_type& scale) {
  const F& k = m.field();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = k.mul(scale, b(r, c));
}

}  // namespace

template <ExactField F>
ChainComplex<F>::ChainComplex(F field, std::vector<std::size_t> dims,
                              std::vector<Matrix<F>> boundaries)
    : field_(std::move(field)), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) dims_.push_back(0);
  if (boundaries_.size() != dims_.size() - 1) {
    throw DimensionMismatch("a complex with " + std::to_string(dims_.size()) + " components needs " +
                            std::to_string(dims_.size() - 1) + " boundary maps, got " +
                            std::to_string(boundaries_.size()));
  }
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    const auto& b = boundaries_[k];
    require_same_field(field_, b.field(), "chain complex");
    if (b.rows() != dims_[k] || b.cols() != dims_[k + 1]) {
      throw DimensionMismatch("boundary " + std::to_string(k + 1) + " has shape " +
                              shape(b.rows(), b.cols()) + ", expected " + shape(dims_[k], dims_[k + 1]));
    }
  }
  for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k) {
    if (!(boundaries_[k] * boundaries_[k + 1]).is_zero()) {
      throw PreconditionFailed("boundary " + std::to_string(k + 1) + " composed with boundary " +
                               std::to_string(k + 2) + " is nonzero");
    }
  }
}

template <ExactField F>
std::size_t ChainComplex<F>::dim(long i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= dims_.size()) return 0;
  return dims_[static_cast<std::size_t>(i)];
}

template <ExactField F>
Matrix<F> ChainComplex<F>::boundary(long i) const {
  if (i >= 1 && static_cast<std::size_t>(i) < dims_.size()) {
    return boundaries_[static_cast<std::size_t>(i) - 1];
  }
  return Matrix<F>(field_, dim(i - 1), dim(i));
}

template <ExactField F>
Subspace<F> ChainComplex<F>::cycles(long i) const {
  return kernel_basis(boundary(i));
}

template <ExactField F>
Subspace<F> ChainComplex<F>::boundaries(long i) const {
  return Subspace<F>::span_of(boundary(i + 1).transpose());
}

template <ExactField F>
ChainMap<F>::ChainMap(ChainComplex<F> src, ChainComplex<F> tgt, std::vector<Matrix<F>> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
  const std::size_t top = std::max(source.length(), target.length());
  if (components.size() != top + 1) {
    throw DimensionMismatch("chain map needs " + std::to_string(top + 1) + " components, got " +
                            std::to_string(components.size()));
  }
  for (std::size_t i = 0; i <= top; ++i) {
    const auto& f = components[i];
    const long li = static_cast<long>(i);
    if (f.rows() != target.dim(li) || f.cols() != source.dim(li)) {
      throw DimensionMismatch("chain map component " + std::to_string(i) + " has shape " +
                              shape(f.rows(), f.cols()) + ", expected " +
                              shape(target.dim(li), source.dim(li)));
    }
  }
  for (std::size_t i = 1; i <= top; ++i) {
    const long li = static_cast<long>(i);
    if (!(target.boundary(li) * components[i] == components[i - 1] * source.boundary(li))) {
      throw PreconditionFailed("the maps do not commute with the boundaries in degree " +
                               std::to_string(i));
    }
  }
}

template <ExactField F>
Matrix<F> ChainMap<F>::at(long i) const {
  if (i >= 0 && static_cast<std::size_t>(i) < components.size()) {
    return components[static_cast<std::size_t>(i)];
  }
  return Matrix<F>(source.field(), target.dim(i), source.dim(i));
}

template <ExactField F>
ChainMap<F> identity_map(const ChainComplex<F>& c) {
  std::vector<Matrix<F>> comps;
  for (auto d : c.dims()) comps.push_back(Matrix<F>::identity(c.field(), d));
  return ChainMap<F>(c, c, std::move(comps));
}

template <ExactField F>
ChainComplex<F> koszul_complex(const std::vector<Matrix<F>>& ops) {
  if (ops.empty()) throw InputError("koszul_complex needs at least one operator");
  const F& k = ops.front().field();
  const std::size_t v = ops.front().rows();
  for (const auto& a : ops) {
    require_same_field(k, a.field(), "koszul_complex");
    if (a.rows() != v || a.cols() != v) {
      throw DimensionMismatch("koszul operators must be square of size " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!(ops[i] * ops[j] == ops[j] * ops[i])) {
        throw PreconditionFailed("koszul operators " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " do not commute");
      }

  const std::size_t t = ops.size();
  std::vector<std::vector<std::vector<std::size_t>>> sets;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= t; ++i) {
    sets.push_back(subsets(t, i));
    dims.push_back(sets.back().size() * v);
  }
  std::vector<Matrix<F>> bds;
  for (std::size_t i = 1; i <= t; ++i) {
    Matrix<F> d(k, dims[i - 1], dims[i]);
    const auto& lower = sets[i - 1];
    for (std::size_t col = 0; col < sets[i].size(); ++col) {
      const auto& j = sets[i][col];
      for (std::size_t pos = 0; pos < j.size(); ++pos) {
        std::vector<std::size_t> rest = j;
        rest.erase(rest.begin() + static_cast<long>(pos));
        const auto row = static_cast<std::size_t>(
            std::lower_bound(lower.begin(), lower.end(), rest) - lower.begin());
        // pos is 0-based, so the sign (-1)^(k+1) with k = pos + 1 is (-1)^pos.
        put_block(d, row * v, col * v, ops[j[pos]], pos % 2 == 0 ? k.one() : k.neg(k.one()));
      }
    }
    bds.push_back(std::move(d));
  }
  return ChainComplex<F>(k, std::move(dims), std::move(bds));
}

template <ExactField F>
ChainMap<F> koszul_action(const ChainComplex<F>& koszul, std::size_t t, const Matrix<F>& b) {
  const F& k = koszul.field();
  const std::size_t v = b.rows();
  if (b.cols() != v || koszul.length() != t || koszul.dim(0) != v) {
    throw DimensionMismatch("operator does not match the Koszul complex");
  }
  std::vector<Matrix<F>> comps;
  for (std::size_t i = 0; i <= t; ++i) {
    const std::size_t n = koszul.dims()[i];
    Matrix<F> m(k, n, n);
    for (std::size_t blk = 0; blk < n / std::max<std::size_t>(v, 1); ++blk) {
      put_block(m, blk * v, blk * v, b, k.one());
    }
    comps.push_back(std::move(m));
  }
  return ChainMap<F>(koszul, koszul, std::move(comps));
}

template <ExactField F>
ChainComplex<F> mapping_cone(const ChainMap<F>& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  const F& k = x.field();
  const std::size_t top = std::max(x.length() + 1, y.length());
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= top; ++i) {
    const long li = static_cast<long>(i);
    dims.push_back(x.dim(li - 1) + y.dim(li));
  }
  std::vector<Matrix<F>> bds;
  for (std::size_t i = 1; i <= top; ++i) {
    const long li = static_cast<long>(i);
    Matrix<F> d(k, dims[i - 1], dims[i]);
    // Source C_i = X_(i-1) ⊕ Y_i, target C_(i-1) = X_(i-2) ⊕ Y_(i-1).
    const std::size_t xs = x.dim(li - 1);
    const std::size_t xt = x.dim(li - 2);
    put_block(d, 0, 0, x.boundary(li - 1), k.one());
    put_block(d, xt, 0, f.at(li - 1), (i - 1) % 2 == 0 ? k.one() : k.neg(k.one()));
    put_block(d, xt, xs, y.boundary(li), k.one());
    bds.push_back(std::move(d));
  }
  return ChainComplex<F>(k, std::move(dims), std::move(bds));
}

template <ExactField F>
std::vector<std::size_t> homology_dims(const ChainComplex<F>& c) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> ranks(c.length() + 2, 0);
  for (std::size_t i = 1; i <= c.length(); ++i) ranks[i] = rank(c.boundary(static_cast<long>(i)));
  for (std::size_t i = 0; i <= c.length(); ++i) out.push_back(c.dims()[i] - ranks[i] - ranks[i + 1]);
  return out;
}

template <ExactField F>
EulerCharacteristic euler_characteristic(const ChainComplex<F>& c) {
  EulerCharacteristic e;
  const auto h = homology_dims(c);
  for (std::size_t i = 0; i <= c.length(); ++i) {
    const long long sign = i % 2 == 0 ? 1 : -1;
    e.from_homology += sign * static_cast<long long>(h[i]);
    e.from_components += sign * static_cast<long long>(c.dims()[i]);
  }
  if (e.from_homology != e.from_components) {
    throw PropertyViolation("Euler characteristic from homology (" +
                            std::to_string(e.from_homology) + ") differs from components (" +
                            std::to_string(e.from_components) + ")");
  }
  return e;
}

template <ExactField F>
bool induced_map_is_zero(const ChainMap<F>& f, long i) {
  const Subspace<F> z = f.source.cycles(i);
  const Subspace<F> b = f.target.boundaries(i);
  const Matrix<F> m = f.at(i);
  for (std::size_t r = 0; r < z.dim(); ++r) {
    if (!b.contains(m.apply(z.basis().row(r)))) return false;
  }
  return true;
}

#define MULTLAB_COMPLEX_INSTANTIATE(F)                                                          \
  template class ChainComplex<F>;                                                               \
  template struct ChainMap<F>;                                                                  \
  template ChainMap<F> identity_map(const ChainComplex<F>&);                                    \
  template ChainComplex<F> koszul_complex(const std::vector<Matrix<F>>&);                       \
  template ChainMap<F> koszul_action(const ChainComplex<F>&, std::size_t, const Matrix<F>&);    \
  template ChainComplex<F> mapping_cone(const ChainMap<F>&);                                    \
  template std::vector<std::size_t> homology_dims(const ChainComplex<F>&);                      \
  template EulerCharacteristic euler_characteristic(const ChainComplex<F>&);                    \
  template bool induced_map_is_zero(const ChainMap<F>&, long);
MULTLAB_COMPLEX_INSTANTIATE(PrimeField)
MULTLAB_COMPLEX_INSTANTIATE(RationalField)

}  // namespace multlab
