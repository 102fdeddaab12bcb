#include "multlab/chi.hpp"

#include <numeric>

#include "multlab/graded.hpp"

namespace multlab {

template <ExactField F>
std::uint32_t KoszulSetup<F>::c_sum() const {
  return std::accumulate(c.begin(), c.end(), std::uint32_t{0});
}

template <ExactField F>
KoszulSetup<F> make_setup(Workspace<F>& ws, std::vector<Polynomial<F>> q,
                          std::vector<Polynomial<F>> a, std::uint32_t initial_ceiling) {
  if (q.empty()) throw InputError("q needs at least one generator");
  if (a.empty()) throw InputError("a needs at least one element");
  KoszulSetup<F> s;
  s.q = std::move(q);
  s.a = std::move(a);
  for (const auto& x : s.a) {
    const auto form = initial_degree_q(ws, s.q, x, initial_ceiling);
    if (form.zero) throw InputError("the parameter sequence contains 0");
    s.c.push_back(form.degree);
    s.c_product *= form.degree;
  }
  return s;
}

template <ExactField F>
long long chi_L(Workspace<F>& ws, const KoszulSetup<F>& setup, long n) {
  const std::size_t d = setup.a.size();
  if (d > 20) throw InputError("too many parameters for the subset sum");
  auto& ladder = ws.ladder(setup.q);
  long long total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    long exponent = n;
    int bits = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1U) {
        exponent -= setup.c[i];
        ++bits;
      }
    }
    const auto len = static_cast<long long>(ladder.length(exponent));
    total += bits % 2 == 0 ? len : -len;
  }
  return total;
}

template <ExactField F>
ChiReport chi_defect(Workspace<F>& ws, const KoszulSetup<F>& setup, const ChiOptions& options) {
  ChiReport r;
  r.c_product = setup.c_product;
  r.e0_a = e0_of_parameters(ws, setup.a, options.hilbert);
  const HilbertTable hq = hs_table(ws, setup.q, options.hilbert);
  if (hq.dimension != setup.a.size()) {
    throw NotSystemOfParameters("dim M = " + std::to_string(hq.dimension) + " but a has " +
                                std::to_string(setup.a.size()) + " elements");
  }
  r.e0_q = hq.e0;
  r.defect = r.e0_a - r.c_product * r.e0_q;

  r.n_from = static_cast<long>(setup.c_sum()) + 1;
  const std::uint32_t window = std::max<std::uint32_t>(options.window, 1);
  std::uint32_t run = 0;
  for (long n = r.n_from; n <= r.n_from + static_cast<long>(options.max_scan); ++n) {
    const long long l = chi_L(ws, setup, n);
    r.n.push_back(n);
    r.chi_L.push_back(l);
    r.chi_K.push_back(r.e0_a - l);
    run = r.chi_K.size() >= 2 && r.chi_K.back() == r.chi_K[r.chi_K.size() - 2] ? run + 1 : 1;
    if (run >= window) {
      r.chi = r.chi_K.back();
      if (r.chi != r.defect) {
        throw PropertyViolation("stabilized chi = " + std::to_string(r.chi) +
                                " differs from e0(a) - c e0(q) = " + std::to_string(r.defect));
      }
      if (r.chi < 0) throw NegativeChi("chi = " + std::to_string(r.chi) + " is negative");
      return r;
    }
  }
  std::string trace;
  for (auto v : r.chi_K) trace += (trace.empty() ? "" : ", ") + std::to_string(v);
  throw NonStabilizing("chi_K(n) did not become constant for n in [" + std::to_string(r.n_from) +
                       ", " + std::to_string(r.n.back()) + "]: " + trace);
}

#define MULTLAB_CHI_INSTANTIATE(F)                                                               \
  template struct KoszulSetup<F>;                                                                \
  template KoszulSetup<F> make_setup(Workspace<F>&, std::vector<Polynomial<F>>,                  \
                                     std::vector<Polynomial<F>>, std::uint32_t);                 \
  template long long chi_L(Workspace<F>&, const KoszulSetup<F>&, long);                          \
  template ChiReport chi_defect(Workspace<F>&, const KoszulSetup<F>&, const ChiOptions&);
MULTLAB_CHI_INSTANTIATE(PrimeField)
MULTLAB_CHI_INSTANTIATE(RationalField)

}  // namespace multlab
