#include "multlab/graded.hpp"

#include <algorithm>

#include "multlab/gcd.hpp"
#include "multlab/matrix.hpp"
#include "multlab/subspace.hpp"

namespace multlab {

namespace {

template <ExactField F>
Polynomial<F> one(Workspace<F>& ws) {
  return Polynomial<F>::constant(ws.field(), ws.ring().element_vars(), ws.field().one());
}

template <ExactField F>
Polynomial<F> ambient_to_polynomial(Workspace<F>& ws, const std::vector<typename F::value_type>& v) {
  Polynomial<F> out(ws.field(), ws.ring().element_vars());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!ws.field().is_zero(v[i])) out.add_term(ws.catalog().exponents(i), v[i]);
  }
  return out;
}

template <ExactField F>
bool is_zero_row(const F& k, const std::vector<typename F::value_type>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return k.is_zero(x); });
}

/// U_m = q^(m+1) + sum_j prev_j q^(m - c_j).
template <ExactField F>
std::vector<IdealTerm<F>> u_terms(Workspace<F>& ws, PowerLadder<F>& ladder, long m,
                                  const std::vector<Polynomial<F>>& prev,
                                  const std::vector<std::uint32_t>& prev_c) {
  std::vector<IdealTerm<F>> terms{{one(ws), &ladder.power(m + 1)}};
  for (std::size_t j = 0; j < prev.size(); ++j) {
    terms.push_back({prev[j], &ladder.power(m - static_cast<long>(prev_c[j]))});
  }
  return terms;
}

}  // namespace

template <ExactField F>
GradedPiece graded_piece(Workspace<F>& ws, const std::vector<Polynomial<F>>& q, std::uint32_t n) {
  auto& ladder = ws.ladder(q);
  const CertifiedIdeal<F>& p = ladder.power(n);
  const CertifiedIdeal<F>& next = ladder.power(static_cast<long>(n) + 1);
  GradedPiece piece;
  piece.degree = n;
  piece.dim = p.colength() <= next.colength() ? next.colength() - p.colength() : 0;
  SemiEchelon<F> ech(ws.field(), next.tail_index);
  for (auto& row : ws.expand(p, next.tail + 1)) {
    if (ech.rank() == piece.dim) break;
    auto nf = ws.normal_form(next, std::move(row));
    if (ech.insert(nf)) piece.basis.push_back(ambient_to_polynomial(ws, nf).to_string());
  }
  return piece;
}

template <ExactField F>
QInitialForm<F> initial_degree_q(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                                 const Polynomial<F>& a, std::uint32_t ceiling) {
  QInitialForm<F> out{a, 0, false};
  if (a.is_zero()) {
    out.zero = true;
    return out;
  }
  auto& ladder = ws.ladder(q);
  for (std::uint32_t c = 0; c <= ceiling; ++c) {
    if (!ws.contains(ladder.power(static_cast<long>(c) + 1), a)) {
      out.degree = c;
      return out;
    }
  }
  throw CeilingReached(a.to_string() + " lies in q^" + std::to_string(ceiling + 1) +
                       "; it may be zero in M (raise the ceiling to look further)");
}

template <ExactField F>
SopCheck sop_check(Workspace<F>& ws, const KoszulSetup<F>& setup, std::uint32_t k_window,
                   std::uint32_t k_ceiling) {
  auto& ladder = ws.ladder(setup.q);
  const std::uint32_t window = std::max<std::uint32_t>(k_window, 1);
  SopCheck out;
  std::uint32_t run = 0;
  for (std::uint32_t n = 1; n <= k_ceiling + window; ++n) {
    const CertifiedIdeal<F>& qn = ladder.power(n);
    std::vector<IdealTerm<F>> terms;
    for (std::size_t i = 0; i < setup.a.size(); ++i) {
      terms.push_back({setup.a[i], &ladder.power(static_cast<long>(n) - setup.c[i])});
    }
    bool equal = false;
    try {
      equal = ws.colength(terms, ws.min_certifying_order(qn.tail), true) == qn.colength();
    } catch (const NonStabilizing&) {
      equal = false;
    }
    out.scanned_to = n;
    if (equal) {
      if (++run == window) {
        out.holds = true;
        out.onset = n - window;
        return out;
      }
    } else {
      run = 0;
      if (!out.first_failure) out.first_failure = n;
      out.last_failure = n;
    }
  }
  return out;
}

template <ExactField F>
GregVerdict greg_probe(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                       const Polynomial<F>& a, std::uint32_t bound,
                       const std::vector<Polynomial<F>>& previous) {
  GregVerdict v;
  v.element = a.to_string();
  v.bound = bound;
  const auto form = initial_degree_q(ws, q, a);
  if (form.zero) throw InputError("greg_probe needs a nonzero element");
  const std::uint32_t f = form.degree;
  v.initial_degree = f;
  std::vector<std::uint32_t> prev_c;
  for (const auto& p : previous) {
    const auto pf = initial_degree_q(ws, q, p);
    if (pf.zero) throw InputError("greg_probe: zero element in the preceding sequence");
    prev_c.push_back(pf.degree);
  }
  auto& ladder = ws.ladder(q);

  for (std::uint32_t n = 0; n <= bound; ++n) {
    const long ln = n;
    const CertifiedIdeal<F>& qn = ladder.power(ln);
    const std::uint32_t upper_n = ws.min_certifying_order(ladder.power(ln + 1).tail);
    const std::uint32_t upper_nf = ws.min_certifying_order(ladder.power(ln + f + 1).tail);
    const auto un_terms = u_terms(ws, ladder, ln, previous, prev_c);
    auto unf_terms = u_terms(ws, ladder, ln + f, previous, prev_c);
    const CertifiedIdeal<F> un = ws.certify(un_terms, upper_n, false, upper_n);
    const CertifiedIdeal<F> unf = ws.certify(unf_terms, upper_nf, false, upper_nf);
    unf_terms.push_back({a, &qn});
    const std::size_t l_image = ws.certify(unf_terms, upper_nf, false, upper_nf).colength();
    // dim of the kernel of q^n/U_n -> q^(n+f)/U_(n+f).
    const long long kernel = static_cast<long long>(l_image) - static_cast<long long>(qn.colength()) -
                             static_cast<long long>(unf.colength()) +
                             static_cast<long long>(un.colength());
    if (kernel == 0) continue;

    v.failing_degree = n;
    v.kernel_dim = static_cast<std::size_t>(std::max<long long>(kernel, 0));
    // Explicit witness: x in q^n with a x in U_(n+f), x not in U_n.
    const std::uint32_t order = std::max(unf.tail, un.tail) + 1;
    const auto rows = ws.expand(qn, order);
    const auto sp = ws.sparse(a, order);
    Matrix<F> images(ws.field(), unf.tail_index, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto y = ws.normal_form(unf, ws.multiply(sp, rows[j], order));
      for (std::size_t r = 0; r < y.size(); ++r) images(r, j) = y[r];
    }
    const Subspace<F> ker = kernel_basis(images);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      std::vector<typename F::value_type> x(ws.ambient_dim(order), ws.field().zero());
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& lam = ker.basis()(r, j);
        if (ws.field().is_zero(lam)) continue;
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = ws.field().add(x[i], ws.field().mul(lam, rows[j][i]));
        }
      }
      auto nf = ws.normal_form(un, std::move(x));
      if (!is_zero_row(ws.field(), nf)) {
        v.witness = ambient_to_polynomial(ws, nf).to_string();
        break;
      }
    }
    return v;
  }
  v.regular_up_to_bound = true;
  return v;
}

template <ExactField F>
std::vector<GregVerdict> greg_sequence(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                                       const std::vector<Polynomial<F>>& a, std::uint32_t bound) {
  std::vector<GregVerdict> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::vector<Polynomial<F>> prev(a.begin(), a.begin() + static_cast<long>(i));
    out.push_back(greg_probe(ws, q, a[i], bound, prev));
    if (!out.back().regular_up_to_bound) break;
  }
  return out;
}

template <ExactField F>
ColonConstant colon_constant(Workspace<F>& ws, const KoszulSetup<F>& setup,
                             const ColonOptions& options) {
  const std::vector<Polynomial<F>> prefix(setup.a.begin(), setup.a.end() - 1);
  const Polynomial<F>& last = setup.a.back();
  const long c_last = setup.c.back();

  ColonConstant out;
  out.c_product = setup.c_product;
  out.hypothesis = greg_sequence(ws, setup.q, prefix, options.degree_bound);
  out.hypothesis_holds = std::all_of(out.hypothesis.begin(), out.hypothesis.end(),
                                     [](const GregVerdict& g) { return g.regular_up_to_bound; });
  if (!out.hypothesis_holds && options.require_hypothesis) {
    const auto& bad = out.hypothesis.back();
    throw PreconditionFailed("the initial form of " + bad.element +
                             " is not regular modulo the earlier ones (fails in degree " +
                             std::to_string(*bad.failing_degree) + ")");
  }

  std::vector<IdealTerm<F>> base;
  for (const auto& p : prefix) base.push_back({p, nullptr});
  std::vector<IdealTerm<F>> all = base;
  all.push_back({last, nullptr});
  out.length_quotient = static_cast<long long>(ws.colength(all, 0, true));
  out.e0_q = hs_table(ws, setup.q, options.hilbert).e0;

  auto& ladder = ws.ladder(setup.q);
  const long start = static_cast<long>(setup.c_sum()) + 1;
  const std::uint32_t window = std::max<std::uint32_t>(options.window, 1);
  std::uint32_t run = 0;
  for (long n = start; n <= start + static_cast<long>(options.max_scan); ++n) {
    const CertifiedIdeal<F>& qn = ladder.power(n);
    const CertifiedIdeal<F>& qs = ladder.power(n - c_last);
    const std::uint32_t up_n = ws.min_certifying_order(qn.tail);
    const std::uint32_t up_s = ws.min_certifying_order(qs.tail);
    auto i_n = base;
    i_n.push_back({one(ws), &qn});
    auto i_s = base;
    i_s.push_back({one(ws), &qs});
    auto i_na = i_n;
    i_na.push_back({last, nullptr});
    const auto l_n = static_cast<long long>(ws.certify(i_n, up_n, false, up_n).colength());
    const auto l_s = static_cast<long long>(ws.certify(i_s, up_s, false, up_s).colength());
    const auto l_na = static_cast<long long>(ws.certify(i_na, up_n, false, up_n).colength());
    out.n.push_back(n);
    out.values.push_back(l_s - l_n + l_na);
    run = out.values.size() >= 2 && out.values.back() == out.values[out.values.size() - 2] ? run + 1
                                                                                            : 1;
    if (run >= window) {
      out.constant = out.values.back();
      out.identity_holds = out.c_product * out.e0_q == out.length_quotient - out.constant;
      return out;
    }
  }
  std::string trace;
  for (auto v : out.values) trace += (trace.empty() ? "" : ", ") + std::to_string(v);
  throw NonConstant("the colon length did not become constant for n in [" + std::to_string(start) +
                    ", " + std::to_string(out.n.back()) + "]: " + trace);
}

template <ExactField F>
std::uint32_t tangent_multiplicity(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.nvars() != 2 || g.nvars() != 2) {
    throw InputError("tangent_multiplicity needs elements of a two-variable ring");
  }
  if (f.is_zero() || g.is_zero()) throw InputError("tangent_multiplicity needs nonzero elements");
  const auto h = binary_form_gcd(initial_form_m(f).form, initial_form_m(g).form);
  return static_cast<std::uint32_t>(h.degree());
}

#define MULTLAB_GRADED_INSTANTIATE(F)                                                            \
  template GradedPiece graded_piece(Workspace<F>&, const std::vector<Polynomial<F>>&,            \
                                    std::uint32_t);                                              \
  template struct QInitialForm<F>;                                                               \
  template QInitialForm<F> initial_degree_q(Workspace<F>&, const std::vector<Polynomial<F>>&,    \
                                            const Polynomial<F>&, std::uint32_t);                \
  template SopCheck sop_check(Workspace<F>&, const KoszulSetup<F>&, std::uint32_t,               \
                              std::uint32_t);                                                    \
  template GregVerdict greg_probe(Workspace<F>&, const std::vector<Polynomial<F>>&,              \
                                  const Polynomial<F>&, std::uint32_t,                           \
                                  const std::vector<Polynomial<F>>&);                            \
  template std::vector<GregVerdict> greg_sequence(Workspace<F>&,                                 \
                                                  const std::vector<Polynomial<F>>&,             \
                                                  const std::vector<Polynomial<F>>&,             \
                                                  std::uint32_t);                                \
  template ColonConstant colon_constant(Workspace<F>&, const KoszulSetup<F>&,                    \
                                        const ColonOptions&);                                    \
  template std::uint32_t tangent_multiplicity(const Polynomial<F>&, const Polynomial<F>&);
MULTLAB_GRADED_INSTANTIATE(PrimeField)
MULTLAB_GRADED_INSTANTIATE(RationalField)

}  // namespace multlab
