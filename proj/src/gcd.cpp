#include "multlab/gcd.hpp"

#include <algorithm>
#include <utility>

namespace multlab {

template <ExactField F>
void UPoly<F>::trim() {
  while (!c.empty() && field.is_zero(c.back())) c.pop_back();
}

namespace {

template <ExactField F>
UPoly<F> make_monic(UPoly<F> a) {
  a.trim();
  if (a.is_zero() || a.field.is_one(a.lead())) return a;
  const auto s = a.field.inv(a.lead());
  for (auto& x : a.c) x = a.field.mul(x, s);
  return a;
}

template <ExactField F>
UPoly<F> remainder(UPoly<F> a, const UPoly<F>& b) {
  const F& k = a.field;
  const auto inv = k.inv(b.lead());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto q = k.mul(a.lead(), inv);
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      a.c[i + shift] = k.sub(a.c[i + shift], k.mul(q, b.c[i]));
    }
    a.trim();
  }
  return a;
}

template <ExactField F>
UPoly<F> quotient(UPoly<F> a, const UPoly<F>& b) {
  const F& k = a.field;
  const auto inv = k.inv(b.lead());
  UPoly<F> q{k, {}};
  if (a.degree() < b.degree()) return q;
  q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, k.zero());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto t = k.mul(a.lead(), inv);
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    q.c[shift] = t;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      a.c[i + shift] = k.sub(a.c[i + shift], k.mul(t, b.c[i]));
    }
    a.trim();
  }
  q.trim();
  return q;
}

template <ExactField F>
UPoly<F> multiply(const UPoly<F>& a, const UPoly<F>& b) {
  const F& k = a.field;
  UPoly<F> out{k, {}};
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = k.add(out.c[i + j], k.mul(a.c[i], b.c[j]));
  out.trim();
  return out;
}

template <ExactField F>
UPoly<F> subtract(const UPoly<F>& a, const UPoly<F>& b) {
  const F& k = a.field;
  UPoly<F> out{k, std::vector<typename F::value_type>(std::max(a.c.size(), b.c.size()), k.zero())};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = k.sub(out.c[i], b.c[i]);
  out.trim();
  return out;
}

template <ExactField F>
Polynomial<F> normalize_graded(Polynomial<F> p) {
  if (p.is_zero()) return p;
  const auto& lead = p.terms().rbegin()->second;
  if (p.field().is_one(lead)) return p;
  return p.scaled(p.field().inv(lead));
}

template <ExactField F>
void require_two_vars(const Polynomial<F>& f, const char* where) {
  if (f.nvars() != 2) {
    throw PreconditionFailed(std::string(where) + " needs polynomials in exactly two variables");
  }
}

// f(x, 1) as a univariate polynomial in x.
template <ExactField F>
UPoly<F> dehomogenize(const Polynomial<F>& f) {
  UPoly<F> u{f.field(), {}};
  for (const auto& [e, c] : f.terms()) {
    if (u.c.size() <= e[0]) u.c.resize(e[0] + 1, f.field().zero());
    u.c[e[0]] = f.field().add(u.c[e[0]], c);
  }
  u.trim();
  return u;
}

// Bivariate polynomial as coefficients in y over F[x].
template <ExactField F>
using BPoly = std::vector<UPoly<F>>;

template <ExactField F>
BPoly<F> to_bpoly(const Polynomial<F>& f) {
  BPoly<F> b;
  for (const auto& [e, c] : f.terms()) {
    if (b.size() <= e[1]) b.resize(e[1] + 1, UPoly<F>{f.field(), {}});
    auto& u = b[e[1]];
    if (u.c.size() <= e[0]) u.c.resize(e[0] + 1, f.field().zero());
    u.c[e[0]] = c;
  }
  return b;
}

template <ExactField F>
void trim(BPoly<F>& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

template <ExactField F>
UPoly<F> content(const BPoly<F>& b, const F& k) {
  UPoly<F> g{k, {}};
  for (const auto& u : b) g = upoly_gcd(g, u);
  return g;
}

template <ExactField F>
BPoly<F> primitive_part(BPoly<F> b, const UPoly<F>& cont) {
  for (auto& u : b) {
    if (!u.is_zero()) u = quotient(u, cont);
  }
  return b;
}

// lc(b)^k * a reduced modulo b in y.
template <ExactField F>
BPoly<F> pseudo_remainder(BPoly<F> a, const BPoly<F>& b) {
  const UPoly<F>& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const UPoly<F> la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& u : a) u = multiply(u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = subtract(a[i + shift], multiply(la, b[i]));
    }
    trim(a);
  }
  return a;
}

}  // namespace

template <ExactField F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    UPoly<F> r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

template <ExactField F>
Polynomial<F> binary_form_gcd(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_two_vars(f, "binary_form_gcd");
  require_two_vars(g, "binary_form_gcd");
  if (f.is_zero() && g.is_zero()) throw InputError("binary_form_gcd of two zero forms");
  if (!f.is_homogeneous() || !g.is_homogeneous()) {
    throw PreconditionFailed("binary_form_gcd needs homogeneous inputs");
  }
  if (f.is_zero()) return normalize_graded(g);
  if (g.is_zero()) return normalize_graded(f);
  // f = y^s * F(x, y) with F(x, 1) of degree deg f - s.
  const UPoly<F> uf = dehomogenize(f);
  const UPoly<F> ug = dehomogenize(g);
  const long sf = f.degree() - uf.degree();
  const long sg = g.degree() - ug.degree();
  const UPoly<F> h = upoly_gcd(uf, ug);
  const long s = std::min(sf, sg);
  const long k = h.degree();
  Polynomial<F> out(f.field(), f.vars());
  for (long i = 0; i <= k; ++i) {
    out.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k - i + s)},
                 h.c[static_cast<std::size_t>(i)]);
  }
  return normalize_graded(out);
}

template <ExactField F>
Polynomial<F> bivariate_gcd(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_two_vars(f, "bivariate_gcd");
  require_two_vars(g, "bivariate_gcd");
  if (f.is_zero()) return normalize_graded(g);
  if (g.is_zero()) return normalize_graded(f);
  const F& k = f.field();
  BPoly<F> a = to_bpoly(f);
  BPoly<F> b = to_bpoly(g);
  const UPoly<F> ca = content(a, k);
  const UPoly<F> cb = content(b, k);
  const UPoly<F> c = upoly_gcd(ca, cb);
  a = primitive_part(std::move(a), ca);
  b = primitive_part(std::move(b), cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    BPoly<F> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    b = primitive_part(r, content(r, k));
  }
  // Either b vanished (gcd = a) or b has y-degree 0 (primitive gcd = 1).
  BPoly<F> g_pp;
  if (b.empty()) {
    g_pp = std::move(a);
  } else {
    g_pp = {UPoly<F>{k, {k.one()}}};
  }
  Polynomial<F> out(k, f.vars());
  for (std::size_t j = 0; j < g_pp.size(); ++j) {
    const UPoly<F> u = multiply(g_pp[j], c);
    for (std::size_t i = 0; i < u.c.size(); ++i) {
      out.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, u.c[i]);
    }
  }
  return normalize_graded(out);
}

template struct UPoly<PrimeField>;
template struct UPoly<RationalField>;
template UPoly<PrimeField> upoly_gcd(UPoly<PrimeField>, UPoly<PrimeField>);
template UPoly<RationalField> upoly_gcd(UPoly<RationalField>, UPoly<RationalField>);
template Polynomial<PrimeField> binary_form_gcd(const Polynomial<PrimeField>&,
                                                const Polynomial<PrimeField>&);
template Polynomial<RationalField> binary_form_gcd(const Polynomial<RationalField>&,
                                                   const Polynomial<RationalField>&);
template Polynomial<PrimeField> bivariate_gcd(const Polynomial<PrimeField>&,
                                              const Polynomial<PrimeField>&);
template Polynomial<RationalField> bivariate_gcd(const Polynomial<RationalField>&,
                                                 const Polynomial<RationalField>&);

}  // namespace multlab
