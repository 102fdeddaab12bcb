#include "multlab/bezout.hpp"

#include "multlab/gcd.hpp"
#include "multlab/graded.hpp"

namespace multlab {

namespace {

template <ExactField F>
void check_plane(const Workspace<F>& ws) {
  if (ws.ring().is_curve() || ws.ring().element_vars().size() != 2) {
    throw InputError("bezout needs the two-variable local ring k[x, y] at the origin");
  }
  if (!ws.spec().annihilator.empty()) throw InputError("bezout works on A itself, not on A/J");
}

template <ExactField F>
Workspace<F> plane_workspace(const Polynomial<F>& f, Limits limits) {
  return Workspace<F>(ring_module(RingSpec::poly_local(f.vars()), f.field()), limits);
}

}  // namespace

template <ExactField F>
std::size_t intersection_multiplicity(Workspace<F>& ws, const Polynomial<F>& f,
                                      const Polynomial<F>& g) {
  check_plane(ws);
  for (const auto* p : {&f, &g}) {
    if (!ws.field().is_zero(p->constant_term())) {
      throw NotAtOrigin(p->to_string() + " does not vanish at the origin");
    }
  }
  if (f.is_zero() || g.is_zero()) {
    throw CommonComponent("one of the curves is 0, so they share every component");
  }
  const Polynomial<F> h = bivariate_gcd(f, g);
  if (h.degree() >= 1 && ws.field().is_zero(h.constant_term())) {
    throw CommonComponent(f.to_string() + " and " + g.to_string() + " share the component " +
                          h.to_string() + " through the origin");
  }
  return ws.colength({{f, nullptr}, {g, nullptr}}, 0, true);
}

template <ExactField F>
std::size_t intersection_multiplicity(const Polynomial<F>& f, const Polynomial<F>& g,
                                      Limits limits) {
  Workspace<F> ws = plane_workspace(f, limits);
  return intersection_multiplicity(ws, f, g);
}

template <ExactField F>
BezoutReport classify(Workspace<F>& ws, const Polynomial<F>& f, const Polynomial<F>& g) {
  BezoutReport r;
  r.f = f.to_string();
  r.g = g.to_string();
  r.mu = intersection_multiplicity(ws, f, g);
  r.c = static_cast<std::uint32_t>(f.order());
  r.d = static_cast<std::uint32_t>(g.order());
  r.t = tangent_multiplicity(f, g);
  r.transversal = r.t == 0;
  r.bound = static_cast<std::size_t>(r.c) * r.d + r.t;
  r.equality = r.mu == r.bound;
  if (r.mu < r.bound) {
    throw PropertyViolation("intersection multiplicity " + std::to_string(r.mu) +
                            " is below c*d + t = " + std::to_string(r.bound));
  }
  if (r.transversal && !r.equality) {
    throw PropertyViolation("transversal curves with multiplicity " + std::to_string(r.mu) +
                            " != c*d = " + std::to_string(r.bound));
  }
  return r;
}

template <ExactField F>
BezoutReport classify(const Polynomial<F>& f, const Polynomial<F>& g, Limits limits) {
  Workspace<F> ws = plane_workspace(f, limits);
  return classify(ws, f, g);
}

#define MULTLAB_BEZOUT_INSTANTIATE(F)                                                             \
  template std::size_t intersection_multiplicity(Workspace<F>&, const Polynomial<F>&,             \
                                                 const Polynomial<F>&);                           \
  template std::size_t intersection_multiplicity(const Polynomial<F>&, const Polynomial<F>&,      \
                                                 Limits);                                         \
  template BezoutReport classify(Workspace<F>&, const Polynomial<F>&, const Polynomial<F>&);      \
  template BezoutReport classify(const Polynomial<F>&, const Polynomial<F>&, Limits);
MULTLAB_BEZOUT_INSTANTIATE(PrimeField)
MULTLAB_BEZOUT_INSTANTIATE(RationalField)

}  // namespace multlab
