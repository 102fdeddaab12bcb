#include "multlab/localmodel.hpp"

#include <algorithm>
#include <optional>

namespace multlab {

template <ExactField F>
TruncatedModel<F>::TruncatedModel(std::shared_ptr<Workspace<F>> ws, std::uint32_t order)
    : ws_(std::move(ws)),
      order_(order),
      ambient_(order == 0 ? throw InputError("truncation order must be at least 1")
                          : ws_->ambient_dim(order)),
      j_(ws_->annihilator_image(order)) {
  position_.assign(ambient_, -1);
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (j_.has_pivot(i)) continue;
    position_[i] = static_cast<long>(basis_.size());
    basis_.push_back(i);
  }
  for (const auto& g : maximal_ideal_generators(ws_->ring(), ws_->field())) {
    generators_.push_back(multiplication_matrix(g));
  }
}

template <ExactField F>
std::vector<std::string> TruncatedModel<F>::basis_labels() const {
  std::vector<std::string> out;
  for (auto i : basis_) out.push_back(ws_->catalog().label(i));
  return out;
}

template <ExactField F>
std::vector<Exponents> TruncatedModel<F>::basis_exponents() const {
  std::vector<Exponents> out;
  for (auto i : basis_) out.push_back(ws_->catalog().exponents(i));
  return out;
}

template <ExactField F>
typename TruncatedModel<F>::Row TruncatedModel<F>::from_ambient(Row ambient) const {
  j_.reduce(ambient);
  Row out(basis_.size(), field().zero());
  for (std::size_t c = 0; c < basis_.size(); ++c) out[c] = ambient[basis_[c]];
  return out;
}

template <ExactField F>
typename TruncatedModel<F>::Row TruncatedModel<F>::to_ambient(const Row& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("model coordinate vector length");
  Row out(ambient_, field().zero());
  for (std::size_t c = 0; c < basis_.size(); ++c) out[basis_[c]] = coords[c];
  return out;
}

template <ExactField F>
Polynomial<F> TruncatedModel<F>::to_polynomial(const Row& coords) const {
  const Row amb = to_ambient(coords);
  Polynomial<F> out(field(), ws_->ring().element_vars());
  for (std::size_t i = 0; i < amb.size(); ++i) out.add_term(ws_->catalog().exponents(i), amb[i]);
  return out;
}

template <ExactField F>
Matrix<F> TruncatedModel<F>::multiplication_matrix(const Polynomial<F>& a) const {
  const auto sp = ws_->sparse(a, order_);
  Matrix<F> m(field(), basis_.size(), basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c) {
    const Row image = from_ambient(ws_->multiply_basis(sp, basis_[c], order_));
    for (std::size_t r = 0; r < basis_.size(); ++r) m(r, c) = image[r];
  }
  return m;
}

template <ExactField F>
typename TruncatedModel<F>::Row TruncatedModel<F>::element_vector(const Polynomial<F>& a) const {
  return from_ambient(ws_->dense(a, order_));
}

template <ExactField F>
TruncatedModel<F> build_model(const ModuleSpec<F>& spec, std::uint32_t order, Limits limits) {
  return TruncatedModel<F>(std::make_shared<Workspace<F>>(spec, limits), order);
}

template <ExactField F>
Subspace<F> ideal_power_subspace(const TruncatedModel<F>& model,
                                 const std::vector<Polynomial<F>>& gens, long k) {
  Subspace<F> s = Subspace<F>::full(model.field(), model.dim());
  if (k <= 0) return s;
  if (gens.empty()) throw InputError("ideal_power_subspace needs at least one generator");
  std::vector<Matrix<F>> mats;
  for (const auto& g : gens) mats.push_back(model.multiplication_matrix(g));
  for (long step = 0; step < k; ++step) {
    std::vector<typename Subspace<F>::Row> images;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const auto row = s.basis().row(r);
      for (const auto& m : mats) images.push_back(m.apply(row));
    }
    s = Subspace<F>::span_of(model.field(), model.dim(), images);
    if (s.dim() == 0) break;
  }
  return s;
}

template <ExactField F>
Subspace<F> colon_subspace(const TruncatedModel<F>& model, const Subspace<F>& w,
                           const Polynomial<F>& a) {
  return preimage_under(model.multiplication_matrix(a), w);
}

template <ExactField F>
LengthResult length_of_quotient(Workspace<F>& ws, const std::vector<Polynomial<F>>& gens, long k) {
  const CertifiedIdeal<F>& ideal = ws.ladder(gens).power(k);
  return {ideal.colength(), ideal.tail, ideal.certified_at};
}

template <ExactField F>
LengthResult length_of_quotient(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& gens,
                                long k, Limits limits) {
  Workspace<F> ws(spec, limits);
  return length_of_quotient(ws, gens, k);
}

template <ExactField F>
bool annihilator_is_zero(Workspace<F>& ws, const Polynomial<F>& a) {
  if (a.is_zero()) {
    // 0 :_M 0 = M, which vanishes only when J is the unit ideal.
    return ws.annihilator_image(1).rank() == 1;
  }
  // A itself is a domain.
  if (ws.spec().annihilator.empty()) return true;

  std::uint32_t deg_j = 0;
  for (const auto& j : ws.spec().annihilator) {
    if (!j.is_zero()) deg_j = std::max<std::uint32_t>(deg_j, j.degree());
  }
  const auto deg_a = static_cast<std::uint32_t>(a.degree());
  const std::uint32_t step = std::max<std::uint32_t>(2, deg_a);
  std::uint32_t ceiling = ws.limits().n_ceiling;
  if (ws.ring().is_curve()) ceiling += ws.ring().conductor() + ws.ring().min_generator_order();
  std::uint32_t n = std::max<std::uint32_t>(8, 2 * (deg_a + deg_j) + 2);

  std::optional<bool> previous;
  for (;;) {
    n = std::min(n, ceiling);
    TruncatedModel<F> model(ws, n);
    const Subspace<F> colon = kernel_basis(model.multiplication_matrix(a));
    const std::uint32_t low = n / 2;
    const std::size_t low_dim = ws.ambient_dim(low);
    const SemiEchelon<F> j_low = ws.annihilator_image(low);
    bool zero = true;
    for (std::size_t r = 0; r < colon.dim() && zero; ++r) {
      auto v = model.to_ambient(colon.basis().row_vector(r));
      v.resize(low_dim);
      zero = j_low.contains(std::move(v));
    }
    if (previous && *previous == zero) return zero;
    if (n >= ceiling) {
      throw NonStabilizing("the annihilator test for " + a.to_string() +
                           " did not settle up to truncation order " + std::to_string(ceiling));
    }
    previous = zero;
    n += step;
  }
}

template <ExactField F>
bool annihilator_is_zero(const ModuleSpec<F>& spec, const Polynomial<F>& a, Limits limits) {
  Workspace<F> ws(spec, limits);
  return annihilator_is_zero(ws, a);
}

#define MULTLAB_LOCALMODEL_INSTANTIATE(F)                                                       \
  template class TruncatedModel<F>;                                                             \
  template TruncatedModel<F> build_model(const ModuleSpec<F>&, std::uint32_t, Limits);          \
  template Subspace<F> ideal_power_subspace(const TruncatedModel<F>&,                           \
                                            const std::vector<Polynomial<F>>&, long);           \
  template Subspace<F> colon_subspace(const TruncatedModel<F>&, const Subspace<F>&,             \
                                      const Polynomial<F>&);                                    \
  template LengthResult length_of_quotient(Workspace<F>&, const std::vector<Polynomial<F>>&,    \
                                           long);                                               \
  template LengthResult length_of_quotient(const ModuleSpec<F>&,                                \
                                           const std::vector<Polynomial<F>>&, long, Limits);    \
  template bool annihilator_is_zero(Workspace<F>&, const Polynomial<F>&);                       \
  template bool annihilator_is_zero(const ModuleSpec<F>&, const Polynomial<F>&, Limits);
MULTLAB_LOCALMODEL_INSTANTIATE(PrimeField)
MULTLAB_LOCALMODEL_INSTANTIATE(RationalField)

}  // namespace multlab
