#include "uipc/errors.hpp"
#include "uipc/interpolation.hpp"

namespace uipc {

Interpolator::Interpolator(Logic logic, std::string var)
    : logic_(logic), var_(std::move(var)) {
  if (is_classical(logic_))
    classical_ = std::make_unique<ClassicalInterpolator>(logic_, var_);
  else
    intuitionistic_ = std::make_unique<IntuitionisticInterpolator>(logic_, var_);
}

Interpolator::~Interpolator() = default;
Interpolator::Interpolator(Interpolator&&) noexcept = default;
Interpolator& Interpolator::operator=(Interpolator&&) noexcept = default;

FMultiset Interpolator::prepare(const FMultiset& m) const {
  if (!classical_) return m;
  std::vector<Formula> out;
  for (const Formula& f : m) out.push_back(desugar_classical(f));
  return FMultiset(std::move(out));
}

Sequent Interpolator::prepare(const Sequent& s) const {
  return Sequent{prepare(s.left), prepare(s.right)};
}

Formula Interpolator::A(const Sequent& s) {
  if (classical_) return classical_->a(prepare(s));
  return intuitionistic_->a(s);
}

Formula Interpolator::E(const FMultiset& gamma) {
  if (classical_) return classical_->e(prepare(gamma));
  return intuitionistic_->e(gamma);
}

Formula Interpolator::quantify(Quantifier q, const Formula& phi) {
  if (q == Quantifier::Forall) return A(Sequent{{}, FMultiset{phi}});
  if (classical_) return neg(A(Sequent{{}, FMultiset{neg(phi)}}));
  return E(FMultiset{phi});
}

Formula Interpolator::forall_sequent(const Sequent& s) {
  if (classical_) return A(s);
  return Formula::imp(E(s.left), A(s));
}

Formula quantify(Logic logic, Quantifier q, std::string_view p, const Formula& phi) {
  return Interpolator(logic, std::string(p)).quantify(q, phi);
}

}  // namespace uipc
