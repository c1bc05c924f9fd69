#include "torelli/h3_model.hpp"

#include "torelli/invariant_forms.hpp"

namespace torelli {

// phi(j(d,d'), a^c^b) = -a2·a3 on the canonical fixture.
const Rational TorelliParams::kDefaultKappa2 = -1;

void TorelliParams::validate() const {
  if (kappa2 == 0) throw ValidationError("kappa2 must be nonzero");
}

GradedH3Element::GradedH3Element(Rational scalar, Sym2Element sym2, Multivector top)
    : scalar_(std::move(scalar)), sym2_(std::move(sym2)), top_(std::move(top)) {
  if (top_.degree() != 3) throw DegreeError("top component must have degree 3");
  if (top_.space() != sym2_.space()) throw DimensionError("graded components live in different spaces");
  if (!is_primitive(top_)) throw ValidationError("top component is not primitive");
}

GradedH3Element GradedH3Element::zero(const SymplecticSpace& space) {
  return {0, Sym2Element(space), Multivector(space, 3)};
}

GradedH3Element& GradedH3Element::operator+=(const GradedH3Element& other) {
  scalar_ += other.scalar_;
  sym2_ += other.sym2_;
  top_ += other.top_;
  return *this;
}

GradedH3Element& GradedH3Element::operator-=(const GradedH3Element& other) {
  scalar_ -= other.scalar_;
  sym2_ -= other.sym2_;
  top_ -= other.top_;
  return *this;
}

GradedH3Element lift_tube(const Sym2Element& x, const Rational& s) {
  return {s, x, Multivector(x.space(), 3)};
}

GradedH3Element lift_top(const Multivector& top) { return {0, Sym2Element(top.space()), top}; }

GradedH3Element act(const Multivector& t, const GradedH3Element& m, const TorelliParams& params) {
  params.validate();
  if (t.degree() != 3) throw DegreeError("Johnson-group element must have degree 3");
  if (!is_primitive(t)) throw ValidationError("Johnson-group element is not primitive");
  Rational scalar = m.scalar();
  if (params.kappa1 != 0) scalar += params.kappa1 * omega3(t, m.top());
  Sym2Element sym2 = m.sym2() + params.kappa2 * phi(t, m.top());
  return {std::move(scalar), std::move(sym2), m.top()};
}

GradedH3Element variation(const BoundingPairSpec& pair, const Multivector& top, const TorelliParams& params) {
  const Multivector t = johnson_bp(pair);
  const GradedH3Element m = lift_top(top);
  return act(t, m, params) - m;
}

DimensionAudit dimension_audit(const SymplecticSpace& space) {
  DimensionAudit audit;
  const int g = space.genus();
  audit.genus = g;
  audit.sym2 = g * (2 * g + 1);
  audit.sub = 1 + audit.sym2;
  audit.rank = primitive_rank(space);
  audit.quotient = audit.rank.projector_image;
  audit.total = audit.sub + audit.quotient;
  audit.ranks_agree = audit.rank.projector_image == audit.rank.isotropic_span &&
                      audit.rank.projector_image == audit.rank.expected;
  return audit;
}

}  // namespace torelli
