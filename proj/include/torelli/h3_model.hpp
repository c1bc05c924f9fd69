#pragma once

// Weight-graded model of the S3-invariant degree-3 homology of the
// configuration space of three points on a closed surface:
//
//   0 -> Q + Sym^2 V  -> H  -> (primitive part of wedge^3 V) -> 0
//
// An element is a triple (scalar, sym2, top). The Torelli group acts
// unipotently through its Johnson image t: the top part is fixed and the
// sub-part is shifted by (kappa1 * omega3(t, top), kappa2 * phi(t, top)).

#include <string>

#include "torelli/exterior.hpp"
#include "torelli/johnson.hpp"

namespace torelli {

class GradedH3Element {
 public:
  /// Throws ValidationError if `top` is not primitive.
  GradedH3Element(Rational scalar, Sym2Element sym2, Multivector top);
  static GradedH3Element zero(const SymplecticSpace& space);

  const SymplecticSpace& space() const { return sym2_.space(); }
  const Rational& scalar() const { return scalar_; }
  const Sym2Element& sym2() const { return sym2_; }
  const Multivector& top() const { return top_; }
  bool is_zero() const { return scalar_ == 0 && sym2_.is_zero() && top_.is_zero(); }

  GradedH3Element& operator+=(const GradedH3Element& other);
  GradedH3Element& operator-=(const GradedH3Element& other);
  friend GradedH3Element operator+(GradedH3Element lhs, const GradedH3Element& rhs) { return lhs += rhs; }
  friend GradedH3Element operator-(GradedH3Element lhs, const GradedH3Element& rhs) { return lhs -= rhs; }
  friend bool operator==(const GradedH3Element&, const GradedH3Element&) = default;

 private:
  Rational scalar_;
  Sym2Element sym2_;
  Multivector top_;
};

/// Weight tags of the pieces, as seen in cohomology.
inline constexpr std::string_view kSubWeightTag = "weight 4 (dual: Sym^2 V^vee(-1) quotient)";
inline constexpr std::string_view kTopWeightTag = "weight 3 (dual: primitive wedge^3 V^vee sub, pure)";

/// Coefficients of the two components of the Johnson-group action.
struct TorelliParams {
  Rational kappa1 = 0;
  /// Sign normalising the canonical fixture's variation to +a2·a3.
  Rational kappa2 = kDefaultKappa2;

  static const Rational kDefaultKappa2;
  /// Throws ValidationError when kappa2 == 0.
  void validate() const;
};

/// The tube map, modelled as inclusion of the sub: (s, x, 0).
GradedH3Element lift_tube(const Sym2Element& x, const Rational& s);

/// Element with zero sub-part and the given primitive top.
GradedH3Element lift_top(const Multivector& top);

/// Action of the Johnson-group element `t` (must be primitive).
GradedH3Element act(const Multivector& t, const GradedH3Element& m, const TorelliParams& params);

/// act(johnson_bp(pair), m) - m for m = lift_top(top).
GradedH3Element variation(const BoundingPairSpec& pair, const Multivector& top, const TorelliParams& params);

struct DimensionAudit {
  int genus = 0;
  int sub = 0;        ///< 1 + dim Sym^2 V
  int sym2 = 0;       ///< g(2g+1)
  int quotient = 0;   ///< primitive rank
  int total = 0;
  PrimitiveRank rank;
  bool ranks_agree = false;  ///< projector image, isotropic span and C(2g,3) - 2g coincide
};

DimensionAudit dimension_audit(const SymplecticSpace& space);

}  // namespace torelli
