#pragma once

// The Sp(V)-invariant pairings used to describe the Johnson-group action:
// the symplectic form omega3 on the third exterior power, the symmetric form
// q on the second, and the Sym^2 V valued pairing phi.

#include "torelli/exterior.hpp"
#include "torelli/linalg.hpp"

namespace torelli {

/// (u0^u1^u2, v0^v1^v2) -> sum over S3 of sign(t) prod_i (u_i . v_t(i)),
/// i.e. det[u_i . v_j], extended bilinearly.
Rational omega3(const Multivector& s, const Multivector& t);

/// (u^u', v^v') -> (u.v)(u'.v') - (u.v')(u'.v).
Rational q2(const Multivector& x, const Multivector& y);

/// (u0^u1^u2, v0^v1^v2) -> sum over i, j in Z/3 of
/// q(u_i^u_{i+1}, v_j^v_{j+1}) u_{i+2} v_{j+2}.
Sym2Element phi(const Multivector& s, const Multivector& t);

/// Symplectic transvection x -> x + (x . c) c, the action of a Dehn twist
/// about a curve of class c on V.
class Transvection {
 public:
  explicit Transvection(Vector direction) : direction_(std::move(direction)) {}

  const Vector& direction() const { return direction_; }

  Vector apply(const Vector& x) const;
  LinearMap matrix() const;
  /// x -> x - (x . c) c.
  LinearMap inverse_matrix() const;

 private:
  Vector direction_;
};

Multivector apply_transvection(const Transvection& t, const Multivector& x);
Sym2Element apply_transvection(const Transvection& t, const Sym2Element& x);

/// Gram matrix of omega3 on `basis`.
RationalMatrix omega3_gram(const std::vector<Multivector>& basis);

/// A basis of the primitive summand: the independent projections of the
/// standard degree-3 blades.
std::vector<Multivector> primitive_basis(const SymplecticSpace& space);

}  // namespace torelli
