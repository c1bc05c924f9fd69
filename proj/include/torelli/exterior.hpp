#pragma once

// Exact symplectic vector space V = H_1 of a closed genus-g surface and the
// sparse exterior/symmetric algebra pieces (degrees 1..3, Sym^2) built on it.
//
// Basis order is fixed: slot i < g holds a_{i+1}, slot g + i holds b_{i+1},
// with a_i . b_i = 1 and every other basis pairing zero.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

class SymplecticSpace {
 public:
  /// Throws ValidationError for genus < 2.
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }

  /// Intersection number of basis vectors `i` and `j`.
  int pairing(int i, int j) const;

  /// "a1".."ag", "b1".."bg".
  std::string label(int slot) const;
  /// Inverse of label(); throws ParseError on unknown labels.
  int slot(std::string_view label) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  int genus_;
};

/// An element of V, stored densely.
class Vector {
 public:
  explicit Vector(const SymplecticSpace& space);
  Vector(const SymplecticSpace& space, std::vector<Rational> coords);

  static Vector basis(const SymplecticSpace& space, int slot);
  static Vector a(const SymplecticSpace& space, int i) { return basis(space, i - 1); }
  static Vector b(const SymplecticSpace& space, int i) { return basis(space, space.genus() + i - 1); }

  const SymplecticSpace& space() const { return space_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int slot) const { return coords_.at(static_cast<std::size_t>(slot)); }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& scale);

  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator-(Vector v) { return v *= Rational(-1); }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&);

 private:
  SymplecticSpace space_;
  std::vector<Rational> coords_;
};

/// Strictly increasing basis indices of a decomposable basis element; only
/// the first `degree` entries are meaningful, the rest are zero.
using Blade = std::array<int, 3>;

/// Sparse element of the exterior power of degree 1, 2 or 3.
class Multivector {
 public:
  Multivector(const SymplecticSpace& space, int degree);

  static Multivector from_vector(const Vector& v);
  /// e_{i0} ^ e_{i1} ^ ... in any order; the sign of the sorting permutation
  /// is absorbed into the coefficient, repeated indices give zero.
  static Multivector blade(const SymplecticSpace& space, std::vector<int> indices,
                           const Rational& coefficient = 1);

  const SymplecticSpace& space() const { return space_; }
  int degree() const { return degree_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coefficient(const Blade& blade) const;
  bool is_zero() const { return terms_.empty(); }

  /// Degree-1 only.
  Vector to_vector() const;

  /// Adds `coefficient` times the wedge of basis vectors `indices`.
  void add_term(std::vector<int> indices, const Rational& coefficient);

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& scale);

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
  friend Multivector operator-(Multivector v) { return v *= Rational(-1); }
  friend Multivector operator*(const Rational& s, Multivector v) { return v *= s; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  void accumulate(const Blade& blade, const Rational& coefficient);

  SymplecticSpace space_;
  int degree_;
  std::map<Blade, Rational> terms_;
};

/// Sparse element of Sym^2 V, keyed by index pairs (i <= j). The monomial
/// e_i e_j with i < j is the symmetric product, not half of it.
class Sym2Element {
 public:
  explicit Sym2Element(const SymplecticSpace& space);

  const SymplecticSpace& space() const { return space_; }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(int i, int j, const Rational& coefficient);

  Sym2Element& operator+=(const Sym2Element& other);
  Sym2Element& operator-=(const Sym2Element& other);
  Sym2Element& operator*=(const Rational& scale);

  friend Sym2Element operator+(Sym2Element lhs, const Sym2Element& rhs) { return lhs += rhs; }
  friend Sym2Element operator-(Sym2Element lhs, const Sym2Element& rhs) { return lhs -= rhs; }
  friend Sym2Element operator*(const Rational& s, Sym2Element v) { return v *= s; }
  friend bool operator==(const Sym2Element&, const Sym2Element&) = default;

 private:
  SymplecticSpace space_;
  std::map<std::pair<int, int>, Rational> terms_;
};

/// u^T J v.
Rational intersection(const Vector& u, const Vector& v);

/// delta = sum_i a_i ^ b_i.
Multivector delta(const SymplecticSpace& space);

/// Exterior product; throws DegreeError if the total degree exceeds 3.
Multivector wedge(const Multivector& x, const Multivector& y);
Multivector wedge(const Vector& u, const Vector& v);
Multivector wedge(const Vector& u, const Vector& v, const Vector& w);

/// Symmetric product u v in Sym^2 V.
Sym2Element sym_product(const Vector& u, const Vector& v);

/// Linear extension of u0^u1^u2 -> sum over i in Z/3 of (u_i . u_{i+1}) u_{i+2}.
Vector contraction3(const Multivector& x);

/// The component of x in the primitive summand (kernel of contraction3):
/// x - (1/(g-1)) delta ^ contraction3(x).
Multivector project_primitive(const Multivector& x);

/// w with x = project_primitive(x) + delta ^ w.
Vector delta_component(const Multivector& x);

bool is_primitive(const Multivector& x);

/// All blades of the given degree in lexicographic order.
std::vector<Blade> basis_blades(const SymplecticSpace& space, int degree);

/// Dense coordinates of x over basis_blades(space, degree).
std::vector<Rational> dense_coords(const Multivector& x);

/// Dimension of the primitive summand, computed two independent ways.
struct PrimitiveRank {
  int projector_image = 0;   ///< rank of project_primitive over the standard basis
  int isotropic_span = 0;    ///< rank of wedges of pairwise-isotropic triples
  int expected = 0;          ///< C(2g, 3) - 2g
  std::size_t isotropic_triples = 0;  ///< number of triples fed to the second rank
};

/// The isotropic triples are drawn from the vectors e_i and e_i +- e_j.
PrimitiveRank primitive_rank(const SymplecticSpace& space);

}  // namespace torelli
