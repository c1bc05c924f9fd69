#include "torelli/invariant_forms.hpp"

namespace torelli {

namespace {

void require(const Multivector& x, int degree, const char* op) {
  if (x.degree() != degree)
    throw DegreeError(std::string(op) + " expects degree " + std::to_string(degree) + " arguments, got " +
                      std::to_string(x.degree()));
}

void require_same_space(const Multivector& x, const Multivector& y) {
  if (x.space() != y.space()) throw DimensionError("pairing arguments live in different spaces");
}

// q on basis blades (i^j, k^l).
int q_basis(const SymplecticSpace& sp, int i, int j, int k, int l) {
  return sp.pairing(i, k) * sp.pairing(j, l) - sp.pairing(i, l) * sp.pairing(j, k);
}

}  // namespace

Rational omega3(const Multivector& s, const Multivector& t) {
  require(s, 3, "omega3");
  require(t, 3, "omega3");
  require_same_space(s, t);
  const auto& sp = s.space();
  Rational total = 0;
  for (const auto& [u, cu] : s.terms()) {
    for (const auto& [v, cv] : t.terms()) {
      int m[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = sp.pairing(u[i], v[j]);
      const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      if (det != 0) total += det * cu * cv;
    }
  }
  return total;
}

Rational q2(const Multivector& x, const Multivector& y) {
  require(x, 2, "q2");
  require(y, 2, "q2");
  require_same_space(x, y);
  Rational total = 0;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      const int value = q_basis(x.space(), u[0], u[1], v[0], v[1]);
      if (value != 0) total += value * cu * cv;
    }
  return total;
}

Sym2Element phi(const Multivector& s, const Multivector& t) {
  require(s, 3, "phi");
  require(t, 3, "phi");
  require_same_space(s, t);
  const auto& sp = s.space();
  Sym2Element out(sp);
  for (const auto& [u, cu] : s.terms()) {
    for (const auto& [v, cv] : t.terms()) {
      const Rational c = cu * cv;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int value = q_basis(sp, u[i], u[(i + 1) % 3], v[j], v[(j + 1) % 3]);
          if (value != 0) out.add_term(u[(i + 2) % 3], v[(j + 2) % 3], value * c);
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Vector Transvection::apply(const Vector& x) const { return x + intersection(x, direction_) * direction_; }

LinearMap Transvection::matrix() const {
  std::vector<Vector> images;
  for (int i = 0; i < direction_.space().dim(); ++i) images.push_back(apply(Vector::basis(direction_.space(), i)));
  return LinearMap::from_images(images);
}

LinearMap Transvection::inverse_matrix() const {
  std::vector<Vector> images;
  for (int i = 0; i < direction_.space().dim(); ++i) {
    Vector e = Vector::basis(direction_.space(), i);
    images.push_back(e - intersection(e, direction_) * direction_);
  }
  return LinearMap::from_images(images);
}

Multivector apply_transvection(const Transvection& t, const Multivector& x) { return t.matrix().apply(x); }

Sym2Element apply_transvection(const Transvection& t, const Sym2Element& x) { return t.matrix().apply(x); }

RationalMatrix omega3_gram(const std::vector<Multivector>& basis) {
  RationalMatrix gram(basis.size(), RationalRow(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = omega3(basis[i], basis[j]);
  return gram;
}

std::vector<Multivector> primitive_basis(const SymplecticSpace& space) {
  std::vector<Multivector> out;
  const auto blades = basis_blades(space, 3);
  EchelonBasis echelon(blades.size());
  for (const auto& b : blades) {
    auto p = project_primitive(Multivector::blade(space, {b[0], b[1], b[2]}));
    if (echelon.insert(dense_coords(p))) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace torelli
