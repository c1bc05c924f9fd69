#include "torelli/random.hpp"

#include "torelli/invariant_forms.hpp"

namespace torelli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Symplectic change of basis of one side: transvections along classes in
// the span of its pairs preserve the side's span and pairings.
SubsurfaceSpec rebase(Rng& rng, SubsurfaceSpec side) {
  const auto& space = side.d.space();
  for (int step = 0; step < 3; ++step) {
    Vector direction(space);
    for (const auto& [e, f] : side.pairs) direction += uniform(rng, -1, 1) * e + uniform(rng, -1, 1) * f;
    if (direction.is_zero()) continue;
    const Transvection t(direction);
    for (auto& [e, f] : side.pairs) {
      e = t.apply(e);
      f = t.apply(f);
    }
  }
  for (auto& [e, f] : side.pairs) {
    e += uniform(rng, -2, 2) * side.d;
    f += uniform(rng, -2, 2) * side.d;
  }
  return side;
}

}  // namespace

Rational random_rational(Rng& rng, int max_num, int max_den) {
  Rational r(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

Vector random_vector(Rng& rng, const SymplecticSpace& space) {
  std::vector<Rational> coords;
  for (int i = 0; i < space.dim(); ++i) coords.push_back(random_rational(rng));
  return Vector(space, std::move(coords));
}

Vector random_integral_vector(Rng& rng, const SymplecticSpace& space, int bound) {
  for (;;) {
    std::vector<Rational> coords;
    for (int i = 0; i < space.dim(); ++i) coords.emplace_back(uniform(rng, -bound, bound));
    Vector v(space, std::move(coords));
    if (!v.is_zero()) return v;
  }
}

Multivector random_multivector(Rng& rng, const SymplecticSpace& space, int degree, double density) {
  std::bernoulli_distribution keep(density);
  Multivector x(space, degree);
  for (const auto& b : basis_blades(space, degree))
    if (keep(rng)) x.add_term(std::vector<int>(b.begin(), b.begin() + degree), random_rational(rng));
  return x;
}

Multivector random_primitive(Rng& rng, const SymplecticSpace& space, double density) {
  return project_primitive(random_multivector(rng, space, 3, density));
}

Sym2Element random_sym2(Rng& rng, const SymplecticSpace& space, double density) {
  std::bernoulli_distribution keep(density);
  Sym2Element x(space);
  for (int i = 0; i < space.dim(); ++i)
    for (int j = i; j < space.dim(); ++j)
      if (keep(rng)) x.add_term(i, j, random_rational(rng));
  return x;
}

LinearMap random_symplectic_map(Rng& rng, const SymplecticSpace& space, int steps) {
  LinearMap m = LinearMap::identity(space);
  for (int i = 0; i < steps; ++i) {
    const Transvection t(random_integral_vector(rng, space, 1));
    m = (uniform(rng, 0, 1) == 0 ? t.matrix() : t.inverse_matrix()).compose(m);
  }
  return m;
}

BoundingPairSpec random_bounding_pair(Rng& rng, const SymplecticSpace& space) {
  const int h = uniform(rng, 1, space.genus() - 2);
  BoundingPairSpec pair = transform(random_symplectic_map(rng, space), standard_bounding_pair(space, h));
  pair.side1 = rebase(rng, pair.side1);
  pair.side2 = rebase(rng, pair.side2);
  return pair;
}

}  // namespace torelli
