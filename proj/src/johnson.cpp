#include "torelli/johnson.hpp"

#include <algorithm>

#include "torelli/render.hpp"

namespace torelli {

namespace {

std::string describe(const Vector& v) { return render(v); }

void check_pairing(const Vector& u, const Vector& v, const Rational& expected, const std::string& what) {
  const Rational got = intersection(u, v);
  if (got != expected)
    throw ValidationError(what + ": (" + describe(u) + ") . (" + describe(v) + ") = " + to_string(got) +
                          ", expected " + to_string(expected));
}

}  // namespace

void SubsurfaceSpec::validate() const {
  if (d.is_zero()) throw ValidationError("subsurface boundary class d is zero");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [e, f] = pairs[i];
    if (e.space() != d.space() || f.space() != d.space())
      throw DimensionError("subsurface classes live in different spaces");
    const std::string tag = "pair " + std::to_string(i + 1);
    check_pairing(d, e, 0, "d not in radical, " + tag + " e");
    check_pairing(d, f, 0, "d not in radical, " + tag + " f");
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto& [e2, f2] = pairs[j];
      check_pairing(e, f2, i == j ? 1 : 0, "e" + std::to_string(i + 1) + " . f" + std::to_string(j + 1));
      if (j > i) {
        check_pairing(e, e2, 0, "e" + std::to_string(i + 1) + " . e" + std::to_string(j + 1));
        check_pairing(f, f2, 0, "f" + std::to_string(i + 1) + " . f" + std::to_string(j + 1));
      }
    }
  }
}

void BoundingPairSpec::validate() const {
  side1.validate();
  side2.validate();
  if (side1.d.space() != side2.d.space()) throw DimensionError("bounding pair sides live in different spaces");
  if (!(side1.d + side2.d).is_zero())
    throw ValidationError("boundary classes do not cancel: d1 + d2 = " + describe(side1.d + side2.d));
  const int g = space().genus();
  if (side1.genus() + side2.genus() + 1 != g)
    throw ValidationError("side genera " + std::to_string(side1.genus()) + " + " + std::to_string(side2.genus()) +
                          " + 1 != " + std::to_string(g));
}

Multivector johnson_element(const SubsurfaceSpec& side) {
  side.validate();
  Multivector intersection_form(side.d.space(), 2);
  for (const auto& [e, f] : side.pairs) intersection_form += wedge(e, f);
  return wedge(Multivector::from_vector(side.d), intersection_form);
}

Multivector johnson_bp(const BoundingPairSpec& pair) {
  pair.validate();
  const Multivector j1 = johnson_element(pair.side1);
  const Multivector j2 = johnson_element(pair.side2);
  const Multivector d_delta = wedge(Multivector::from_vector(pair.side1.d), delta(pair.space()));
  if (j1 - j2 != d_delta)
    throw ValidationError("j(X') - j(X'') = " + render(j1 - j2) + " differs from d^delta = " + render(d_delta));
  Multivector projected = project_primitive(j1);
  if (projected != project_primitive(j2))
    throw ValidationError("the two sides of the bounding pair project to different primitive classes");
  return projected;
}

LinearMap bounding_pair_action_on_V(const BoundingPairSpec& pair) {
  pair.validate();
  return Transvection(pair.side1.d).matrix().compose(Transvection(pair.side2.d).inverse_matrix());
}

// ---------------------------------------------------------------------------

SubsurfaceSpec transform(const LinearMap& map, const SubsurfaceSpec& side) {
  SubsurfaceSpec out{map.apply(side.d), {}};
  for (const auto& [e, f] : side.pairs) out.pairs.emplace_back(map.apply(e), map.apply(f));
  return out;
}

BoundingPairSpec transform(const LinearMap& map, const BoundingPairSpec& pair) {
  return {transform(map, pair.side1), transform(map, pair.side2)};
}

BoundingPairSpec standard_bounding_pair(const SymplecticSpace& space, int h) {
  const int g = space.genus();
  if (h < 1 || h > g - 2)
    throw ValidationError("subsurface genus " + std::to_string(h) + " not in 1.." + std::to_string(g - 2));
  const Vector d = Vector::a(space, 1);
  BoundingPairSpec pair{{d, {}}, {-d, {}}};
  for (int i = 2; i <= g; ++i) {
    auto& side = i <= h + 1 ? pair.side1 : pair.side2;
    side.pairs.emplace_back(Vector::a(space, i), Vector::b(space, i));
  }
  return pair;
}

Fixture paper_figure_fixture() {
  const SymplecticSpace space(3);
  const Vector d = Vector::a(space, 1);
  const Vector a = Vector::a(space, 2);
  const Vector a_dual = Vector::b(space, 2);
  const Vector b = Vector::a(space, 3);
  const Vector c = Vector::b(space, 1);
  Fixture fx{
      "paper-figure-1",
      "genus 3; bounding pair d = a1, d' = -a1 cutting off a genus 1 subsurface with basis (a2, b2); "
      "isotropic curves a = a2 (inside), b = a3 (outside), c = b1 (crossing d and d')",
      BoundingPairSpec{{d, {{a, a_dual}}}, {-d, {{b, Vector::b(space, 3)}}}},
      {{"a", a}, {"a'", a_dual}, {"b", b}, {"c", c}, {"d", d}, {"d'", -d}},
      wedge(a, c, b),
  };
  return fx;
}

std::vector<std::string> fixture_names() { return {"paper-figure-1"}; }

Fixture fixture(const std::string& name) {
  if (name == "paper-figure-1") return paper_figure_fixture();
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace torelli
