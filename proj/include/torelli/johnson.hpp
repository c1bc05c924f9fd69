#pragma once

// Johnson elements of subsurfaces and bounding pairs, given homologically.

#include <string>
#include <utility>
#include <vector>

#include "torelli/exterior.hpp"
#include "torelli/invariant_forms.hpp"
#include "torelli/linalg.hpp"

namespace torelli {

/// Homology of a subsurface X' with one boundary class d: the image of
/// H_1(X') in V is spanned by d (its radical) and a symplectic system
/// (e_i, f_i) that is a basis modulo d.
struct SubsurfaceSpec {
  Vector d;
  std::vector<std::pair<Vector, Vector>> pairs;

  int genus() const { return static_cast<int>(pairs.size()); }
  /// Throws ValidationError naming the first failing pairing.
  void validate() const;
};

/// The two complementary sides of a bounding pair; side2.d == -side1.d.
struct BoundingPairSpec {
  SubsurfaceSpec side1;
  SubsurfaceSpec side2;

  const SymplecticSpace& space() const { return side1.d.space(); }
  void validate() const;
  BoundingPairSpec swapped() const { return {side2, side1}; }
};

/// j(X') = d ^ sum_i e_i ^ f_i.
Multivector johnson_element(const SubsurfaceSpec& side);

/// Primitive projection of johnson_element(side1). Also checks
/// j(side1) - j(side2) = d ^ delta and that both sides project to the same
/// element; throws ValidationError otherwise.
Multivector johnson_bp(const BoundingPairSpec& pair);

/// tau_d o tau_{d'}^{-1} as a matrix on V.
LinearMap bounding_pair_action_on_V(const BoundingPairSpec& pair);

/// A named, self-contained configuration.
struct Fixture {
  std::string name;
  std::string description;
  BoundingPairSpec pair;
  std::vector<std::pair<std::string, Vector>> curves;  ///< named curve classes
  Multivector top;  ///< default primitive class to act on
};

/// Registered fixture names, sorted.
std::vector<std::string> fixture_names();
/// Throws ValidationError for unknown names.
Fixture fixture(const std::string& name);

/// The genus-3 bounding pair with d = a1, d' = -a1, X' of genus 1 spanned by
/// (a2, b2), and the isotropic curves a = a2, b = a3, c = b1.
Fixture paper_figure_fixture();

/// Bounding pair in genus g cutting off a subsurface of genus h (1 <= h <= g-2)
/// with d = a1: side1 carries handles 2..h+1, side2 the rest.
BoundingPairSpec standard_bounding_pair(const SymplecticSpace& space, int h);

/// Applies `map` to every class of the spec.
SubsurfaceSpec transform(const LinearMap& map, const SubsurfaceSpec& side);
BoundingPairSpec transform(const LinearMap& map, const BoundingPairSpec& pair);

}  // namespace torelli
