#pragma once

#include <cstddef>
#include <vector>

#include "torelli/exterior.hpp"
#include "torelli/rational.hpp"

namespace torelli {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// Incrementally built reduced row echelon basis over Q.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Reduces `row` against the basis; keeps it and returns true if it was
  /// independent.
  bool insert(RationalRow row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<RationalRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(const RationalMatrix& matrix);

/// A linear endomorphism of V, acting functorially on exterior and symmetric
/// powers. Column j is the image of basis vector j.
class LinearMap {
 public:
  static LinearMap identity(const SymplecticSpace& space);
  /// Columns are the images of the basis vectors.
  static LinearMap from_images(const std::vector<Vector>& images);

  const SymplecticSpace& space() const { return space_; }
  const Rational& entry(int row, int col) const;
  Vector image(int slot) const;

  Vector apply(const Vector& v) const;
  Multivector apply(const Multivector& x) const;
  Sym2Element apply(const Sym2Element& x) const;

  /// (this o other)(v) = this(other(v)).
  LinearMap compose(const LinearMap& other) const;

  bool is_identity() const;
  /// Checks J(Mu, Mv) = J(u, v) on all basis pairs.
  bool preserves_intersection() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  LinearMap(const SymplecticSpace& space, RationalMatrix entries)
      : space_(space), entries_(std::move(entries)) {}

  SymplecticSpace space_;
  RationalMatrix entries_;  // entries_[row][col]
};

}  // namespace torelli
