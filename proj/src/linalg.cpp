#include "torelli/linalg.hpp"

namespace torelli {

bool EchelonBasis::insert(RationalRow row) {
  if (row.size() != width_) throw DimensionError("row width mismatch in echelon basis");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    const auto& basis_row = rows_[r];
    for (std::size_t c = 0; c < width_; ++c)
      if (basis_row[c] != 0) row[c] -= factor * basis_row[c];
  }
  std::size_t pivot = 0;
  while (pivot < width_ && row[pivot] == 0) ++pivot;
  if (pivot == width_) return false;

  const Rational inv = 1 / row[pivot];
  for (auto& c : row) c *= inv;
  // keep the basis fully reduced so later inserts need one pass
  for (auto& basis_row : rows_) {
    if (basis_row[pivot] == 0) continue;
    const Rational factor = basis_row[pivot];
    for (std::size_t c = 0; c < width_; ++c)
      if (row[c] != 0) basis_row[c] -= factor * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const RationalMatrix& matrix) {
  if (matrix.empty()) return 0;
  EchelonBasis basis(matrix.front().size());
  for (const auto& row : matrix) basis.insert(row);
  return basis.rank();
}

// ---------------------------------------------------------------------------

LinearMap LinearMap::identity(const SymplecticSpace& space) {
  const auto n = static_cast<std::size_t>(space.dim());
  RationalMatrix m(n, RationalRow(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return LinearMap(space, std::move(m));
}

LinearMap LinearMap::from_images(const std::vector<Vector>& images) {
  if (images.empty()) throw DimensionError("linear map needs basis images");
  const auto& space = images.front().space();
  const auto n = static_cast<std::size_t>(space.dim());
  if (images.size() != n)
    throw DimensionError("linear map needs " + std::to_string(n) + " basis images, got " +
                         std::to_string(images.size()));
  RationalMatrix m(n, RationalRow(n));
  for (std::size_t col = 0; col < n; ++col) {
    if (images[col].space() != space) throw DimensionError("basis images live in different spaces");
    for (std::size_t row = 0; row < n; ++row) m[row][col] = images[col][static_cast<int>(row)];
  }
  return LinearMap(space, std::move(m));
}

const Rational& LinearMap::entry(int row, int col) const {
  return entries_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
}

Vector LinearMap::image(int slot) const {
  std::vector<Rational> coords;
  for (const auto& row : entries_) coords.push_back(row.at(static_cast<std::size_t>(slot)));
  return Vector(space_, std::move(coords));
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.space() != space_) throw DimensionError("linear map applied to vector of another space");
  const auto n = entries_.size();
  std::vector<Rational> coords(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (v[static_cast<int>(c)] != 0) coords[r] += entries_[r][c] * v[static_cast<int>(c)];
  return Vector(space_, std::move(coords));
}

Multivector LinearMap::apply(const Multivector& x) const {
  if (x.space() != space_) throw DimensionError("linear map applied to multivector of another space");
  Multivector out(space_, x.degree());
  for (const auto& [blade, c] : x.terms()) {
    Multivector term = Multivector::from_vector(image(blade[0]));
    for (int k = 1; k < x.degree(); ++k) term = wedge(term, Multivector::from_vector(image(blade[k])));
    out += c * term;
  }
  return out;
}

Sym2Element LinearMap::apply(const Sym2Element& x) const {
  if (x.space() != space_) throw DimensionError("linear map applied to Sym^2 element of another space");
  Sym2Element out(space_);
  for (const auto& [key, c] : x.terms()) out += c * sym_product(image(key.first), image(key.second));
  return out;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  if (other.space_ != space_) throw DimensionError("cannot compose maps on different spaces");
  const auto n = entries_.size();
  RationalMatrix m(n, RationalRow(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (entries_[r][k] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) m[r][c] += entries_[r][k] * other.entries_[k][c];
    }
  return LinearMap(space_, std::move(m));
}

bool LinearMap::is_identity() const { return *this == identity(space_); }

bool LinearMap::preserves_intersection() const {
  const int n = space_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersection(image(i), image(j)) != space_.pairing(i, j)) return false;
  return true;
}

}  // namespace torelli
