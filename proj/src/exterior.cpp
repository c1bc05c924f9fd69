#include "torelli/exterior.hpp"

#include <algorithm>
#include <charconv>

#include "torelli/linalg.hpp"

namespace torelli {

// ---------------------------------------------------------------------------
// SymplecticSpace

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 2) throw ValidationError("genus must be at least 2, got " + std::to_string(genus));
}

int SymplecticSpace::pairing(int i, int j) const {
  if (i < genus_ && j == i + genus_) return 1;
  if (j < genus_ && i == j + genus_) return -1;
  return 0;
}

std::string SymplecticSpace::label(int slot) const {
  if (slot < 0 || slot >= dim()) throw DimensionError("basis slot " + std::to_string(slot) + " out of range");
  return slot < genus_ ? "a" + std::to_string(slot + 1) : "b" + std::to_string(slot - genus_ + 1);
}

int SymplecticSpace::slot(std::string_view label) const {
  if (label.size() < 2 || (label[0] != 'a' && label[0] != 'b'))
    throw ParseError("unknown basis label '" + std::string(label) + "'");
  int index = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits[0] == '0' || index < 1 ||
      index > genus_)
    throw ParseError("unknown basis label '" + std::string(label) + "' for genus " + std::to_string(genus_));
  return label[0] == 'a' ? index - 1 : genus_ + index - 1;
}

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(const SymplecticSpace& space) : space_(space), coords_(static_cast<std::size_t>(space.dim())) {}

Vector::Vector(const SymplecticSpace& space, std::vector<Rational> coords)
    : space_(space), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(space_.dim()))
    throw DimensionError("vector has " + std::to_string(coords_.size()) + " coordinates, expected " +
                         std::to_string(space_.dim()));
}

Vector Vector::basis(const SymplecticSpace& space, int slot) {
  if (slot < 0 || slot >= space.dim()) throw DimensionError("basis slot " + std::to_string(slot) + " out of range");
  Vector v(space);
  v.coords_[static_cast<std::size_t>(slot)] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Vector& Vector::operator+=(const Vector& other) {
  if (space_ != other.space_) throw DimensionError("vectors live in different spaces");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (space_ != other.space_) throw DimensionError("vectors live in different spaces");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& scale) {
  for (auto& c : coords_) c *= scale;
  return *this;
}

bool operator==(const Vector& lhs, const Vector& rhs) {
  return lhs.space_ == rhs.space_ && lhs.coords_ == rhs.coords_;
}

// ---------------------------------------------------------------------------
// Multivector

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > 3)
    throw DegreeError("exterior degree " + std::to_string(degree) + " unsupported (1..3)");
}

void require_degree(const Multivector& x, int degree, const char* op) {
  if (x.degree() != degree)
    throw DegreeError(std::string(op) + " expects degree " + std::to_string(degree) + ", got " +
                      std::to_string(x.degree()));
}

void require_same_space(const SymplecticSpace& lhs, const SymplecticSpace& rhs) {
  if (lhs != rhs)
    throw DimensionError("operands live in genus " + std::to_string(lhs.genus()) + " and genus " +
                         std::to_string(rhs.genus()));
}

// Sorts `indices` in place; returns the sign of the sorting permutation, or 0
// if an index repeats.
int sort_with_sign(std::vector<int>& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i]) return 0;
  return sign;
}

}  // namespace

Multivector::Multivector(const SymplecticSpace& space, int degree) : space_(space), degree_(degree) {
  check_degree(degree);
}

Multivector Multivector::from_vector(const Vector& v) {
  Multivector x(v.space(), 1);
  for (int i = 0; i < v.space().dim(); ++i)
    if (v[i] != 0) x.terms_.emplace(Blade{i, 0, 0}, v[i]);
  return x;
}

Multivector Multivector::blade(const SymplecticSpace& space, std::vector<int> indices, const Rational& coefficient) {
  Multivector x(space, static_cast<int>(indices.size()));
  x.add_term(std::move(indices), coefficient);
  return x;
}

Rational Multivector::coefficient(const Blade& blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vector Multivector::to_vector() const {
  require_degree(*this, 1, "to_vector");
  std::vector<Rational> coords(static_cast<std::size_t>(space_.dim()));
  for (const auto& [blade, c] : terms_) coords[static_cast<std::size_t>(blade[0])] = c;
  return Vector(space_, std::move(coords));
}

void Multivector::add_term(std::vector<int> indices, const Rational& coefficient) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DegreeError("term of degree " + std::to_string(indices.size()) + " added to degree " +
                      std::to_string(degree_) + " multivector");
  for (int i : indices)
    if (i < 0 || i >= space_.dim()) throw DimensionError("basis index " + std::to_string(i) + " out of range");
  int sign = sort_with_sign(indices);
  if (sign == 0 || coefficient == 0) return;
  Blade blade{0, 0, 0};
  std::copy(indices.begin(), indices.end(), blade.begin());
  accumulate(blade, sign > 0 ? coefficient : Rational(-coefficient));
}

void Multivector::accumulate(const Blade& blade, const Rational& coefficient) {
  auto [it, inserted] = terms_.try_emplace(blade, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_space(space_, other.space_);
  if (degree_ != other.degree_) throw DegreeError("cannot add multivectors of different degree");
  for (const auto& [blade, c] : other.terms_) accumulate(blade, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_space(space_, other.space_);
  if (degree_ != other.degree_) throw DegreeError("cannot subtract multivectors of different degree");
  for (const auto& [blade, c] : other.terms_) accumulate(blade, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [blade, c] : terms_) c *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// Sym2Element

Sym2Element::Sym2Element(const SymplecticSpace& space) : space_(space) {}

Rational Sym2Element::coefficient(int i, int j) const {
  auto it = terms_.find(std::minmax(i, j));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Sym2Element::add_term(int i, int j, const Rational& coefficient) {
  if (i < 0 || j < 0 || i >= space_.dim() || j >= space_.dim())
    throw DimensionError("basis index out of range in Sym^2 term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::minmax(i, j), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Sym2Element& Sym2Element::operator+=(const Sym2Element& other) {
  require_same_space(space_, other.space_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

Sym2Element& Sym2Element::operator-=(const Sym2Element& other) {
  require_same_space(space_, other.space_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

Sym2Element& Sym2Element::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// Operations

Rational intersection(const Vector& u, const Vector& v) {
  require_same_space(u.space(), v.space());
  const int g = u.space().genus();
  Rational sum = 0;
  for (int i = 0; i < g; ++i) sum += u[i] * v[g + i] - u[g + i] * v[i];
  return sum;
}

Multivector delta(const SymplecticSpace& space) {
  Multivector d(space, 2);
  for (int i = 0; i < space.genus(); ++i) d.add_term({i, space.genus() + i}, 1);
  return d;
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  require_same_space(x.space(), y.space());
  const int degree = x.degree() + y.degree();
  if (degree > 3)
    throw DegreeError("wedge of degrees " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()) +
                      " exceeds degree 3");
  Multivector out(x.space(), degree);
  std::vector<int> indices;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      indices.assign(bx.begin(), bx.begin() + x.degree());
      indices.insert(indices.end(), by.begin(), by.begin() + y.degree());
      out.add_term(indices, cx * cy);
    }
  }
  return out;
}

Multivector wedge(const Vector& u, const Vector& v) {
  return wedge(Multivector::from_vector(u), Multivector::from_vector(v));
}

Multivector wedge(const Vector& u, const Vector& v, const Vector& w) {
  return wedge(wedge(u, v), Multivector::from_vector(w));
}

Sym2Element sym_product(const Vector& u, const Vector& v) {
  require_same_space(u.space(), v.space());
  Sym2Element out(u.space());
  const int n = u.space().dim();
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) out.add_term(i, j, u[i] * v[j]);
  }
  return out;
}

Vector contraction3(const Multivector& x) {
  require_degree(x, 3, "contraction3");
  const auto& space = x.space();
  std::vector<Rational> coords(static_cast<std::size_t>(space.dim()));
  for (const auto& [blade, c] : x.terms()) {
    for (int i = 0; i < 3; ++i) {
      int p = space.pairing(blade[i], blade[(i + 1) % 3]);
      if (p != 0) coords[static_cast<std::size_t>(blade[(i + 2) % 3])] += p * c;
    }
  }
  return Vector(space, std::move(coords));
}

Vector delta_component(const Multivector& x) {
  Vector w = contraction3(x);
  w *= Rational(1, x.space().genus() - 1);
  return w;
}

Multivector project_primitive(const Multivector& x) {
  return x - wedge(delta(x.space()), Multivector::from_vector(delta_component(x)));
}

bool is_primitive(const Multivector& x) { return contraction3(x).is_zero(); }

std::vector<Blade> basis_blades(const SymplecticSpace& space, int degree) {
  check_degree(degree);
  std::vector<Blade> out;
  const int n = space.dim();
  for (int i = 0; i < n; ++i) {
    if (degree == 1) {
      out.push_back({i, 0, 0});
      continue;
    }
    for (int j = i + 1; j < n; ++j) {
      if (degree == 2) {
        out.push_back({i, j, 0});
        continue;
      }
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

std::vector<Rational> dense_coords(const Multivector& x) {
  auto blades = basis_blades(x.space(), x.degree());
  std::vector<Rational> out;
  out.reserve(blades.size());
  for (const auto& b : blades) out.push_back(x.coefficient(b));
  return out;
}

PrimitiveRank primitive_rank(const SymplecticSpace& space) {
  const int n = space.dim();
  const auto blades = basis_blades(space, 3);
  PrimitiveRank result;
  result.expected = static_cast<int>(blades.size()) - n;

  EchelonBasis image(blades.size());
  for (const auto& b : blades)
    image.insert(dense_coords(project_primitive(Multivector::blade(space, {b[0], b[1], b[2]}))));
  result.projector_image = static_cast<int>(image.rank());

  std::vector<Vector> candidates;
  for (int i = 0; i < n; ++i) candidates.push_back(Vector::basis(space, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      candidates.push_back(Vector::basis(space, i) + Vector::basis(space, j));
      candidates.push_back(Vector::basis(space, i) - Vector::basis(space, j));
    }
  const std::size_t m = candidates.size();
  std::vector<std::vector<Rational>> gram(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = intersection(candidates[i], candidates[j]);

  EchelonBasis span(blades.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (gram[i][j] != 0) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (gram[i][k] != 0 || gram[j][k] != 0) continue;
        auto w = wedge(candidates[i], candidates[j], candidates[k]);
        if (w.is_zero()) continue;
        ++result.isotropic_triples;
        span.insert(dense_coords(w));
      }
    }
  result.isotropic_span = static_cast<int>(span.rank());
  return result;
}

}  // namespace torelli
