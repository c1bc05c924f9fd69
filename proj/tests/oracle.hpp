#pragma once

// Test-only reference computations. Everything here works on dense,
// fully antisymmetrized tensors and an explicit intersection matrix, never
// on the library's sorted sparse blades, so it checks the library by an
// independent route.

#include <algorithm>
#include <array>
#include <vector>

#include "torelli/exterior.hpp"

namespace oracle {

using torelli::Rational;

struct Tensor3 {
  int n;
  std::vector<Rational> data;  // n^3

  explicit Tensor3(int dim) : n(dim), data(static_cast<std::size_t>(dim * dim * dim)) {}
  Rational& at(int i, int j, int k) { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const Rational& at(int i, int j, int k) const { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

struct Tensor2 {
  int n;
  std::vector<Rational> data;

  explicit Tensor2(int dim) : n(dim), data(static_cast<std::size_t>(dim * dim)) {}
  Rational& at(int i, int j) { return data[static_cast<std::size_t>(i * n + j)]; }
  const Rational& at(int i, int j) const { return data[static_cast<std::size_t>(i * n + j)]; }
};

inline std::vector<std::vector<int>> intersection_matrix(int genus) {
  const int n = 2 * genus;
  std::vector<std::vector<int>> j(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < genus; ++i) {
    j[static_cast<std::size_t>(i)][static_cast<std::size_t>(genus + i)] = 1;
    j[static_cast<std::size_t>(genus + i)][static_cast<std::size_t>(i)] = -1;
  }
  return j;
}

// e_i ^ e_j ^ e_k  ->  sum over S3 of sign * e_s(i) (x) e_s(j) (x) e_s(k)
inline Tensor3 to_tensor(const torelli::Multivector& x) {
  Tensor3 t(x.space().dim());
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  for (const auto& [b, c] : x.terms())
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const auto& s = perms[p];
      t.at(b[s[0]], b[s[1]], b[s[2]]) += p < 3 ? c : Rational(-c);
    }
  return t;
}

inline Tensor2 to_tensor2(const torelli::Multivector& x) {
  Tensor2 t(x.space().dim());
  for (const auto& [b, c] : x.terms()) {
    t.at(b[0], b[1]) += c;
    t.at(b[1], b[0]) -= c;
  }
  return t;
}

// Tensor of the wedge of three explicit vectors, from their coordinates.
inline Tensor3 wedge_tensor(const torelli::Vector& u, const torelli::Vector& v, const torelli::Vector& w) {
  const int n = u.space().dim();
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // det of the 3x3 minor picks up every signed permutation
        t.at(i, j, k) = u[i] * (v[j] * w[k] - v[k] * w[j]) - u[j] * (v[i] * w[k] - v[k] * w[i]) +
                        u[k] * (v[i] * w[j] - v[j] * w[i]);
      }
  return t;
}

// Coefficient of the sorted blade (i<j<k) read back out of a tensor.
inline torelli::Multivector from_tensor(const torelli::SymplecticSpace& sp, const Tensor3& t) {
  torelli::Multivector x(sp, 3);
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      for (int k = j + 1; k < t.n; ++k) x.add_term({i, j, k}, t.at(i, j, k));
  return x;
}

// (1/2) sum_{p,q} J_pq T[p][q][m]
inline std::vector<Rational> contraction(const Tensor3& t, int genus) {
  const auto j = intersection_matrix(genus);
  std::vector<Rational> out(static_cast<std::size_t>(t.n));
  for (int m = 0; m < t.n; ++m) {
    Rational s = 0;
    for (int p = 0; p < t.n; ++p)
      for (int q = 0; q < t.n; ++q)
        if (j[p][q] != 0) s += j[p][q] * t.at(p, q, m);
    out[static_cast<std::size_t>(m)] = s / 2;
  }
  return out;
}

// (1/6) sum T_s[p0 p1 p2] T_t[q0 q1 q2] J_p0q0 J_p1q1 J_p2q2
inline Rational omega3(const Tensor3& s, const Tensor3& t, int genus) {
  const auto j = intersection_matrix(genus);
  const int n = s.n;
  Rational total = 0;
  for (int p0 = 0; p0 < n; ++p0)
    for (int q0 = 0; q0 < n; ++q0) {
      if (j[p0][q0] == 0) continue;
      for (int p1 = 0; p1 < n; ++p1)
        for (int q1 = 0; q1 < n; ++q1) {
          if (j[p1][q1] == 0) continue;
          for (int p2 = 0; p2 < n; ++p2)
            for (int q2 = 0; q2 < n; ++q2) {
              if (j[p2][q2] == 0) continue;
              const Rational& a = s.at(p0, p1, p2);
              const Rational& b = t.at(q0, q1, q2);
              if (a != 0 && b != 0) total += j[p0][q0] * j[p1][q1] * j[p2][q2] * a * b;
            }
        }
    }
  return total / 6;
}

// (1/2) sum T_x[p0 p1] T_y[q0 q1] J_p0q0 J_p1q1
inline Rational q2(const Tensor2& x, const Tensor2& y, int genus) {
  const auto j = intersection_matrix(genus);
  Rational total = 0;
  for (int p0 = 0; p0 < x.n; ++p0)
    for (int q0 = 0; q0 < x.n; ++q0)
      for (int p1 = 0; p1 < x.n; ++p1)
        for (int q1 = 0; q1 < x.n; ++q1)
          if (j[p0][q0] != 0 && j[p1][q1] != 0) total += j[p0][q0] * j[p1][q1] * x.at(p0, p1) * y.at(q0, q1);
  return total / 2;
}

// (1/2) sum T_s[p0 p1 x] T_t[q0 q1 y] J_p0q0 J_p1q1 e_x e_y, returned as a
// dense symmetric matrix M with phi = sum_{x,y} M[x][y] e_x e_y.
inline std::vector<std::vector<Rational>> phi(const Tensor3& s, const Tensor3& t, int genus) {
  const auto j = intersection_matrix(genus);
  const int n = s.n;
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Rational total = 0;
      for (int p0 = 0; p0 < n; ++p0)
        for (int q0 = 0; q0 < n; ++q0) {
          if (j[p0][q0] == 0) continue;
          for (int p1 = 0; p1 < n; ++p1)
            for (int q1 = 0; q1 < n; ++q1)
              if (j[p1][q1] != 0) total += j[p0][q0] * j[p1][q1] * s.at(p0, p1, x) * t.at(q0, q1, y);
        }
      out[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = total / 2;
    }
  return out;
}

// Collapses a dense e_x e_y matrix onto sorted monomials.
inline torelli::Sym2Element to_sym2(const torelli::SymplecticSpace& sp, const std::vector<std::vector<Rational>>& m) {
  torelli::Sym2Element out(sp);
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) out.add_term(static_cast<int>(x), static_cast<int>(y), m[x][y]);
  return out;
}

// Fraction-free (Bareiss) rank of an integer-valued rational matrix, after
// clearing denominators row by row.
inline std::size_t bareiss_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (const auto& v : m[r]) l = lcm(l, mpz_class(v.get_den()));
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c].get_num() * (l / m[r][c].get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
