#pragma once

// Canonical text form of algebraic values.
//
//   zero                 "0"
//   vector               "a1 - 2*b3"
//   multivector          "a1^a2^b2 - 1/2*a1^a2^b2"   ("^" joins basis labels)
//   Sym^2 element        "a2·a3 + 3/4*b1·b1"          ("·" is U+00B7)
//
// Terms appear in lexicographic order of their basis-index tuples and
// coefficients are reduced fractions. A coefficient of 1 is omitted. The
// parsers accept any term order, unsorted monomials and repeated terms, so
// parse(render(x)) == x.

#include <string>
#include <string_view>

#include "torelli/exterior.hpp"

namespace torelli {

inline constexpr std::string_view kSymDot = "·";

std::string render(const Vector& v);
std::string render(const Multivector& x);
std::string render(const Sym2Element& x);

Vector parse_vector(std::string_view text, const SymplecticSpace& space);
Multivector parse_multivector(std::string_view text, const SymplecticSpace& space, int degree);
Sym2Element parse_sym2(std::string_view text, const SymplecticSpace& space);

}  // namespace torelli
