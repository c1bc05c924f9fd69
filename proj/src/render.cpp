#include "torelli/render.hpp"

#include <vector>

namespace torelli {

namespace {

void append_term(std::string& out, const Rational& c, const std::string& monomial) {
  const bool negative = c < 0;
  const Rational magnitude = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (magnitude != 1) out += to_string(magnitude) + "*";
  out += monomial;
}

struct Term {
  Rational coefficient;
  std::vector<std::string> labels;
};

std::vector<std::string> split_monomial(std::string_view body) {
  std::vector<std::string> labels;
  std::string current;
  for (std::size_t i = 0; i < body.size();) {
    if (body[i] == '^') {
      labels.push_back(std::move(current));
      current.clear();
      ++i;
    } else if (body.substr(i, kSymDot.size()) == kSymDot) {
      labels.push_back(std::move(current));
      current.clear();
      i += kSymDot.size();
    } else {
      current += body[i++];
    }
  }
  labels.push_back(std::move(current));
  return labels;
}

// "0" parses to no terms.
std::vector<Term> parse_terms(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact += ch;
  if (compact.empty()) throw ParseError("empty expression");
  if (compact == "0") return {};

  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view body = std::string_view(compact).substr(pos, end - pos);
    if (body.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

    Term term{Rational(1), {}};
    if (auto star = body.find('*'); star != std::string_view::npos) {
      term.coefficient = parse_rational(body.substr(0, star));
      body.remove_prefix(star + 1);
    }
    if (negative) term.coefficient = -term.coefficient;
    term.labels = split_monomial(body);
    terms.push_back(std::move(term));
    pos = end;
  }
  return terms;
}

std::vector<int> slots(const Term& term, const SymplecticSpace& space) {
  std::vector<int> out;
  for (const auto& label : term.labels) out.push_back(space.slot(label));
  return out;
}

}  // namespace

std::string render(const Vector& v) { return render(Multivector::from_vector(v)); }

std::string render(const Multivector& x) {
  std::string out;
  for (const auto& [blade, c] : x.terms()) {
    std::string monomial;
    for (int k = 0; k < x.degree(); ++k) {
      if (k > 0) monomial += '^';
      monomial += x.space().label(blade[k]);
    }
    append_term(out, c, monomial);
  }
  return out.empty() ? "0" : out;
}

std::string render(const Sym2Element& x) {
  std::string out;
  for (const auto& [key, c] : x.terms())
    append_term(out, c, x.space().label(key.first) + std::string(kSymDot) + x.space().label(key.second));
  return out.empty() ? "0" : out;
}

Vector parse_vector(std::string_view text, const SymplecticSpace& space) {
  return parse_multivector(text, space, 1).to_vector();
}

Multivector parse_multivector(std::string_view text, const SymplecticSpace& space, int degree) {
  Multivector out(space, degree);
  for (const auto& term : parse_terms(text)) {
    if (text.find(kSymDot) != std::string_view::npos)
      throw ParseError("symmetric product in exterior expression '" + std::string(text) + "'");
    if (static_cast<int>(term.labels.size()) != degree)
      throw ParseError("term of degree " + std::to_string(term.labels.size()) + " in degree " +
                       std::to_string(degree) + " expression '" + std::string(text) + "'");
    out.add_term(slots(term, space), term.coefficient);
  }
  return out;
}

Sym2Element parse_sym2(std::string_view text, const SymplecticSpace& space) {
  Sym2Element out(space);
  for (const auto& term : parse_terms(text)) {
    if (text.find('^') != std::string_view::npos)
      throw ParseError("wedge in symmetric expression '" + std::string(text) + "'");
    if (term.labels.size() != 2)
      throw ParseError("Sym^2 term must have two factors in '" + std::string(text) + "'");
    auto s = slots(term, space);
    out.add_term(s[0], s[1], term.coefficient);
  }
  return out;
}

}  // namespace torelli
