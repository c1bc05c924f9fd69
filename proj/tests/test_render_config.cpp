#include <gtest/gtest.h>

#include "torelli/config.hpp"
#include "torelli/random.hpp"
#include "torelli/render.hpp"
#include "torelli/report.hpp"

using namespace torelli;

TEST(Render, GoldenStrings) {
  const SymplecticSpace sp(3);
  EXPECT_EQ(render(Multivector(sp, 3)), "0");
  EXPECT_EQ(render(Vector(sp)), "0");
  EXPECT_EQ(render(Sym2Element(sp)), "0");
  EXPECT_EQ(render(johnson_bp(paper_figure_fixture().pair)), "1/2*a1^a2^b2 - 1/2*a1^a3^b3");
  EXPECT_EQ(render(Rational(-2) * Vector::a(sp, 1) + Rational(3, 4) * Vector::b(sp, 3)), "-2*a1 + 3/4*b3");
  EXPECT_EQ(render(sym_product(Vector::b(sp, 1), Vector::b(sp, 1))), "b1·b1");
}

TEST(Render, ParserAcceptsAnyOrder) {
  const SymplecticSpace sp(3);
  EXPECT_EQ(render(parse_multivector("a2^b1^a3", sp, 3)), "-a2^a3^b1");
  EXPECT_EQ(render(parse_multivector("a1^a2^a3 + 2/4*a2^a1^a3 + b1^b1^a2", sp, 3)), "1/2*a1^a2^a3");
  EXPECT_EQ(render(parse_sym2("a3·a2 - 1/3*b1·a1", sp)), "-1/3*a1·b1 + a2·a3");
  EXPECT_EQ(parse_multivector("0", sp, 2), Multivector(sp, 2));
  EXPECT_THROW(parse_multivector("a1^a2", sp, 3), ParseError);
  EXPECT_THROW(parse_multivector("a1^a4^b1", sp, 3), ParseError);
  EXPECT_THROW(parse_vector("3/0*a1", sp), ParseError);
  EXPECT_THROW(parse_sym2("a1·a2·a3", sp), ParseError);
}

TEST(Render, RoundTrip) {
  Rng rng(51);
  for (int g = 2; g <= 4; ++g) {
    const SymplecticSpace sp(g);
    for (int trial = 0; trial < 200; ++trial) {
      const int degree = 1 + trial % 3;
      const auto x = random_multivector(rng, sp, degree, 0.2);
      EXPECT_EQ(parse_multivector(render(x), sp, degree), x);
      const auto v = random_vector(rng, sp);
      EXPECT_EQ(parse_vector(render(v), sp), v);
      const auto s = random_sym2(rng, sp);
      EXPECT_EQ(parse_sym2(render(s), sp), s);
    }
  }
}

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Config, FullGrammar) {
  const auto config = parse_config(R"(# a genus-4 job
genus = 4
command = johnson

[vector side]
value = a1

[subsurface inner]
d = side
pair = a2, b2
pair = a3, b3

[subsurface outer]
d = -a1
pair = a4, b4

[bounding_pair bp]
side1 = inner
side2 = outer

[params]
kappa1 = 1/2
kappa2 = 3

[job]
bounding_pair = bp
)");
  EXPECT_EQ(config.space.genus(), 4);
  EXPECT_EQ(config.command, "johnson");
  EXPECT_EQ(config.params.kappa1, Rational(1, 2));
  EXPECT_EQ(config.params.kappa2, 3);
  ASSERT_EQ(config.bounding_pairs.count("bp"), 1u);
  EXPECT_NO_THROW(johnson_bp(config.bounding_pairs.at("bp")));
  EXPECT_EQ(config.argument("bounding_pair")->line, 26);
  EXPECT_EQ(config.argument("nothing"), nullptr);
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("genus = 3\n[vector v]\ncoords = 1 2 3\n"), 3);
  EXPECT_EQ(parse_error_line("genus = 3\n\n[bogus x]\n"), 3);
  EXPECT_EQ(parse_error_line("genus = 3\n[vector a1]\nvalue = b1\n"), 2);
  EXPECT_EQ(parse_error_line("genus = 3\n[vector v]\nvalue = a1 +\n"), 3);
  EXPECT_EQ(parse_error_line("genus = 3\nnot a key value\n"), 2);
  EXPECT_EQ(parse_error_line("genus = three\n"), 1);
  EXPECT_EQ(parse_error_line("genus = 3\ngenus = 4\n"), 2);
  EXPECT_THROW(parse_config("command = act\n"), ParseError);
  EXPECT_THROW(parse_config("genus = 3\n[params]\nkappa2 = 0\n"), ValidationError);
}

TEST(Config, FixtureDefaults) {
  const auto config = parse_config("command = act\n", std::nullopt, std::string("paper-figure-1"));
  EXPECT_EQ(config.space.genus(), 3);
  EXPECT_EQ(render(config.resolve_vector({"c", 0})), "b1");
  EXPECT_EQ(render(config.resolve_multivector({"top", 0})), "-a2^a3^b1");
  EXPECT_THROW(parse_config("genus = 4\n", std::nullopt, std::string("paper-figure-1")), ValidationError);
}

TEST(Report, DeterministicAndPassingOnFixture) {
  auto config = parse_config("command = act\n", std::nullopt, std::string("paper-figure-1"));
  const auto first = run(config), second = run(config);
  EXPECT_TRUE(first.all_pass());
  EXPECT_EQ(first.to_json().dump(2), second.to_json().dump(2));
  EXPECT_EQ(first.to_text(), second.to_text());
  EXPECT_EQ(first.outputs.at("variation").at("sym2"), "a2·a3");

  config.command = "invariants";
  config.job["trials"] = {"10", 0};
  const auto inv1 = run(config), inv2 = run(config);
  EXPECT_TRUE(inv1.all_pass());
  EXPECT_EQ(inv1.to_json().dump(), inv2.to_json().dump());
}

TEST(Report, UnknownCommandRejected) {
  auto config = parse_config("genus = 3\n");
  config.command = "frobnicate";
  EXPECT_THROW(run(config), Error);
}
