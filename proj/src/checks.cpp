#include "torelli/checks.hpp"

#include <algorithm>
#include <functional>

#include "torelli/h3_model.hpp"
#include "torelli/invariant_forms.hpp"
#include "torelli/johnson.hpp"
#include "torelli/random.hpp"
#include "torelli/render.hpp"

namespace torelli {

namespace {

// A property returns an empty string on success, otherwise a description of
// the first counterexample.
using Property = std::function<std::string(Rng&, const SymplecticSpace&)>;

struct NamedProperty {
  std::string name;
  bool needs_genus3;
  Property body;
};

std::string mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
  return what + ": " + lhs + " != " + rhs;
}

std::vector<NamedProperty> properties() {
  std::vector<NamedProperty> ps;

  ps.push_back({"contraction-well-defined", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  Vector u = random_vector(rng, sp), v = random_vector(rng, sp), w = random_vector(rng, sp);
                  const Vector base = contraction3(wedge(u, v, w));
                  // odd permutations negate the wedge, so the contraction flips with them
                  if (contraction3(wedge(v, u, w)) != -base) return "swap(0,1)";
                  if (contraction3(wedge(u, w, v)) != -base) return "swap(1,2)";
                  if (contraction3(wedge(v, w, u)) != base) return "3-cycle";
                  Vector expected = intersection(u, v) * w + intersection(v, w) * u + intersection(w, u) * v;
                  if (base != expected) return mismatch("cyclic sum", render(base), render(expected));
                  return {};
                }});

  ps.push_back({"delta-contraction-constant", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const Vector v = random_vector(rng, sp);
                  const Vector got = contraction3(wedge(delta(sp), Multivector::from_vector(v)));
                  const Vector want = Rational(sp.genus() - 1) * v;
                  return got == want ? std::string{} : mismatch("contraction3(delta^v)", render(got), render(want));
                }});

  ps.push_back({"johnson-bp-swap-invariant", true, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto pair = random_bounding_pair(rng, sp);
                  const auto lhs = johnson_bp(pair);
                  const auto rhs = johnson_bp(pair.swapped());
                  return lhs == rhs ? std::string{} : mismatch("j(d,d') vs swapped", render(lhs), render(rhs));
                }});

  ps.push_back({"johnson-identity", true, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto pair = random_bounding_pair(rng, sp);
                  const auto diff = johnson_element(pair.side1) - johnson_element(pair.side2);
                  const auto want = wedge(Multivector::from_vector(pair.side1.d), delta(sp));
                  return diff == want ? std::string{} : mismatch("j(X')-j(X'')", render(diff), render(want));
                }});

  ps.push_back({"omega3-antisymmetric", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto s = random_multivector(rng, sp, 3), t = random_multivector(rng, sp, 3);
                  return omega3(s, t) == -omega3(t, s) ? std::string{} : "omega3(s,t) != -omega3(t,s)";
                }});

  ps.push_back({"omega3-invariant", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto s = random_primitive(rng, sp), t = random_primitive(rng, sp);
                  const Transvection tv(random_integral_vector(rng, sp));
                  return omega3(apply_transvection(tv, s), apply_transvection(tv, t)) == omega3(s, t)
                             ? std::string{}
                             : "omega3 not invariant under transvection " + render(tv.direction());
                }});

  ps.push_back({"phi-equivariant", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto s = random_primitive(rng, sp), t = random_primitive(rng, sp);
                  const Transvection tv(random_integral_vector(rng, sp));
                  const auto lhs = phi(apply_transvection(tv, s), apply_transvection(tv, t));
                  const auto rhs = apply_transvection(tv, phi(s, t));
                  return lhs == rhs ? std::string{} : mismatch("phi(Ts,Tt) vs T phi(s,t)", render(lhs), render(rhs));
                }});

  ps.push_back({"phi-symmetric", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto s = random_multivector(rng, sp, 3), t = random_multivector(rng, sp, 3);
                  return phi(s, t) == phi(t, s) ? std::string{} : "phi(s,t) != phi(t,s)";
                }});

  ps.push_back({"projector-idempotent", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto x = random_multivector(rng, sp, 3);
                  const auto p = project_primitive(x);
                  if (!is_primitive(p)) return "contraction3(project_primitive(x)) != 0";
                  if (project_primitive(p) != p) return "project_primitive not idempotent";
                  return {};
                }});

  ps.push_back({"q2-invariant", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto x = random_multivector(rng, sp, 2), y = random_multivector(rng, sp, 2);
                  const Transvection tv(random_integral_vector(rng, sp));
                  return q2(apply_transvection(tv, x), apply_transvection(tv, y)) == q2(x, y)
                             ? std::string{}
                             : "q2 not invariant under transvection " + render(tv.direction());
                }});

  ps.push_back({"render-roundtrip", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const int degree = std::uniform_int_distribution<int>(1, 3)(rng);
                  const auto x = random_multivector(rng, sp, degree);
                  if (parse_multivector(render(x), sp, degree) != x) return "multivector " + render(x);
                  const auto y = random_sym2(rng, sp);
                  if (parse_sym2(render(y), sp) != y) return "sym2 " + render(y);
                  return {};
                }});

  ps.push_back({"splitting-reconstruction", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto x = random_multivector(rng, sp, 3);
                  const auto rebuilt =
                      project_primitive(x) + wedge(delta(sp), Multivector::from_vector(delta_component(x)));
                  return rebuilt == x ? std::string{} : mismatch("P(x) + delta^w", render(rebuilt), render(x));
                }});

  ps.push_back({"torelli-trivial-on-V", true, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto pair = random_bounding_pair(rng, sp);
                  if (!bounding_pair_action_on_V(pair).is_identity()) return "bounding pair map moves V";
                  const Transvection lone(random_integral_vector(rng, sp));
                  if (lone.matrix().is_identity()) return "lone transvection acts trivially";
                  return {};
                }});

  ps.push_back({"unipotent-action", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const TorelliParams params{random_rational(rng), Rational(1) + abs(random_rational(rng))};
                  const auto t1 = random_primitive(rng, sp), t2 = random_primitive(rng, sp);
                  const GradedH3Element m(random_rational(rng), random_sym2(rng, sp), random_primitive(rng, sp));
                  const auto twice = act(t1, act(t2, m, params), params);
                  if (twice != act(t1 + t2, m, params)) return "act(t1, act(t2, m)) != act(t1 + t2, m)";
                  if (twice.top() != m.top()) return "act moved the top component";
                  return {};
                }});

  ps.push_back({"wedge-graded", false, [](Rng& rng, const SymplecticSpace& sp) -> std::string {
                  const auto u = random_vector(rng, sp), v = random_vector(rng, sp);
                  const auto x = Multivector::from_vector(u), y = Multivector::from_vector(v);
                  if (!wedge(x, x).is_zero()) return "v^v != 0";
                  if (wedge(x, y) != -wedge(y, x)) return "u^v != -v^u";
                  const auto z = random_multivector(rng, sp, 2);
                  if (wedge(x, z) != wedge(z, x)) return "u^z != z^u for degree-2 z";
                  const Rational c = random_rational(rng);
                  const auto w = random_multivector(rng, sp, 2);
                  if (wedge(x, c * z + w) != c * wedge(x, z) + wedge(x, w)) return "wedge not bilinear";
                  const auto third = Multivector::from_vector(random_vector(rng, sp));
                  if (wedge(wedge(x, y), third) != wedge(x, wedge(y, third))) return "wedge not associative";
                  return {};
                }});

  return ps;
}

}  // namespace

std::vector<Verdict> run_property_suite(const SymplecticSpace& space, std::uint64_t seed, int trials) {
  std::vector<Verdict> out;
  std::uint64_t index = 0;
  for (const auto& p : properties()) {
    ++index;
    if (p.needs_genus3 && space.genus() < 3) {
      out.push_back({p.name, "SKIPPED", false, "requires genus >= 3"});
      continue;
    }
    std::seed_seq seq{seed & 0xffffffffu, seed >> 32, index};
    Rng rng(seq);
    std::string failure;
    int run = 0;
    for (; run < trials && failure.empty(); ++run) failure = p.body(rng, space);
    if (failure.empty())
      out.push_back(Verdict::pass_fail(p.name, true, std::to_string(trials) + " trials"));
    else
      out.push_back(Verdict::pass_fail(p.name, false, "trial " + std::to_string(run) + ": " + failure));
  }
  std::sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) { return a.check < b.check; });
  return out;
}

}  // namespace torelli
