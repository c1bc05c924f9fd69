#include "torelli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "torelli/render.hpp"

namespace torelli {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line;
};

struct Section {
  std::string kind;  // "" for the global block
  std::string name;
  int line = 0;
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const {
    const Entry* found = nullptr;
    for (const auto& e : entries)
      if (e.key == key) {
        if (found) throw ParseError("duplicate key '" + key + "'", e.line);
        found = &e;
      }
    return found;
  }

  const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ParseError("[" + kind + " " + name + "] is missing '" + key + "'", line);
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& e : entries)
      if (std::find(keys.begin(), keys.end(), e.key) == keys.end())
        throw ParseError("unknown key '" + e.key + "' in " + (kind.empty() ? "global block" : "[" + kind + "]"),
                         e.line);
  }
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool looks_like_label(const std::string& name) { return std::regex_match(name, std::regex("[ab][0-9]+")); }

void check_name(const std::string& name, int line) {
  if (name.empty()) throw ParseError("section needs a name", line);
  if (looks_like_label(name)) throw ParseError("name '" + name + "' collides with a basis label", line);
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '=' || c == '[' || c == ']')
      throw ParseError("invalid character in name '" + name + "'", line);
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections(1);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      std::istringstream header(line.substr(1, line.size() - 2));
      Section s;
      s.line = line_no;
      header >> s.kind >> s.name;
      std::string extra;
      if (header >> extra) throw ParseError("section header has too many words", line_no);
      static const std::set<std::string> named{"vector", "multivector", "subsurface", "bounding_pair"};
      static const std::set<std::string> unnamed{"params", "job"};
      if (named.count(s.kind)) {
        check_name(s.name, line_no);
      } else if (unnamed.count(s.kind)) {
        if (!s.name.empty()) throw ParseError("[" + s.kind + "] takes no name", line_no);
      } else {
        throw ParseError("unknown section kind '" + s.kind + "'", line_no);
      }
      sections.push_back(std::move(s));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
    if (e.key.empty()) throw ParseError("empty key", line_no);
    if (e.value.empty()) throw ParseError("empty value for '" + e.key + "'", line_no);
    sections.back().entries.push_back(std::move(e));
  }
  return sections;
}

int parse_int(const Entry& e) {
  try {
    std::size_t used = 0;
    int value = std::stoi(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw ParseError("'" + e.key + "' expects an integer, got '" + e.value + "'", e.line);
  }
}

std::vector<Rational> parse_coords(const Entry& e, std::size_t expected) {
  std::istringstream in(e.value);
  std::vector<Rational> out;
  std::string token;
  while (in >> token) {
    try {
      out.push_back(parse_rational(token));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), e.line);
    }
  }
  if (out.size() != expected)
    throw ParseError("coefficient list has " + std::to_string(out.size()) + " entries, expected " +
                         std::to_string(expected),
                     e.line);
  return out;
}

// Re-raises library errors from parsing/validating a value with the line.
template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line) + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

int infer_degree(std::string_view expr) {
  std::string first(expr.substr(0, expr.find_first_of("+-", 1)));
  if (first.find(kSymDot) != std::string::npos) throw ParseError("expected an exterior expression");
  return 1 + static_cast<int>(std::count(first.begin(), first.end(), '^'));
}

}  // namespace

const JobArgument* JobConfig::argument(const std::string& key) const {
  auto it = job.find(key);
  return it == job.end() ? nullptr : &it->second;
}

Vector JobConfig::resolve_vector(const JobArgument& ref) const {
  if (auto it = vectors.find(ref.value); it != vectors.end()) return it->second;
  return at_line(ref.line, [&] { return parse_vector(ref.value, space); });
}

Multivector JobConfig::resolve_multivector(const JobArgument& ref, int degree) const {
  if (auto it = multivectors.find(ref.value); it != multivectors.end()) {
    if (degree != 0 && it->second.degree() != degree)
      throw ParseError("'" + ref.value + "' has degree " + std::to_string(it->second.degree()) + ", expected " +
                           std::to_string(degree),
                       ref.line);
    return it->second;
  }
  if (auto it = vectors.find(ref.value); it != vectors.end() && (degree == 0 || degree == 1))
    return Multivector::from_vector(it->second);
  return at_line(ref.line, [&] {
    const int d = degree != 0 ? degree : infer_degree(ref.value);
    return parse_multivector(ref.value, space, d);
  });
}

void apply_fixture(JobConfig& config, const std::string& name) {
  Fixture fx = fixture(name);
  if (fx.pair.space() != config.space)
    throw ValidationError("fixture '" + name + "' has genus " + std::to_string(fx.pair.space().genus()) +
                          ", config has genus " + std::to_string(config.space.genus()));
  config.fixture = name;
  for (auto& [curve, v] : fx.curves) config.vectors.insert_or_assign(curve, v);
  config.subsurfaces.insert_or_assign("X1", fx.pair.side1);
  config.subsurfaces.insert_or_assign("X2", fx.pair.side2);
  config.bounding_pairs.insert_or_assign(fx.name, fx.pair);
  config.multivectors.insert_or_assign("top", fx.top);
  config.job.try_emplace("bounding_pair", JobArgument{fx.name, 0});
  config.job.try_emplace("top", JobArgument{"top", 0});
}

JobConfig parse_config(std::string_view text, std::optional<int> genus_override,
                       std::optional<std::string> fixture_override) {
  const auto sections = split_sections(text);
  const Section& global = sections.front();
  global.allow_only({"genus", "command", "fixture", "seed"});

  std::optional<std::string> fixture_name = fixture_override;
  if (!fixture_name)
    if (const Entry* e = global.find("fixture")) fixture_name = e->value;

  std::optional<int> genus = genus_override;
  if (!genus)
    if (const Entry* e = global.find("genus")) genus = parse_int(*e);
  if (!genus && fixture_name) genus = fixture(*fixture_name).pair.space().genus();
  if (!genus) throw ParseError("genus is required (set 'genus = <g>', --genus or --fixture)");

  JobConfig config;
  config.space = SymplecticSpace(*genus);
  if (const Entry* e = global.find("command")) config.command = e->value;
  if (const Entry* e = global.find("seed")) config.seed = static_cast<std::uint64_t>(parse_int(*e));
  if (fixture_name) apply_fixture(config, *fixture_name);

  std::set<std::string> seen;
  auto claim = [&](const Section& s) {
    if (!seen.insert(s.name).second) throw ParseError("name '" + s.name + "' defined twice", s.line);
  };
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(r);
  };

  for (const auto& s : sections) {
    if (s.kind == "vector") {
      claim(s);
      s.allow_only({"coords", "value"});
      const Entry* coords = s.find("coords");
      const Entry* value = s.find("value");
      if ((coords == nullptr) == (value == nullptr))
        throw ParseError("[vector " + s.name + "] needs exactly one of 'coords' or 'value'", s.line);
      Vector v = coords ? Vector(config.space, parse_coords(*coords, static_cast<std::size_t>(config.space.dim())))
                        : at_line(value->line, [&] { return parse_vector(value->value, config.space); });
      config.vectors.insert_or_assign(s.name, std::move(v));
    } else if (s.kind == "multivector") {
      claim(s);
      s.allow_only({"degree", "coords", "value"});
      const Entry* coords = s.find("coords");
      const Entry* value = s.find("value");
      if ((coords == nullptr) == (value == nullptr))
        throw ParseError("[multivector " + s.name + "] needs exactly one of 'coords' or 'value'", s.line);
      const Entry& degree_entry = s.require("degree");
      const int degree = parse_int(degree_entry);
      if (degree < 1 || degree > 3) throw ParseError("degree must be 1, 2 or 3", degree_entry.line);
      Multivector x(config.space, degree);
      if (coords) {
        const auto blades = basis_blades(config.space, degree);
        const auto cs = parse_coords(*coords, binom(config.space.dim(), degree));
        for (std::size_t i = 0; i < blades.size(); ++i)
          x.add_term(std::vector<int>(blades[i].begin(), blades[i].begin() + degree), cs[i]);
      } else {
        x = at_line(value->line, [&] { return parse_multivector(value->value, config.space, degree); });
      }
      config.multivectors.insert_or_assign(s.name, std::move(x));
    }
  }

  for (const auto& s : sections) {
    if (s.kind != "subsurface") continue;
    claim(s);
    s.allow_only({"d", "pair"});
    const Entry& d = s.require("d");
    SubsurfaceSpec side{config.resolve_vector({d.value, d.line}), {}};
    for (const auto& e : s.entries) {
      if (e.key != "pair") continue;
      auto comma = e.value.find(',');
      if (comma == std::string::npos) throw ParseError("'pair' expects 'e, f'", e.line);
      side.pairs.emplace_back(config.resolve_vector({trim(e.value.substr(0, comma)), e.line}),
                              config.resolve_vector({trim(e.value.substr(comma + 1)), e.line}));
    }
    at_line(s.line, [&] {
      side.validate();
      return 0;
    });
    config.subsurfaces.insert_or_assign(s.name, std::move(side));
  }

  for (const auto& s : sections) {
    if (s.kind != "bounding_pair") continue;
    claim(s);
    s.allow_only({"side1", "side2"});
    auto side = [&](const char* key) {
      const Entry& e = s.require(key);
      auto it = config.subsurfaces.find(e.value);
      if (it == config.subsurfaces.end()) throw ParseError("unknown subsurface '" + e.value + "'", e.line);
      return it->second;
    };
    BoundingPairSpec pair{side("side1"), side("side2")};
    at_line(s.line, [&] {
      pair.validate();
      return 0;
    });
    config.bounding_pairs.insert_or_assign(s.name, std::move(pair));
  }

  for (const auto& s : sections) {
    if (s.kind == "params") {
      s.allow_only({"kappa1", "kappa2", "seed"});
      if (const Entry* e = s.find("kappa1")) config.params.kappa1 = at_line(e->line, [&] { return parse_rational(e->value); });
      if (const Entry* e = s.find("kappa2")) config.params.kappa2 = at_line(e->line, [&] { return parse_rational(e->value); });
      if (const Entry* e = s.find("seed")) config.seed = static_cast<std::uint64_t>(parse_int(*e));
    } else if (s.kind == "job") {
      for (const auto& e : s.entries) {
        if (config.job.count(e.key) && config.job[e.key].line > 0)
          throw ParseError("duplicate job argument '" + e.key + "'", e.line);
        config.job.insert_or_assign(e.key, JobArgument{e.value, e.line});
      }
    }
  }
  if (config.params.kappa2 == 0) throw ValidationError("kappa2 must be nonzero");
  return config;
}

JobConfig load_config(const std::string& path, std::optional<int> genus_override,
                      std::optional<std::string> fixture_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), genus_override, fixture_override);
}

}  // namespace torelli
