#pragma once

// Line-oriented job configuration.
//
//   # comment
//   genus = 3
//   command = act
//   fixture = paper-figure-1
//
//   [vector c]
//   coords = 0 0 0 1 0 0          # or: value = b1
//
//   [multivector top]
//   degree = 3
//   value = a2^b1^a3              # or: coords = <C(2g,degree) entries>
//
//   [subsurface inside]
//   d = a1                        # vector name or expression
//   pair = a2, b2                 # repeatable
//
//   [bounding_pair bp]
//   side1 = inside
//   side2 = outside
//
//   [params]
//   kappa1 = 0
//   kappa2 = -1
//   seed = 7
//
//   [job]
//   top = top                     # command arguments, see README
//
// Names must not look like basis labels (a1, b2, ...).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "torelli/exterior.hpp"
#include "torelli/h3_model.hpp"
#include "torelli/johnson.hpp"

namespace torelli {

struct JobArgument {
  std::string value;
  int line = 0;
};

struct JobConfig {
  SymplecticSpace space{3};
  std::string command;
  std::optional<std::string> fixture;
  std::map<std::string, Vector> vectors;
  std::map<std::string, Multivector> multivectors;
  std::map<std::string, SubsurfaceSpec> subsurfaces;
  std::map<std::string, BoundingPairSpec> bounding_pairs;
  std::map<std::string, JobArgument> job;
  TorelliParams params;
  std::optional<std::uint64_t> seed;

  /// Vector name, or a canonical degree-1 expression.
  Vector resolve_vector(const JobArgument& ref) const;
  /// Multivector name, or a canonical expression; degree inferred when
  /// `degree` is 0.
  Multivector resolve_multivector(const JobArgument& ref, int degree = 0) const;
  const JobArgument* argument(const std::string& key) const;
};

/// Loads fixture objects on top of `config` (genus, curves, sides, pair, top).
void apply_fixture(JobConfig& config, const std::string& name);

/// Throws ParseError (with line) or ValidationError.
JobConfig parse_config(std::string_view text, std::optional<int> genus_override = {},
                       std::optional<std::string> fixture_override = {});
JobConfig load_config(const std::string& path, std::optional<int> genus_override = {},
                      std::optional<std::string> fixture_override = {});

}  // namespace torelli
