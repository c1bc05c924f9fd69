// torelli: batch front end for the exterior-algebra / Johnson-action library.
//
//   torelli <decompose|forms|johnson|act|audit|invariants>
//           [--config path] [--fixture name] [--genus g] [--set key=value]...
//           [--seed n] [--kappa1 r] [--kappa2 r] [--format text|json]
//
// Exit status: 0 when every verdict passes, 1 on a failed identity, 2 on bad
// input.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torelli/config.hpp"
#include "torelli/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic exterior algebra and the Johnson action on configuration-space homology"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::string fixture_name;
  std::optional<int> genus;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kappa1, kappa2;
  std::vector<std::string> settings;
  std::string format = "text";

  app.add_option("--config", config_path, "job configuration file")->check(CLI::ExistingFile);
  app.add_option("--fixture", fixture_name, "named built-in configuration (paper-figure-1)");
  app.add_option("--genus", genus, "genus of the surface when no config/fixture sets it");
  app.add_option("--set", settings, "job argument key=value (repeatable)");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--kappa1", kappa1, "coefficient of the omega3 component of the action");
  app.add_option("--kappa2", kappa2, "coefficient of the phi component of the action");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  for (const auto& name : torelli::commands()) app.add_subcommand(name, "run the " + name + " job");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    std::optional<std::string> fixture;
    if (!fixture_name.empty()) fixture = fixture_name;
    torelli::JobConfig config = config_path.empty()
                                    ? torelli::parse_config("", genus, fixture)
                                    : torelli::load_config(config_path, genus, fixture);
    config.command = app.get_subcommands().front()->get_name();
    if (seed) config.seed = *seed;
    if (kappa1) config.params.kappa1 = torelli::parse_rational(*kappa1);
    if (kappa2) config.params.kappa2 = torelli::parse_rational(*kappa2);
    config.params.validate();
    for (const auto& s : settings) {
      auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0) throw torelli::ParseError("--set expects key=value, got '" + s + "'");
      config.job.insert_or_assign(s.substr(0, eq), torelli::JobArgument{s.substr(eq + 1), 0});
    }

    const torelli::ReportDocument report = torelli::run(config);
    if (format == "json")
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << report.to_text();
    return report.all_pass() ? 0 : kExitFail;
  } catch (const torelli::Error& e) {
    std::cerr << "torelli: " << e.what() << "\n";
    return kExitInput;
  }
}
