#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nlsa/attractor.hpp"
#include "nlsa/config.hpp"
#include "nlsa/snapshot.hpp"
#include "nlsa/solver.hpp"
#include "runners.hpp"

namespace {

namespace fs = std::filesystem;

// Exit codes: 0 success with all asserted invariants holding, 1 invariant
// violation or unstable run, 2 usage or configuration error.
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

fs::path resolve_output_dir(const std::string& flag_value,
                            const std::string& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (!config_value.empty()) return config_value;
  if (const char* env = std::getenv("NLSA_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral laboratory for the damped, forced cubic Schroedinger "
               "equation on a periodic box"};
  app.require_subcommand(1);

  struct SubcommandSpec {
    nlsa::Subcommand id;
    const char* name;
    const char* blurb;
  };
  const SubcommandSpec specs[] = {
      {nlsa::Subcommand::simulate, "simulate",
       "integrate and record diagnostics plus a final snapshot"},
      {nlsa::Subcommand::convergence, "convergence",
       "plane-wave error ladder over dt halvings"},
      {nlsa::Subcommand::decay, "decay", "mass decay envelope check"},
      {nlsa::Subcommand::absorb, "absorb", "absorbing-ball entry detection"},
      {nlsa::Subcommand::smoothing, "smoothing",
       "half-derivative smoothing-constant scaling table"},
      {nlsa::Subcommand::ball_identity, "ball-identity",
       "windowed energy identity residual"},
      {nlsa::Subcommand::weak_continuity, "weak-continuity",
       "weak-vs-strong gap ladder under modulated bumps"},
      {nlsa::Subcommand::omega_limit, "omega-limit",
       "long-time snapshot sampling inside the absorbing ball"},
      {nlsa::Subcommand::norms, "norms", "space-time norm battery"},
  };

  std::string config_path;
  std::string output_flag;
  CLI::App* chosen = nullptr;
  nlsa::Subcommand chosen_id = nlsa::Subcommand::simulate;
  for (const SubcommandSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.blurb);
    sub->add_option("--config", config_path, "experiment config file")
        ->required();
    sub->add_option("--output", output_flag,
                    "output directory (overrides config and NLSA_OUTPUT_DIR)");
    sub->callback([&chosen, &chosen_id, sub, spec]() {
      chosen = sub;
      chosen_id = spec.id;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const nlsa::ExperimentConfig cfg =
        nlsa::parse_config(config_path, chosen_id);
    const fs::path out_dir = resolve_output_dir(output_flag, cfg.output_dir);
    return nlsa::cli::run_experiment(cfg, out_dir);
  } catch (const nlsa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlsa::SnapshotError& e) {
    std::cerr << "snapshot error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlsa::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const nlsa::BlowupError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}
