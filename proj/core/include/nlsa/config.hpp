#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlsa/field.hpp"

namespace nlsa {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand {
  simulate,
  convergence,
  decay,
  absorb,
  smoothing,
  ball_identity,
  weak_continuity,
  omega_limit,
  norms,
};

std::string to_string(Subcommand cmd);

/// How to materialize a field on the grid:
///   "zero"
///   "gaussian:amp,center,width"   amp * exp(-(x-center)^2 / (2 width^2))
///   "file:<snapshot path>"
///   "random:<l2 norm>"            seeded spectral synthesis
struct FieldSpec {
  enum class Kind { zero, gaussian, file, random };
  Kind kind = Kind::zero;
  double amp = 0.0;
  double center = 0.0;
  double width = 1.0;
  std::filesystem::path path;
  double norm = 0.0;
};

FieldSpec parse_field_spec(const std::string& text);

/// Evaluates a FieldSpec on a grid. Random specs consume the given seed;
/// file specs must match the grid exactly.
ComplexField make_field(const FieldSpec& spec, const GridPtr& grid,
                        std::uint64_t seed);

struct ExperimentConfig {
  Subcommand subcommand = Subcommand::simulate;

  std::size_t n_points = 0;
  double length = 0.0;

  double gamma = 0.0;
  FieldSpec forcing;
  FieldSpec initial;

  double dt = 0.0;
  double t_final = 0.0;
  std::size_t record_every = 1;

  std::uint64_t seed = 0;
  std::string output_dir;
  bool dealias = false;

  std::vector<int> mode_list;
  double tau = 0.0;
  double t_star = 0.0;
  std::size_t n_samples = 0;
  double spacing = 0.0;
  std::vector<double> scale_list;
  std::pair<double, double> k_interval{0.0, 0.0};
  FieldSpec bump;
  FieldSpec probe;
};

/// Plain `key = value` file with `#` comments. Unknown or duplicated keys
/// and malformed values raise ConfigError naming the key and line; keys a
/// subcommand requires but the file omits raise ConfigError naming the key.
ExperimentConfig parse_config(const std::filesystem::path& path,
                              Subcommand subcommand);

}  // namespace nlsa
