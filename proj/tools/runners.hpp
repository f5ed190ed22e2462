#pragma once

#include <filesystem>

#include "nlsa/config.hpp"

namespace nlsa::cli {

/// Runs one experiment end to end: materialize fields, integrate, write
/// CSV/snapshot outputs into out_dir, print the one-line summary. Returns
/// the process exit code (0 ok, 1 invariant violated); config and
/// precondition problems escape as exceptions for main() to map to 2.
int run_experiment(const ExperimentConfig& cfg,
                   const std::filesystem::path& out_dir);

}  // namespace nlsa::cli
