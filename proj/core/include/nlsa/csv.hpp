#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nlsa/attractor.hpp"
#include "nlsa/norms.hpp"
#include "nlsa/solver.hpp"

namespace nlsa {

/// %.17g: enough digits to round-trip a double through text exactly.
std::string format_g17(double value);

using CsvRow = std::vector<std::string>;

/// One header row, then one row per record. Throws on unwritable paths.
void write_csv(const std::filesystem::path& path, const CsvRow& header,
               const std::vector<CsvRow>& rows);

void emit_csv(const std::vector<StepDiagnostics>& diagnostics,
              const std::filesystem::path& path);
void emit_csv(const AbsorbingBallReport& report,
              const std::filesystem::path& path);
void emit_csv(const std::vector<SmoothingRatioRow>& table,
              const std::filesystem::path& path);
void emit_csv(const WeakContinuityReport& report,
              const std::filesystem::path& path);
void emit_csv(const OmegaLimitSample& sample,
              const std::filesystem::path& path);
void emit_csv(const std::vector<NormReport>& reports,
              const std::filesystem::path& path);

/// key,value table for an experiment's summary scalars; the printed
/// summary uses the same formatter so the two agree exactly.
void emit_summary_csv(const std::vector<std::pair<std::string, std::string>>& kv,
                      const std::filesystem::path& path);

}  // namespace nlsa
