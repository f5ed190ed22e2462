#include "nlsa/csv.hpp"

#include <cstdio>
#include <fstream>

namespace nlsa {

std::string format_g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_csv(const std::filesystem::path& path, const CsvRow& header,
               const std::vector<CsvRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write csv: " + path.string());
  auto emit_row = [&out](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  emit_row(header);
  for (const CsvRow& row : rows) emit_row(row);
  if (!out) throw std::runtime_error("short write on csv: " + path.string());
}

void emit_csv(const std::vector<StepDiagnostics>& diagnostics,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(diagnostics.size());
  for (const StepDiagnostics& d : diagnostics) {
    rows.push_back({format_g17(d.t), format_g17(d.mass),
                    format_g17(d.balance_residual), format_g17(d.linf)});
  }
  write_csv(path, {"t", "mass", "balance_residual", "linf"}, rows);
}

void emit_csv(const AbsorbingBallReport& report,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(report.mass_series.size());
  for (const auto& [t, norm] : report.mass_series) {
    rows.push_back({format_g17(t), format_g17(norm)});
  }
  write_csv(path, {"t", "l2_norm"}, rows);
}

void emit_csv(const std::vector<SmoothingRatioRow>& table,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(table.size());
  for (const SmoothingRatioRow& row : table) {
    rows.push_back({format_g17(row.lambda), format_g17(row.norm),
                    format_g17(row.fitted_c)});
  }
  write_csv(path, {"lambda", "norm", "fitted_c"}, rows);
}

void emit_csv(const WeakContinuityReport& report,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(report.mode_list.size());
  for (std::size_t i = 0; i < report.mode_list.size(); ++i) {
    rows.push_back({std::to_string(report.mode_list[i]),
                    format_g17(report.pairing_gap[i]),
                    format_g17(report.strong_gap[i])});
  }
  write_csv(path, {"mode", "pairing_gap", "strong_gap"}, rows);
}

void emit_csv(const OmegaLimitSample& sample,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  const std::size_t count = sample.pairwise_dist.size();
  rows.reserve(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      rows.push_back({std::to_string(i), std::to_string(j),
                      format_g17(sample.pairwise_dist[i][j])});
    }
  }
  write_csv(path, {"i", "j", "dist"}, rows);
}

void emit_csv(const std::vector<NormReport>& reports,
              const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(reports.size());
  for (const NormReport& r : reports) {
    rows.push_back({r.name, format_g17(r.value), std::to_string(r.n_points),
                    format_g17(r.length), format_g17(r.dt_sample),
                    format_g17(r.T)});
  }
  write_csv(path, {"name", "value", "n_points", "length", "dt_sample", "T"},
            rows);
}

void emit_summary_csv(const std::vector<std::pair<std::string, std::string>>& kv,
                      const std::filesystem::path& path) {
  std::vector<CsvRow> rows;
  rows.reserve(kv.size());
  for (const auto& [key, value] : kv) rows.push_back({key, value});
  write_csv(path, {"key", "value"}, rows);
}

}  // namespace nlsa
