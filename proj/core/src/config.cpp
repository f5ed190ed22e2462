#include "nlsa/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nlsa/random_field.hpp"
#include "nlsa/snapshot.hpp"
#include "nlsa/spectral.hpp"

namespace nlsa {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "n_points", "length",    "gamma",      "forcing",   "initial",
      "dt",       "t_final",   "record_every", "seed",    "output_dir",
      "dealias",  "mode_list", "tau",        "t_star",    "n_samples",
      "spacing",  "scale_list", "k_interval", "bump",     "probe",
  };
  return keys;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

using RawConfig = std::map<std::string, RawEntry>;

RawConfig read_raw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path.string());
  RawConfig raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected key = value at line " +
                        std::to_string(line_no));
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("empty key at line " + std::to_string(line_no));
    }
    if (!known_keys().count(key)) {
      throw ConfigError("unknown key " + key + " at line " +
                        std::to_string(line_no));
    }
    if (raw.count(key)) {
      throw ConfigError("duplicate key " + key + " at line " +
                        std::to_string(line_no));
    }
    raw[key] = {value, line_no};
  }
  return raw;
}

[[noreturn]] void bad_value(const std::string& key, const RawEntry& entry) {
  throw ConfigError("invalid value for " + key + " at line " +
                    std::to_string(entry.line) + ": '" + entry.value + "'");
}

double to_double(const std::string& key, const RawEntry& entry) {
  try {
    std::size_t used = 0;
    const double v = std::stod(entry.value, &used);
    if (used != entry.value.size()) bad_value(key, entry);
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_value(key, entry);
  }
}

std::uint64_t to_u64(const std::string& key, const RawEntry& entry) {
  std::uint64_t v = 0;
  const char* first = entry.value.data();
  const char* last = first + entry.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) bad_value(key, entry);
  return v;
}

std::vector<double> to_double_list(const std::string& key,
                                   const RawEntry& entry) {
  std::vector<double> out;
  std::stringstream ss(entry.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) bad_value(key, entry);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) bad_value(key, entry);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      bad_value(key, entry);
    }
  }
  if (out.empty()) bad_value(key, entry);
  return out;
}

std::vector<int> to_int_list(const std::string& key, const RawEntry& entry) {
  std::vector<int> out;
  for (double v : to_double_list(key, entry)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) bad_value(key, entry);
    out.push_back(i);
  }
  return out;
}

class ConfigReader {
 public:
  ConfigReader(RawConfig raw) : raw_(std::move(raw)) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  const RawEntry& require(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw ConfigError("missing key " + key);
    return it->second;
  }

  std::optional<RawEntry> get(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    return it->second;
  }

 private:
  RawConfig raw_;
};

}  // namespace

std::string to_string(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::simulate: return "simulate";
    case Subcommand::convergence: return "convergence";
    case Subcommand::decay: return "decay";
    case Subcommand::absorb: return "absorb";
    case Subcommand::smoothing: return "smoothing";
    case Subcommand::ball_identity: return "ball-identity";
    case Subcommand::weak_continuity: return "weak-continuity";
    case Subcommand::omega_limit: return "omega-limit";
    case Subcommand::norms: return "norms";
  }
  return "?";
}

FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  if (text == "zero") {
    spec.kind = FieldSpec::Kind::zero;
    return spec;
  }
  const auto colon = text.find(':');
  const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "gaussian") {
    std::stringstream ss(rest);
    std::string item;
    std::vector<double> parts;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stod(trim(item), &used));
        if (used != trim(item).size()) throw std::invalid_argument("junk");
      } catch (const std::exception&) {
        throw ConfigError("invalid gaussian field spec: '" + text + "'");
      }
    }
    if (parts.size() != 3 || !(parts[2] > 0.0)) {
      throw ConfigError("invalid gaussian field spec: '" + text + "'");
    }
    spec.kind = FieldSpec::Kind::gaussian;
    spec.amp = parts[0];
    spec.center = parts[1];
    spec.width = parts[2];
    return spec;
  }
  if (head == "file") {
    if (rest.empty()) throw ConfigError("empty path in field spec: '" + text + "'");
    spec.kind = FieldSpec::Kind::file;
    spec.path = rest;
    return spec;
  }
  if (head == "random") {
    try {
      std::size_t used = 0;
      spec.norm = std::stod(trim(rest), &used);
      if (used != trim(rest).size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw ConfigError("invalid random field spec: '" + text + "'");
    }
    if (spec.norm < 0.0) {
      throw ConfigError("invalid random field spec: '" + text + "'");
    }
    spec.kind = FieldSpec::Kind::random;
    return spec;
  }
  throw ConfigError("unknown field spec: '" + text + "'");
}

ComplexField make_field(const FieldSpec& spec, const GridPtr& grid,
                        std::uint64_t seed) {
  switch (spec.kind) {
    case FieldSpec::Kind::zero:
      return zero_field(grid);
    case FieldSpec::Kind::gaussian: {
      ComplexField field(grid);
      const auto& x = grid->points();
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - spec.center;
        field.values[j] =
            Complex(spec.amp * std::exp(-d * d / (2.0 * spec.width * spec.width)),
                    0.0);
      }
      return field;
    }
    case FieldSpec::Kind::file: {
      auto [field, t] = read_snapshot(spec.path);
      (void)t;
      if (!(*field.grid == *grid)) {
        throw ConfigError("snapshot grid mismatch: " + spec.path.string());
      }
      return field;
    }
    case FieldSpec::Kind::random:
      return random_field(grid, seed, spec.norm);
  }
  throw ConfigError("unreachable field spec kind");
}

ExperimentConfig parse_config(const std::filesystem::path& path,
                              Subcommand subcommand) {
  const ConfigReader reader(read_raw(path));
  ExperimentConfig cfg;
  cfg.subcommand = subcommand;

  // Shared by every experiment.
  {
    const auto& n_entry = reader.require("n_points");
    const std::uint64_t n = to_u64("n_points", n_entry);
    if (n == 0) bad_value("n_points", n_entry);
    cfg.n_points = static_cast<std::size_t>(n);
    const auto& length_entry = reader.require("length");
    cfg.length = to_double("length", length_entry);
    if (!(cfg.length > 0.0)) bad_value("length", length_entry);
    const auto& dt_entry = reader.require("dt");
    cfg.dt = to_double("dt", dt_entry);
    if (!(cfg.dt > 0.0)) bad_value("dt", dt_entry);
    const auto& t_entry = reader.require("t_final");
    cfg.t_final = to_double("t_final", t_entry);
    if (!(cfg.t_final > 0.0)) bad_value("t_final", t_entry);
    cfg.seed = to_u64("seed", reader.require("seed"));
  }

  if (const auto entry = reader.get("output_dir")) cfg.output_dir = entry->value;
  if (const auto entry = reader.get("dealias")) {
    const std::uint64_t v = to_u64("dealias", *entry);
    if (v > 1) bad_value("dealias", *entry);
    cfg.dealias = v == 1;
  }
  if (const auto entry = reader.get("gamma")) {
    cfg.gamma = to_double("gamma", *entry);
    if (cfg.gamma < 0.0) bad_value("gamma", *entry);
  }
  if (const auto entry = reader.get("record_every")) {
    const std::uint64_t v = to_u64("record_every", *entry);
    if (v == 0) bad_value("record_every", *entry);
    cfg.record_every = static_cast<std::size_t>(v);
  }
  if (const auto entry = reader.get("forcing")) {
    cfg.forcing = parse_field_spec(entry->value);
  }
  if (const auto entry = reader.get("initial")) {
    cfg.initial = parse_field_spec(entry->value);
  }
  if (const auto entry = reader.get("mode_list")) {
    cfg.mode_list = to_int_list("mode_list", *entry);
  }
  if (const auto entry = reader.get("tau")) {
    cfg.tau = to_double("tau", *entry);
    if (!(cfg.tau > 0.0)) bad_value("tau", *entry);
  }
  if (const auto entry = reader.get("t_star")) {
    cfg.t_star = to_double("t_star", *entry);
    if (!(cfg.t_star > 0.0)) bad_value("t_star", *entry);
  }
  if (const auto entry = reader.get("n_samples")) {
    const std::uint64_t v = to_u64("n_samples", *entry);
    if (v == 0) bad_value("n_samples", *entry);
    cfg.n_samples = static_cast<std::size_t>(v);
  }
  if (const auto entry = reader.get("spacing")) {
    cfg.spacing = to_double("spacing", *entry);
    if (!(cfg.spacing > 0.0)) bad_value("spacing", *entry);
  }
  if (const auto entry = reader.get("scale_list")) {
    cfg.scale_list = to_double_list("scale_list", *entry);
    for (double v : cfg.scale_list) {
      if (v < 0.0) bad_value("scale_list", *entry);
    }
  }
  if (const auto entry = reader.get("k_interval")) {
    const auto parts = to_double_list("k_interval", *entry);
    if (parts.size() != 2) bad_value("k_interval", *entry);
    cfg.k_interval = {parts[0], parts[1]};
  }
  if (const auto entry = reader.get("bump")) {
    cfg.bump = parse_field_spec(entry->value);
  }
  if (const auto entry = reader.get("probe")) {
    cfg.probe = parse_field_spec(entry->value);
  }

  // Per-subcommand required keys beyond the shared set.
  auto need = [&reader](std::initializer_list<const char*> keys) {
    for (const char* key : keys) reader.require(key);
  };
  switch (subcommand) {
    case Subcommand::simulate:
    case Subcommand::decay:
    case Subcommand::absorb:
      need({"gamma", "forcing", "initial", "record_every"});
      break;
    case Subcommand::convergence:
      need({"gamma"});
      break;
    case Subcommand::smoothing:
      need({"initial", "scale_list", "record_every"});
      break;
    case Subcommand::ball_identity:
      need({"gamma", "forcing", "initial", "record_every", "tau"});
      break;
    case Subcommand::weak_continuity:
      need({"gamma", "forcing", "initial", "record_every", "mode_list", "bump",
            "probe"});
      break;
    case Subcommand::omega_limit:
      need({"gamma", "forcing", "initial", "record_every", "t_star",
            "n_samples", "spacing"});
      break;
    case Subcommand::norms:
      need({"gamma", "forcing", "initial", "record_every", "k_interval"});
      break;
  }

  return cfg;
}

}  // namespace nlsa
