// End-to-end checks of the nlsa binary: exit codes, emitted files, and
// byte-level determinism. argv[1] is the path to the binary under test.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& label) {
  if (ok) {
    std::cout << "[ok] " << label << "\n";
  } else {
    std::cout << "[FAIL] " << label << "\n";
    ++failures;
  }
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_config(const fs::path& dir, const std::string& name,
                      const std::string& text) {
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::trunc);
  out << text;
  return path;
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: nlsa_cli_tests <path-to-nlsa>\n";
    return 2;
  }
  const std::string nlsa = argv[1];
  const fs::path work = fs::temp_directory_path() / "nlsa_cli_tests";
  fs::remove_all(work);
  fs::create_directories(work);

  const std::string decay_cfg_text =
      "n_points = 128\n"
      "length = 25\n"
      "gamma = 1\n"
      "forcing = gaussian:0.5,0.0,2.0\n"
      "initial = random:1.0\n"
      "dt = 1e-3\n"
      "t_final = 2\n"
      "record_every = 10\n"
      "seed = 7\n";
  const fs::path decay_cfg = write_config(work, "decay.cfg", decay_cfg_text);

  // Valid decay run: exit 0 and CSV written.
  const fs::path out_a = work / "out_a";
  check(run(nlsa + " decay --config " + decay_cfg.string() + " --output " +
            out_a.string() + " > /dev/null") == 0,
        "decay run exits 0");
  check(fs::exists(out_a / "mass_series.csv"), "decay writes mass_series.csv");
  check(fs::exists(out_a / "summary.csv"), "decay writes summary.csv");

  // Determinism: identical config and seed give identical bytes.
  const fs::path out_b = work / "out_b";
  run(nlsa + " decay --config " + decay_cfg.string() + " --output " +
      out_b.string() + " > /dev/null");
  check(read_bytes(out_a / "mass_series.csv") ==
            read_bytes(out_b / "mass_series.csv"),
        "decay output is byte-deterministic");
  check(read_bytes(out_a / "summary.csv") == read_bytes(out_b / "summary.csv"),
        "summary is byte-deterministic");

  // Summary numbers appear verbatim in summary.csv.
  {
    std::ostringstream cmd;
    const fs::path out_c = work / "out_c";
    cmd << nlsa << " decay --config " << decay_cfg.string() << " --output "
        << out_c.string() << " > " << (work / "stdout.txt").string();
    run(cmd.str());
    const std::string printed = read_bytes(work / "stdout.txt");
    std::ifstream summary(out_c / "summary.csv");
    std::string line;
    std::getline(summary, line);  // header
    bool all_found = true;
    while (std::getline(summary, line)) {
      const auto comma = line.find(',');
      const std::string key = line.substr(0, comma);
      const std::string value = line.substr(comma + 1);
      if (printed.find(key + "=" + value) == std::string::npos) {
        all_found = false;
      }
    }
    check(all_found, "printed summary equals summary.csv values");
  }

  // gamma = 0 for decay: config error, exit 2, message names the guard.
  const std::string undamped_text =
      "n_points = 128\nlength = 25\ngamma = 0\nforcing = zero\n"
      "initial = random:1.0\ndt = 1e-3\nt_final = 1\nrecord_every = 10\n"
      "seed = 7\n";
  const fs::path undamped = write_config(work, "undamped.cfg", undamped_text);
  {
    const std::string err_file = (work / "stderr.txt").string();
    const int code = run(nlsa + " decay --config " + undamped.string() +
                         " --output " + (work / "out_d").string() + " 2> " +
                         err_file + " > /dev/null");
    check(code == 2, "undamped decay exits 2");
    check(read_bytes(err_file).find("envelope requires damping") !=
              std::string::npos,
          "undamped decay names the failed requirement");
  }

  // Duplicate key: exit 2.
  const fs::path dup = write_config(work, "dup.cfg",
                                    decay_cfg_text + "gamma = 2\n");
  check(run(nlsa + " decay --config " + dup.string() +
            " 2> /dev/null > /dev/null") == 2,
        "duplicate key exits 2");

  // Missing --config flag: usage error.
  check(run(nlsa + " decay 2> /dev/null > /dev/null") == 2,
        "missing --config exits 2");
  check(run(nlsa + " 2> /dev/null > /dev/null") == 2,
        "missing subcommand exits 2");

  // Convergence subcommand: exit 0, ratio table written.
  const std::string conv_text =
      "n_points = 256\n"
      "length = 50.26548245743669\n"  // 16 pi
      "gamma = 0.5\n"
      "dt = 4e-3\n"
      "t_final = 1\n"
      "seed = 1\n"
      "mode_list = 1\n";
  const fs::path conv_cfg = write_config(work, "conv.cfg", conv_text);
  const fs::path out_conv = work / "out_conv";
  check(run(nlsa + " convergence --config " + conv_cfg.string() + " --output " +
            out_conv.string() + " > /dev/null") == 0,
        "convergence run exits 0");
  check(fs::exists(out_conv / "convergence.csv"),
        "convergence writes its ladder");

  // Simulate writes a readable snapshot.
  const fs::path out_sim = work / "out_sim";
  check(run(nlsa + " simulate --config " + decay_cfg.string() + " --output " +
            out_sim.string() + " > /dev/null") == 0,
        "simulate exits 0");
  check(fs::exists(out_sim / "final.nlsa"), "simulate writes final.nlsa");

  // NLSA_OUTPUT_DIR is honored when --output is absent.
  const fs::path out_env = work / "out_env";
  {
    std::ostringstream cmd;
    cmd << "NLSA_OUTPUT_DIR=" << out_env.string() << " " << nlsa
        << " decay --config " << decay_cfg.string() << " > /dev/null";
    check(run(cmd.str()) == 0 && fs::exists(out_env / "summary.csv"),
          "NLSA_OUTPUT_DIR fallback works");
  }

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli check(s) failed\n";
  return 1;
}
