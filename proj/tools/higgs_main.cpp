#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "higgs/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) higgs::fail(higgs::ErrorKind::ParseError, "config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank-two Higgs bundle spectral data"};
  std::string config_path, format = "both", out_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "Job config (JSON)")->required();
  app.add_option("--seed", seed, "Seed for randomized suites; overrides the config");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine", "both"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    higgs::cli::JobConfig job = higgs::cli::parse_config(read_file(config_path));
    if (seed) job.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    higgs::cli::Report report = higgs::cli::run(job);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (format != "machine") {
      out << report.human;
      out << "time: " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
    }
    if (format == "both") out << "--- machine ---\n";
    if (format != "human") out << report.machine.dump(2) << "\n";
    return report.ok ? 0 : 1;
  } catch (const higgs::Error& e) {
    std::cerr << "error: " << higgs::to_string(e.kind()) << ": " << e.witness() << "\n";
    if (format != "human") {
      higgs::Json err{{"error", {{"kind", higgs::to_string(e.kind())}, {"witness", e.witness()}}}};
      out << err.dump(2) << "\n";
    }
    return higgs::cli::exit_code(e);
  }
}
