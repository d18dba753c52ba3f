// herbrand: analyze voltage covers, render them, and sweep voltage censuses.
//
// Exit codes: 0 success, 2 unreadable or invalid spec, 3 disconnected cover,
// 4 a verification FAILed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "herbrand/census.hpp"
#include "herbrand/errors.hpp"
#include "herbrand/herbrand.hpp"
#include "herbrand/spec_io.hpp"

namespace fs = std::filesystem;
using namespace herbrand;

namespace {

constexpr int kParseError = 2;
constexpr int kDisconnected = 3;
constexpr int kVerificationFailed = 4;

struct SpecError {
  std::string message;
};

VoltageSpec load_voltage_spec(const std::string& path, CoverSpecFile& file) {
  try {
    file = load_cover_spec(path);
    return to_voltage_spec(file);
  } catch (const SpecParseError& e) {
    throw SpecError{e.what()};
  } catch (const UnknownVertex& e) {
    throw SpecError{e.what()};
  } catch (const InvalidVoltage& e) {
    throw SpecError{e.what()};
  } catch (const std::invalid_argument& e) {
    throw SpecError{e.what()};
  }
}

DerivedCover derive_or_throw(const VoltageSpec& spec) {
  try {
    return derive(spec);
  } catch (const DisconnectedGraph& e) {
    throw SpecError{e.what()};
  }
}

std::optional<unsigned> resolve_precision(const std::optional<unsigned>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("HERBRAND_PRECISION")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid HERBRAND_PRECISION=" << env << "\n";
  }
  return std::nullopt;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string dot_text(const DerivedCover& c, const std::string& name) {
  const std::string stem = name.empty() ? "cover" : name;
  return to_dot(c.base(), stem + "_base") + to_dot(c.total(), stem + "_cover");
}

fs::path data_dir() {
  if (const char* env = std::getenv("HERBRAND_DATA_DIR")) return env;
  return HERBRAND_DATA_DIR;
}

int cmd_analyze(const std::string& path, const AnalysisOptions& options, bool table, const std::string& dot,
                const std::string& out) {
  CoverSpecFile file;
  const VoltageSpec spec = load_voltage_spec(path, file);
  const DerivedCover cover = derive_or_throw(spec);
  if (!dot.empty()) write_text(dot, dot_text(cover, file.name));
  const TheoremReport report = build_report(cover, options, file.name);
  if (table) {
    std::cout << render_table(report);
    if (report.connected) {
      std::cout << "dim C = " << report.inequality.dim_C << " vs " << report.inequality.base_rank << " + "
                << report.inequality.vanishing << (report.inequality.strict ? " (strict)" : "") << "\n";
    }
  }
  const std::string json = to_json(report).dump(2) + "\n";
  if (out.empty() && table) {
    // table already on stdout; keep the report off it
  } else {
    write_text(out, json);
  }
  if (!report.connected) {
    std::cerr << "error: derived graph is disconnected; verdicts SKIPPED\n";
    return kDisconnected;
  }
  if (report.any_failure()) {
    for (const auto& c : report.global_checks()) {
      if (c.failed()) std::cerr << "FAIL: " << c.reason << "\n";
    }
    return kVerificationFailed;
  }
  return 0;
}

int cmd_dot(const std::string& path, const std::string& out) {
  CoverSpecFile file;
  const VoltageSpec spec = load_voltage_spec(path, file);
  const DerivedCover cover = derive_or_throw(spec);
  if (!cover.connected()) std::cerr << "warning: derived graph is disconnected\n";
  write_text(out, dot_text(cover, file.name));
  return 0;
}

int cmd_census(const std::string& path, std::uint32_t p, const CensusOptions& options, const std::string& out) {
  CoverSpecFile base;
  try {
    base = load_cover_spec(path);
    base.p = p;
    const SerreGraph g = base_graph(base);
    if (!is_connected(g)) throw SpecError{"base graph is not connected"};
    CyclicGroup::for_prime(p);
  } catch (const SpecParseError& e) {
    throw SpecError{e.what()};
  } catch (const UnknownVertex& e) {
    throw SpecError{e.what()};
  } catch (const std::invalid_argument& e) {
    throw SpecError{e.what()};
  }
  std::set<std::string> existing;
  if (!out.empty() && out != "-" && fs::exists(out)) {
    std::ifstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        existing.insert(Json::parse(line).at("key").get<std::string>());
      } catch (const std::exception&) {
        throw SpecError{"census file " + out + " has a malformed row"};
      }
    }
  }
  std::ofstream file;
  if (!out.empty() && out != "-") {
    file.open(out, std::ios::app);
    if (!file) throw std::runtime_error("cannot append to " + out);
  }
  std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  const CensusRun run = run_census(base, p, options, existing, [&sink](const CensusRow& row) {
    sink << to_json(row).dump() << "\n";
    sink.flush();
  });
  std::cerr << "census: " << run.processed << " new rows, " << run.skipped_existing << " already present, "
            << run.total << " assignments in total\n";
  if (run.cursor) std::cerr << "census: budget exhausted; resume with --start " << *run.cursor << "\n";
  return 0;
}

int cmd_examples() {
  const fs::path dir = data_dir();
  if (!fs::is_directory(dir)) {
    std::cerr << "error: no fixture directory at " << dir << "\n";
    return kParseError;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      const CoverSpecFile spec = load_cover_spec(f);
      std::cout << (spec.name.empty() ? f.stem().string() : spec.name) << "\t" << f.string() << "\t"
                << spec.description << "\n";
    } catch (const SpecParseError& e) {
      std::cout << f.stem().string() << "\t" << f.string() << "\t(unreadable: " << e.what() << ")\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character eigenspaces of Picard groups of F_p^x graph covers", "herbrand"};
  app.require_subcommand(1);

  std::string spec_path, out, dot;
  std::optional<unsigned> precision;
  std::uint64_t enumeration_budget = default_enumeration_budget;
  bool table = false;

  auto* analyze = app.add_subcommand("analyze", "Check eigenspace and L-value identities on a cover; write a JSON report");
  analyze->add_option("spec", spec_path, "Cover spec (JSON)")->required();
  analyze->add_option("--precision", precision, "p-adic working precision N");
  analyze->add_option("--enumeration-budget", enumeration_budget, "Largest p^m swept by the enumeration oracle");
  analyze->add_flag("--table", table, "Print the character table");
  analyze->add_option("--dot", dot, "Also write a DOT drawing to this path ('-' for stdout)");
  analyze->add_option("--out", out, "Report path (default stdout)");

  auto* dotcmd = app.add_subcommand("dot", "DOT drawings of the base graph and the derived cover");
  dotcmd->add_option("spec", spec_path, "Cover spec (JSON)")->required();
  dotcmd->add_option("--out", out, "Output path (default stdout)");

  std::uint32_t p = 0;
  CensusOptions census;
  auto* censuscmd = app.add_subcommand("census", "Enumerate all voltage assignments on a base graph");
  censuscmd->add_option("base", spec_path, "Base spec (JSON; voltages ignored)")->required();
  censuscmd->add_option("--p", p, "Odd prime")->required();
  censuscmd->add_option("--budget", census.budget, "Assignments processed in this run");
  censuscmd->add_option("--start", census.start, "Index of the first assignment");
  censuscmd->add_option("--precision", precision, "p-adic working precision N");
  censuscmd->add_option("--enumeration-budget", enumeration_budget, "Largest p^m swept by the enumeration oracle");
  censuscmd->add_option("--out", out, "NDJSON dataset, appended to and resumed from (default stdout)");

  auto* examples = app.add_subcommand("examples", "List the bundled example specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  AnalysisOptions options;
  options.precision = resolve_precision(precision);
  options.enumeration_budget = enumeration_budget;
  try {
    if (*analyze) return cmd_analyze(spec_path, options, table, dot, out);
    if (*dotcmd) return cmd_dot(spec_path, out);
    if (*censuscmd) {
      census.analysis = options;
      return cmd_census(spec_path, p, census, out);
    }
    if (*examples) return cmd_examples();
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
