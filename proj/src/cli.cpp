#include "proccat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "proccat/descriptor.hpp"

namespace proccat {

std::string machine_line(const LawReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["instance"] = r.instance;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"location", w.location}, {"element", w.element}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"note", w.note}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.millis) j["millis"] = *r.millis;
  else j["millis"] = nullptr;
  j["detail"] = r.detail;
  return j.dump();
}

std::string human_lines(const LawReport& r) {
  std::string s = "[" + to_string(r.verdict) + "] " + r.suite + " | " + r.instance;
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  if (r.millis) {
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << *r.millis;
    s += " " + ms.str() + " ms";
  }
  s += "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    s += "    at " + w.location + " on " + w.element + "\n";
    s += "    lhs: " + w.lhs + "\n";
    s += "    rhs: " + w.rhs + "\n";
    if (!w.note.empty()) s += "    " + w.note + "\n";
  }
  return s;
}

int exit_code(const std::vector<LawReport>& reports) {
  bool cap = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail || r.verdict == Verdict::Error) return 1;
    if (r.verdict == Verdict::CapExceeded) cap = true;
  }
  return cap ? 3 : 0;
}

namespace {

constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_cap(const std::string& text, const std::string& origin) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v < 1 || text.front() == '-')
    throw ConfigError(origin + ": cap must be a positive integer, got '" + text + "'");
  return v;
}

TimeScale finite_scale(const std::string& text) {
  try {
    return to_time_scale(parse_scale_expr(text));
  } catch (const std::exception& e) {
    throw ConfigError("--scale: " + std::string(e.what()));
  }
}

std::string summary(const std::vector<LawReport>& reports) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) ++counts[static_cast<int>(r.verdict)];
  return std::to_string(reports.size()) + " checks: " + std::to_string(counts[0]) + " pass, " +
         std::to_string(counts[1]) + " fail, " + std::to_string(counts[2]) + " cap_exceeded, " +
         std::to_string(counts[3]) + " error\n";
}

std::string render(const std::vector<LawReport>& reports, ReportFormat f) {
  std::string s;
  for (const auto& r : reports) s += f == ReportFormat::Machine ? machine_line(r) + "\n" : human_lines(r);
  if (f == ReportFormat::Human) s += summary(reports);
  return s;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  RunOptions o;
  o.grid = c.grid_path.empty() ? default_grid() : load_grid(c.grid_path);
  if (c.scale) o.grid.scales = {finite_scale(*c.scale)};
  o.suites = c.suites;
  o.cap = c.cap;
  o.mutation = c.mutation;
  o.timing = c.timing;
  auto reports = run_suites(o);
  if (c.out_dir) {
    std::filesystem::create_directories(*c.out_dir);
    std::ofstream(std::filesystem::path(*c.out_dir) / "report.jsonl") << render(reports, ReportFormat::Machine);
    std::ofstream(std::filesystem::path(*c.out_dir) / "report.txt") << render(reports, ReportFormat::Human);
  }
  out << render(reports, c.format);
  return exit_code(reports);
}

int cmd_validate(const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    auto v = validate_scale(parse_scale_expr(text));
    out << v.to_string() << "\n";
    return v.accepted ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int cmd_dump(const std::string& descriptor, const std::string& t, const std::string& t0, const std::string& scale_text,
             std::uint64_t cap, std::ostream& out) {
  auto scale = finite_scale(scale_text);
  IndexPair at;
  try {
    at = {parse_time(t), parse_time(t0)};
  } catch (const std::exception& e) {
    throw ConfigError("index: " + std::string(e.what()));
  }
  if (!scale.valid(at)) throw ConfigError("index " + to_string(at) + " is not an index of " + scale.to_string());
  TObj obj;
  try {
    obj = parse_descriptor(descriptor, scale, cap);
  } catch (const DescriptorError& e) {
    throw ConfigError(e.what());
  }
  const auto& carrier = obj->carrier(at);
  for (const auto& v : carrier->elements()) out << v.dump() << "\n";
  out << "size: " << carrier->size() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executable checks for abstract process categories over finite time scales"};
  app.require_subcommand(1);

  RunConfig cfg;
#ifdef PROCCAT_GRID_FILE
  cfg.grid_path = PROCCAT_GRID_FILE;
#endif
  std::string cap_text;
  std::string suites_text = "all";
  std::string mutate_text = "none";
  std::string format_text = "human";

  auto* check = app.add_subcommand("check", "Run law suites over the instance grid");
  std::string scale_opt;
  check->add_option("--scale", scale_opt, "Run on this finite(...) scale instead of the grid's scales");
  check->add_option("--grid", cfg.grid_path, "Grid file (JSON)");
  check->add_option("--suites", suites_text, "Comma-separated suite names, or all");
  check->add_option("--cap", cap_text, "Enumeration cap (default 1000000, or PROCCAT_CAP)");
  check->add_option("--mutate", mutate_text, "Inject a fault: theta, vartheta, chi, bang, mu");
  check->add_option("--out", cfg.out_dir, "Directory for report.jsonl and report.txt");
  check->add_option("--format", format_text, "Report format on stdout")->check(CLI::IsMember({"human", "machine"}));
  check->add_flag("--timing", cfg.timing, "Record per-check wall time (breaks byte-identical reports)");

  auto* scale_cmd = app.add_subcommand("scale", "Time scale tools");
  scale_cmd->require_subcommand(1);
  auto* validate = scale_cmd->add_subcommand("validate", "Check that a scale expression is well-founded");
  std::string expr;
  validate->add_option("expr", expr, "Scale expression")->required();

  auto* dump = app.add_subcommand("dump", "List the carrier of an object at one index");
  std::string descriptor, t, t0, dump_scale = "finite(0,1,2)";
  dump->add_option("descriptor", descriptor, "Object descriptor")->required();
  dump->add_option("t", t, "Inhabitation time")->required();
  dump->add_option("t0", t0, "Observation time")->required();
  dump->add_option("--scale", dump_scale, "finite(...) scale (default finite(0,1,2))");
  std::string dump_cap_text;
  dump->add_option("--cap", dump_cap_text, "Cap for exp constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    auto default_cap = [&]() -> std::uint64_t {
      if (const char* env = std::getenv("PROCCAT_CAP")) return parse_cap(env, "PROCCAT_CAP");
      return kExhaustiveLimit;
    };
    if (validate->parsed()) return cmd_validate(expr, out, err);
    if (dump->parsed()) {
      auto cap = dump_cap_text.empty() ? default_cap() : parse_cap(dump_cap_text, "--cap");
      return cmd_dump(descriptor, t, t0, dump_scale, cap, out);
    }
    cfg.cap = cap_text.empty() ? default_cap() : parse_cap(cap_text, "--cap");
    if (!scale_opt.empty()) cfg.scale = scale_opt;
    if (suites_text != "all") {
      std::stringstream ss(suites_text);
      for (std::string s; std::getline(ss, s, ',');) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw ConfigError("unknown suite '" + s + "'");
        cfg.suites.push_back(s);
      }
    }
    try {
      cfg.mutation = parse_mutation(mutate_text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    cfg.format = format_text == "machine" ? ReportFormat::Machine : ReportFormat::Human;
    if (!cfg.grid_path.empty()) {
      try {
        load_grid(cfg.grid_path);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (cfg.scale) finite_scale(*cfg.scale);
    return cmd_check(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace proccat
