#include "tcshift/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <json.hpp>

#include "tcshift/error.hpp"
#include "tcshift/instance_file.hpp"
#include "tcshift/oracle.hpp"
#include "tcshift/reconstruct.hpp"
#include "tcshift/report.hpp"

namespace tcshift::cli {
namespace {

constexpr double kDefaultTol = 1e-10;
constexpr int kDefaultOrder = 12;
constexpr int kDefaultWindow = 4;
constexpr int kH0Depth = 8;

struct Flags {
  std::string file;
  double tol = kDefaultTol;
  int order = kDefaultOrder;
  int window = kDefaultWindow;
  bool json = false;
  bool text = false;
  bool timings = false;
  std::string param;
  std::string range;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* window_opt = nullptr;
};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("file", flags.file, "Instance file (JSON)")->required();
  flags.tol_opt = sub->add_option("--tol", flags.tol, "Positivity / interpolation tolerance");
  flags.order_opt = sub->add_option("--order", flags.order, "Maximal total moment degree");
  flags.window_opt = sub->add_option("--window", flags.window, "Compression window");
  auto* json = sub->add_flag("--json", flags.json, "JSON report");
  auto* text = sub->add_flag("--text", flags.text, "Text report (default)");
  json->excludes(text);
  sub->add_flag("--timings", flags.timings, "Append elapsed time (breaks byte-identical output)");
}

// Command-line flags override the file's options, which override defaults.
void resolve_options(Flags& flags, const InstanceOptions& options) {
  if (flags.tol_opt->count() == 0 && options.tol) flags.tol = *options.tol;
  if (flags.order_opt->count() == 0 && options.order) flags.order = *options.order;
  if (flags.window_opt->count() == 0 && options.window) flags.window = *options.window;
}

OracleResults run_oracles(const TCInstance& inst, const Verdict& verdict, const Flags& flags) {
  OracleResults o;
  o.order = flags.order;
  o.window = flags.window;
  o.h0 = check_membership_H0(inst, std::min(kH0Depth, inst.depth()));
  if (verdict.berger) {
    o.interpolation = moment_interpolation_check(inst, *verdict.berger, flags.order, flags.tol);
  }
  const int n = flags.order / 2;
  const auto count = static_cast<std::size_t>(2 * n + 2);
  for (int k = 0; k <= flags.window; ++k) {
    o.hankel.push_back({fmt::format("row {}", k), hankel_psd(row_moments(inst, k, count), n)});
    o.hankel.push_back({fmt::format("column {}", k), hankel_psd(column_moments(inst, k, count), n)});
  }
  o.moment_matrix = moment_matrix_2d(inst, n);
  o.compression = joint_hyponormality_compression(inst, flags.window);
  return o;
}

struct Range {
  double lo;
  double hi;
  double step;
};

Range parse_range(const std::string& text) {
  Range r{};
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.step) || c1 != ':' || c2 != ':' || !(r.step > 0.0) ||
      r.hi < r.lo) {
    throw CLI::ValidationError("--range", "expected lo:hi:step with step > 0 and hi >= lo");
  }
  return r;
}

std::string sweep_line(const InstanceFile& base, const std::string& param, double value,
                       double tol, bool as_json) {
  nlohmann::ordered_json j;
  j["param"] = param;
  j["value"] = value;
  std::string text = fmt::format("{} = {:.6g}: ", param, value);
  try {
    const auto file = base.with_parameter(param, value);
    const auto verdict = subnormality_verdict(file.build(), tol);
    j["subnormal"] = verdict.subnormal;
    if (verdict.witness) {
      j["witness"] = {{"measure", to_string(verdict.witness->source)},
                      {"location", verdict.witness->location},
                      {"mass", verdict.witness->mass}};
      text += fmt::format("not subnormal ({} has mass {:.6g} at {:.6g})",
                          to_string(verdict.witness->source), verdict.witness->mass,
                          verdict.witness->location);
    } else {
      j["witness"] = nullptr;
      text += "subnormal";
    }
  } catch (const Error& e) {
    j["error"] = e.what();
    text += fmt::format("invalid ({})", e.what());
  }
  return as_json ? j.dump() : text;
}

int run_sweep(const InstanceFile& file, const Flags& flags, std::ostream& out) {
  const auto range = parse_range(flags.range);
  (void)file.with_parameter(flags.param, range.lo);  // rejects unknown names up front
  const auto count =
      static_cast<std::size_t>(std::floor((range.hi - range.lo) / range.step + 1e-9)) + 1;
  std::vector<std::future<std::string>> lines;
  lines.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double value = range.lo + static_cast<double>(i) * range.step;
    lines.push_back(std::async(std::launch::async, sweep_line, std::cref(file),
                               std::cref(flags.param), value, flags.tol, flags.json));
  }
  for (auto& line : lines) out << line.get() << "\n";
  return kSubnormal;
}

int execute(const std::string& command, Flags& flags, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  InstanceFile file;
  try {
    file = parse_instance(flags.file);
  } catch (const Error& e) {
    err << (e.code() == ErrorCode::ParseError ? "parse error: " : "invalid instance: ") << e.what()
        << "\n";
    return e.code() == ErrorCode::ParseError ? kParseError : kInvalidInstance;
  }
  resolve_options(flags, file.options);

  try {
    if (command == "sweep") return run_sweep(file, flags, out);

    Report report;
    report.command = command;
    report.kind = file.is_flat() ? "flat" : "tc";
    report.include_measures = command != "check";
    if (command == "flat") {
      if (!file.is_flat()) {
        err << "invalid instance: the flat command needs a file of kind \"flat\"\n";
        return kInvalidInstance;
      }
      report.verdict = flat_verdict(file.flat(), flags.tol);
    } else {
      const int depth = std::max({kDefaultDepth, flags.order + 2, flags.window + 2});
      const auto inst = file.build(depth);
      report.verdict = subnormality_verdict(inst, flags.tol);
      if (command == "verify") report.oracles = run_oracles(inst, report.verdict, flags);
    }
    if (flags.timings) {
      report.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
              .count();
    }
    out << (flags.json ? render_json(report) : render_text(report));
    return report.verdict.subnormal ? kSubnormal : kNotSubnormal;
  } catch (const Error& e) {
    err << "invalid instance: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kParseError : kInvalidInstance;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subnormality of 2-variable weighted shifts with tensor-form core", "tcshift"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"check", "Decide subnormality"},
      {"reconstruct", "Decide subnormality and print the Berger measure"},
      {"flat", "Decide a flat instance through the flat-shift criterion"},
      {"verify", "Decide and cross-check with brute-force moment oracles"},
      {"sweep", "Decide over a grid of one scalar parameter"}};
  for (const auto& [name, description] : commands) {
    auto* sub = app.add_subcommand(name, description);
    add_common(sub, flags);
    if (name == "sweep") {
      sub->add_option("--param", flags.param, "Parameter to vary (a; or a, b, p, q, l, m)")
          ->required();
      sub->add_option("--range", flags.range, "lo:hi:step")->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
    for (const auto* sub : app.get_subcommands()) {
      if (sub->get_name() == "sweep") (void)parse_range(flags.range);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return execute(command, flags, out, err);
}

}  // namespace tcshift::cli
