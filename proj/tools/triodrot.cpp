// Command-line front end: triodrot <command> [args].
// Exit codes: 0 success, 1 domain error (bad input, failed check), 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triodrot/classify.hpp"
#include "triodrot/construct.hpp"
#include "triodrot/error.hpp"
#include "triodrot/graph.hpp"
#include "triodrot/harness.hpp"
#include "triodrot/report.hpp"
#include "triodrot/semiconj.hpp"

namespace {

using namespace triodrot;

struct Failure {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{"cannot write " + out_path};
  out << text;
}

TriodPattern load(const std::string& path) { return parse_pattern(slurp(path)); }

std::optional<bool> parse_flag(const std::string& text, const char* option) {
  if (text.empty()) return std::nullopt;
  if (text == "true") return true;
  if (text == "false") return false;
  throw CLI::ValidationError(option, "expected true or false");
}

std::optional<CodeClass> parse_code_class(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (auto c : {CodeClass::StrictlyIncreasing, CodeClass::NonDecreasing, CodeClass::Decreasing, CodeClass::Undefined}) {
    if (text == code_class_name(c)) return c;
  }
  throw CLI::ValidationError("--code-class", "unknown code class '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation theory of cycles on triods"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  bool as_json = false;
  bool as_text = false;

  auto* analyze = app.add_subcommand("analyze", "classify a pattern file");
  analyze->add_option("file", file, "pattern file")->required();
  auto* aj = analyze->add_flag("--json", as_json, "JSON report");
  analyze->add_flag("--text", as_text, "plain-text report (default)")->excludes(aj);

  auto* interval = app.add_subcommand("interval", "forced rotation interval");
  interval->add_option("file", file, "pattern file")->required();
  auto* ij = interval->add_flag("--json", as_json, "JSON output");
  interval->add_flag("--text", as_text, "plain-text output (default)")->excludes(ij);

  std::string kind;
  std::string rho_text;
  int branch = 0;
  int k = 2;
  auto* construct = app.add_subcommand("construct", "build a twist or strangely ordered pattern");
  construct->add_option("kind", kind, "twist or strange")->required()->check(CLI::IsMember({"twist", "strange"}));
  construct->add_option("--rho", rho_text, "rotation number p/q in lowest terms")->required();
  construct->add_option("--branch", branch, "branch j carrying the x points")->check(CLI::Range(0, 2));
  construct->add_option("-k", k, "number of glued copies (strange only)");
  construct->add_option("-o", out_path, "output pattern file");

  auto* semiconj = app.add_subcommand("semiconj", "semi-conjugacy to the circle rotation");
  semiconj->add_option("file", file, "pattern file")->required();

  std::size_t period = 0;
  std::string rho_filter;
  std::string class_filter;
  std::string twist_filter;
  std::string strange_filter;
  int workers = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list all patterns of a period");
  enumerate->add_option("period", period, "period n >= 2")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--rho", rho_filter, "keep this rotation number");
  enumerate->add_option("--code-class", class_filter, "strictly_increasing | non_decreasing | decreasing | undefined");
  enumerate->add_option("--twist", twist_filter, "true or false");
  enumerate->add_option("--strange", strange_filter, "true or false");
  enumerate->add_option("--workers", workers, "worker threads (0: default)");
  enumerate->add_flag("--json", as_json, "pattern documents as a JSON array");

  std::size_t max_period = 0;
  bool serial = false;
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "run the property suite over the enumeration");
  verify->add_option("--max-period", max_period, "largest period checked (default: the cap)");
  verify->add_flag("--serial", serial, "use the serial reference sweep");
  verify->add_flag("--mutate", mutate, "inject the twist-ignores-regularity mutation");
  verify->add_option("--workers", workers, "worker threads (0: default)");
  verify->add_flag("--json", as_json, "JSON report");

  auto* render = app.add_subcommand("render", "SVG orbit diagram");
  render->add_option("file", file, "pattern file")->required();
  render->add_option("-o", out_path, "output SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      auto p = load(file);
      auto r = classify(p);
      std::cout << (as_json ? report_json(p, r) : report_text(p, r));
    } else if (interval->parsed()) {
      auto p = load(file);
      auto rotation = rotation_data(p);
      auto iv = rotation_interval(p);
      std::cout << (as_json ? interval_json(rotation, iv) : interval_text(rotation, iv));
    } else if (construct->parsed()) {
      TwistSpec spec{parse_rho(rho_text), branch};
      auto p = kind == "twist" ? construct_twist(spec) : construct_strange({spec, k});
      auto text = serialize_pattern(p);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        emit(text, out_path);
        std::cout << report_text(p, classify(p));
      }
    } else if (semiconj->parsed()) {
      auto p = load(file);
      auto s = build_semiconjugacy(p);
      auto check = verify_semiconjugacy(s, p);
      std::cout << semiconj_json(p, s, check);
      return check.ok ? 0 : 1;
    } else if (enumerate->parsed()) {
      EnumSpec spec;
      try {
        spec.period = period;
        spec.cap = period_cap_from_env();
        if (!rho_filter.empty()) spec.rotation_number = Rational::parse(rho_filter);
        spec.code_class = parse_code_class(class_filter);
        spec.twist = parse_flag(twist_filter, "--twist");
        spec.strangely_ordered = parse_flag(strange_filter, "--strange");
        spec.workers = workers;
      } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
      }
      auto patterns = enumerate_patterns(spec);
      if (as_json) {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& p : patterns) doc.push_back(nlohmann::ordered_json::parse(serialize_pattern(p)));
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& p : patterns) std::cout << describe(p) << "\n";
      }
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.cap = period_cap_from_env();
      options.parallel = !serial;
      options.workers = workers;
      options.mutation = mutate ? Mutation::TwistIgnoresRegularity : Mutation::None;
      auto report = verify_theorems(max_period == 0 ? options.cap : max_period, options);
      std::cout << (as_json ? to_json(report) : to_text(report));
      return report.passed() ? 0 : 1;
    } else if (render->parsed()) {
      emit(render_svg(load(file)), out_path);
    }
  } catch (const Error& e) {
    std::cerr << "triodrot: " << e.what() << "\n";
    return 1;
  } catch (const Failure& f) {
    std::cerr << "triodrot: " << f.message << "\n";
    return 1;
  }
  return 0;
}
