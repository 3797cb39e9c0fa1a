// osculant: certification reports for the osculating-tangent line set of
// Cayley's ruled cubic. Exit codes: 0 ok or as predicted, 1 usage error,
// 2 a check disagreed with its prediction.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "osculant/commands.hpp"

namespace {

struct Args {
  std::string field;
  std::string out;
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  unsigned degree = 2;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Args& a, bool field_required) {
  auto* f = sub->add_option("--field", a.field, "ground field: gf:<p> or q");
  if (field_required) f->required();
  sub->add_option("--out", a.out, "write the JSON report to this path");
  sub->add_flag("--json", a.json, "print the JSON report instead of a summary");
  sub->add_flag("--timing", a.timing, "include per-check wall-clock times in the JSON");
  sub->add_option("--seed", a.seed, "seed for sampled checks");
  sub->add_option("--samples", a.samples, "number of random samples");
  sub->add_option("--threads", a.threads, "worker threads, 0 for all cores");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace osculant;
  CLI::App app{"Exact certification of the osculating tangents of Cayley's ruled cubic"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Args a;
  auto* certify = app.add_subcommand("certify", "spread, covering, maximality and dual-spread checks");
  auto* klein = app.add_subcommand("klein", "Klein-image variety, reguli and projection checks");
  auto* char3 = app.add_subcommand("char3", "characteristic-3 congruence and osculating-plane pencil");
  auto* ideal = app.add_subcommand("ideal", "degree-bounded vanishing-form probe over Q");
  add_common(certify, a, true);
  add_common(klein, a, true);
  add_common(char3, a, true);
  add_common(ideal, a, false);
  ideal->add_option("--degree", a.degree, "form degree, 1 to 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report report;
  try {
    CommandOptions opts;
    opts.seed = a.seed;
    if (a.samples != 0) opts.samples = a.samples;
    opts.degree = a.degree;
    opts.threads = resolve_threads(a.threads);
    if (ideal->parsed()) {
      if (!a.field.empty() && !parse_field_spec(a.field).is_rational()) {
        throw UsageError("ideal works over q only");
      }
      report = cmd_ideal(opts);
    } else {
      const FieldSpec spec = parse_field_spec(a.field);
      if (certify->parsed()) report = cmd_certify(spec, opts);
      if (klein->parsed()) report = cmd_klein(spec, opts);
      if (char3->parsed()) report = cmd_char3(spec, opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  const std::string body = render_json(report, a.timing);
  if (!a.out.empty()) {
    std::ofstream file(a.out, std::ios::binary);
    if (!file || !(file << body)) {
      std::cerr << "cannot write " << a.out << "\n";
      return 1;
    }
  }
  std::cout << (a.json ? body : render_text(report));
  return report.has_violation() ? 2 : 0;
}
