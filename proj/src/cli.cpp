#include "wfree/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wfree/character.hpp"
#include "wfree/datum_io.hpp"
#include "wfree/fields.hpp"
#include "wfree/screening.hpp"
#include "wfree/suites.hpp"

namespace wfree {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string preset;
  std::string datum;
  std::string labels;
  std::string level = "symbolic";
  int max_weight2 = -1;  // per-command default when negative
  std::uint64_t seed = 20240521;
  int samples = 100;
  int n = 3;
  std::string out;
  std::string format = "json";
  std::string screenings = "generic";
  std::string suite;
};

std::string weight_str(int w2) { return w2 % 2 == 0 ? std::to_string(w2 / 2) : std::to_string(w2) + "/2"; }

Level parse_level(const std::string& s) {
  if (s == "symbolic") return Level::symbolic();
  try {
    return Level::value(parse_rational(s));
  } catch (const ScalarParseError&) {
    throw UsageError("--level expects 'symbolic' or a rational p/q, got '" + s + "'");
  }
}

std::vector<int> parse_labels(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--labels expects comma-separated doubled integers, got '" + s + "'");
    }
  }
  return out;
}

struct Target {
  std::string name;
  GoodGrading grading;
};

Target resolve(const Config& c) {
  if (c.preset.empty() == c.datum.empty()) throw UsageError("give exactly one of --preset and --datum");
  Target t;
  if (!c.preset.empty()) {
    t.name = c.preset;
    t.grading = make_preset(c.preset).grading;
    if (!c.labels.empty()) {
      std::vector<int> fs;
      for (const auto& [a, x] : t.grading.f) fs.push_back(a);
      t.grading = make_grading(t.grading.g, parse_labels(c.labels), fs);
    }
    return t;
  }
  DatumDocument doc = load_datum(c.datum);
  if (!c.labels.empty()) doc.labels2 = parse_labels(c.labels);
  t.name = doc.datum->name;
  t.grading = doc.grading();
  return t;
}

void emit(const Config& c, const nlohmann::json& j, const std::string& table, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
  }
  out << (c.format == "table" ? table : text);
}

// ------------------------------------------------------------------ info

int cmd_info(const Config& c, std::ostream& out) {
  const Target t = resolve(c);
  const GoodGrading& gr = t.grading;
  const auto& g = *gr.g;
  const int max2 = c.max_weight2 < 0 ? 8 : c.max_weight2;
  nlohmann::json j;
  j["algebra"] = t.name;
  j["dim"] = g.dim;
  j["rank"] = g.rank;
  j["h_dual"] = to_string(g.h_dual);
  j["grading_labels2"] = gr.labels2;
  nlohmann::json basis = nlohmann::json::array();
  for (int a = 0; a < g.dim; ++a)
    basis.push_back({{"name", g.names[a]}, {"parity", g.parity[a]}, {"degree", weight_str(gr.deg2[a])}});
  j["basis"] = basis;
  nlohmann::json f = nlohmann::json::array();
  for (const auto& [a, x] : gr.f) f.push_back({g.names[a], to_string(x)});
  j["f"] = f;
  const auto rb = restricted_base(gr);
  nlohmann::json pi = nlohmann::json::array(), classes = nlohmann::json::array();
  for (int a : rb.elements)
    pi.push_back({{"name", g.names[a]}, {"degree", weight_str(gr.deg2[a])}, {"parity", g.parity[a]}});
  for (const auto& cl : rb.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (int a : cl) members.push_back(g.names[a]);
    classes.push_back(members);
  }
  j["restricted_base"] = pi;
  j["classes"] = classes;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : strong_generators(gr)) gens.push_back({{"weight", weight_str(s.weight2)}, {"parity", s.parity}});
  j["generators"] = gens;
  const auto ch = expected_character(gr, max2);
  j["expected_character"] = ch;

  std::ostringstream tb;
  tb << t.name << ": dim " << g.dim << ", rank " << g.rank << ", h^vee " << to_string(g.h_dual) << "\n";
  tb << "restricted base:";
  for (int a : rb.elements) tb << " " << g.names[a] << "(" << weight_str(gr.deg2[a]) << ")";
  tb << "\nclasses:";
  for (const auto& cl : rb.classes) {
    tb << " {";
    for (size_t i = 0; i < cl.size(); ++i) tb << (i ? "," : "") << g.names[cl[i]];
    tb << "}";
  }
  tb << "\ngenerator weights:";
  for (const auto& s : strong_generators(gr)) tb << " " << weight_str(s.weight2) << (s.parity ? "(odd)" : "");
  tb << "\nweight  expected\n";
  for (int w = 0; w <= max2; ++w) tb << std::setw(6) << weight_str(w) << "  " << ch[w] << "\n";
  emit(c, j, tb.str(), out);
  return 0;
}

// ------------------------------------------------------------------ kernel

int cmd_kernel(const Config& c, std::ostream& out) {
  const Target t = resolve(c);
  const Level level = parse_level(c.level);
  const int max2 = c.max_weight2 < 0 ? 6 : c.max_weight2;
  G0Algebra A = build_g0_algebra(t.grading, level);
  std::vector<ScreeningOp> ops;
  if (c.screenings == "generic")
    ops = generic_screenings(A);
  else if (A.grading.abelian_g0())
    ops = exponential_screenings(A);
  else
    throw UsageError("exponential screenings need g_0 to be the Cartan subalgebra");
  const auto want = expected_character(t.grading, max2);
  const Module& fock = A.vertex().fock();
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream tb;
  tb << "weight  ambient  kernel  expected  status\n";
  for (int w = 0; w <= max2; ++w) {
    KernelReport r = screening_kernel(A, ops, w);
    r.expected_dim = want[w];
    const bool good = r.kernel_dim == r.expected_dim && r.rechecked;
    ok &= good;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : r.basis) basis.push_back(state_json(fock, v));
    reports.push_back({{"weight2", r.weight2},
                       {"ambient_dim", r.ambient_dim},
                       {"kernel_dim", r.kernel_dim},
                       {"expected_dim", r.expected_dim},
                       {"basis", basis},
                       {"denominators", r.denominators}});
    tb << std::setw(6) << weight_str(w) << std::setw(9) << r.ambient_dim << std::setw(8) << r.kernel_dim
       << std::setw(10) << r.expected_dim << "  " << (good ? "ok" : "MISMATCH") << "\n";
  }
  nlohmann::json j = {{"algebra", t.name},     {"level", level.str()},   {"screenings", c.screenings},
                      {"max_weight2", max2},   {"reports", reports},     {"status", ok ? "pass" : "fail"}};
  emit(c, j, tb.str(), out);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Config& c, std::ostream& out) {
  SuiteOptions o;
  const bool needs_algebra = c.suite == "wick" || c.suite == "brst" || c.suite == "miura";
  if (needs_algebra) {
    Config d = c;
    if (d.preset.empty() && d.datum.empty()) d.preset = "sl2-regular";
    Target t = resolve(d);
    o.algebra = t.name;
    o.grading = t.grading;
  } else if (!c.preset.empty() || !c.datum.empty()) {
    throw UsageError("suite '" + c.suite + "' builds its own models; drop --preset/--datum");
  }
  o.level = parse_level(c.level);
  o.max_weight2 = c.max_weight2 < 0 ? 6 : c.max_weight2;
  o.seed = c.seed;
  o.samples = c.samples;
  o.n = c.n;
  const auto results = run_suite(c.suite, o);
  bool ok = true;
  nlohmann::json checks = nlohmann::json::array();
  std::ostringstream tb;
  for (const auto& r : results) {
    ok &= r.pass;
    checks.push_back(to_json(r));
    tb << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
  }
  nlohmann::json j = {{"suite", c.suite},       {"level", o.level.str()}, {"seed", o.seed},
                      {"max_weight2", o.max_weight2}, {"n", o.n},      {"checks", checks},
                      {"status", ok ? "pass" : "fail"}};
  if (needs_algebra) j["algebra"] = o.algebra;
  emit(c, j, tb.str(), out);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ export

int cmd_export(const Config& c, std::ostream& out) {
  const Target t = resolve(c);
  std::vector<int> fs;
  for (const auto& [a, x] : t.grading.f) fs.push_back(a);
  nlohmann::json j = datum_to_json(*t.grading.g, t.grading.labels2, fs);
  emit(c, j, j.dump(2) + "\n", out);
  return 0;
}

void add_algebra_flags(CLI::App* sub, Config& c) {
  sub->add_option("--preset", c.preset, "Preset algebra, e.g. sl3-subregular");
  sub->add_option("--datum", c.datum, "Algebra-description JSON file");
  sub->add_option("--labels", c.labels, "Doubled grading labels on the simple roots, comma separated");
}

void add_output_flags(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out, "Also write the JSON report to this file");
  sub->add_option("--format", c.format, "Standard output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Screening-operator realizations of W-algebras over Q(k).\n"
               "Weights are given doubled: --max-weight 12 means conformal weight 6."};
  app.require_subcommand(1);
  std::string presets;
  for (const auto& p : preset_names()) presets += (presets.empty() ? "" : ", ") + p;

  auto* info = app.add_subcommand("info", "Roots, grading, restricted base, generators and expected character");
  add_algebra_flags(info, c);
  info->add_option("--max-weight", c.max_weight2, "Doubled weight bound for the character (default 8)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(info, c);

  auto* kernel = app.add_subcommand("kernel", "Joint kernel of the screening operators, one report per weight");
  add_algebra_flags(kernel, c);
  kernel->add_option("--level", c.level, "symbolic or a rational p/q");
  kernel->add_option("--max-weight", c.max_weight2, "Doubled weight bound (default 6)")->check(CLI::NonNegativeNumber);
  kernel->add_option("--screenings", c.screenings, "generic or exponential")
      ->check(CLI::IsMember({"generic", "exponential"}));
  add_output_flags(kernel, c);

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->add_option("suite", c.suite, "wick, brst, wbn, fs, wakimoto or miura")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_algebra_flags(verify, c);
  verify->add_option("--level", c.level, "symbolic or a rational p/q");
  verify->add_option("--max-weight,--weight", c.max_weight2, "Doubled weight bound (default 6)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", c.seed, "Seed for sampled composites");
  verify->add_option("--samples", c.samples, "Random composites per algebra (wick)")->check(CLI::PositiveNumber);
  verify->add_option("--n", c.n, "Rank bound for wbn, fs and wakimoto")->check(CLI::Range(1, 6));
  add_output_flags(verify, c);

  auto* exp = app.add_subcommand("export", "Write the algebra-description JSON of a preset or datum");
  add_algebra_flags(exp, c);
  add_output_flags(exp, c);
  app.footer("Presets: " + presets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    if (info->parsed()) return cmd_info(c, out);
    if (kernel->parsed()) return cmd_kernel(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    return cmd_export(c, out);
  } catch (const CriticalLevel& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidDatum& e) {
    err << "error: invalid datum: " << e.what() << "\n";
  } catch (const NotGoodGrading& e) {
    err << "error: not a good grading: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace wfree
