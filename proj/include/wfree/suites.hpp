#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wfree/superdata.hpp"

namespace wfree {

// One verified property. `witness` holds the first failing input (field
// expressions as JSON) and stays null on success.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string name) : check(std::move(name)) {}

  std::string check;
  bool pass = true;
  nlohmann::json witness;
  std::vector<int> weights_tested;  // doubled
  nlohmann::json data;              // numbers the check produced, e.g. dimensions
};

nlohmann::json to_json(const CheckResult& r);

struct SuiteOptions {
  std::string algebra = "sl2-regular";   // label used in reports
  std::optional<GoodGrading> grading;    // defaults to the preset named by `algebra`
  Level level = Level::symbolic();
  int max_weight2 = 6;
  std::uint64_t seed = 20240521;
  int samples = 100;  // random composites per algebra (wick)
  int n = 3;          // rank bound for wbn, fs, wakimoto

  GoodGrading resolved_grading() const;
};

// Skew-symmetry, Jacobi, Wick formula and mode commutators on seeded random
// composites of doubled weight <= min(max_weight2, 6), for V^tau(g_0) (x) F
// and the reduced complex of the grading.
std::vector<CheckResult> suite_wick(const SuiteOptions& o);
// Embedding in the full complex, d_(0)^2 = 0, and graded cohomology against
// the expected character.
std::vector<CheckResult> suite_brst(const SuiteOptions& o);
// Fateev-Lukyanov fields for ranks 1..n: top coefficient, congruences mod C_2,
// screenings, and the rank-one closed form.
std::vector<CheckResult> suite_wbn(const SuiteOptions& o);
// Feigin-Semikhatov fields for ranks 2..n: Gram matrix, the two forms of F,
// and annihilation of E and F by every A_i and Q.
std::vector<CheckResult> suite_fs(const SuiteOptions& o);
// Wakimoto map for sl_m subregular, 3 <= m <= max(n, 3): g_0 brackets and
// the lattice form of the screenings.
std::vector<CheckResult> suite_wakimoto(const SuiteOptions& o);
// H^0 classes projected to V^tau(g_0) (x) F land in the screening kernel and
// span it; one-dimensional spaces report the proportionality scalar.
std::vector<CheckResult> suite_miura(const SuiteOptions& o);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace wfree
