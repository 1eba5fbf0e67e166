#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qseries/series.hpp"

namespace qseries {

/// How the two sides of a check are compared.
///  exact: coefficientwise equality.
///  congruent: lhs - rhs reduces to 0 modulo `modulus`.
///  residue_vanishing: coefficients of lhs - rhs (rhs may be absent) at
///    exponents in `residues` modulo `class_modulus` vanish, modulo `modulus`
///    (or exactly when modulus is 0).
struct Mode {
  enum class Kind { Exact, Congruent, ResidueVanishing };
  Kind kind = Kind::Exact;
  long modulus = 0;
  int class_modulus = 0;
  std::vector<int> residues;

  static Mode exact() { return {}; }
  static Mode congruent(long m) { return {Kind::Congruent, m, 0, {}}; }
  static Mode residue_vanishing(long m, int class_modulus, std::vector<int> residues) {
    return {Kind::ResidueVanishing, m, class_modulus, std::move(residues)};
  }
  std::string str() const;
};

using AnySeries = std::variant<Series, DualSeries, ZSeries, ZDualSeries>;
using Builder = std::function<AnySeries(int order)>;

struct CheckCase {
  std::string label;
  Builder lhs;
  /// Empty means the zero series.
  Builder rhs;
};

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string anchor;
  std::vector<std::string> tags;
  std::vector<CheckCase> cases;
  Mode mode;
  int min_exp = INT_MIN;
  int order = 40;
  std::string note;
  /// Exponents whose values are reported but never fail the check.
  std::vector<int> probes;

  bool has_tag(const std::string& t) const;
};

struct MismatchReport {
  std::string case_label;
  int exponent = 0;
  std::string lhs;
  std::string rhs;
};

struct ProbeReport {
  std::string case_label;
  int exponent = 0;
  std::string lhs;
  std::string rhs;
  bool agree = false;
};

struct IdentityReport {
  std::string id;
  bool passed = false;
  int order = 0;
  int effective_order = 0;
  int min_exp = INT_MIN;
  std::string mode;
  std::optional<MismatchReport> first_mismatch;
  std::vector<ProbeReport> probes;
  double runtime_ms = 0.0;
  std::string error_kind;
  std::string error;
  std::string note;
};

struct RunOptions {
  std::optional<int> order;
  std::optional<int> min_exp;
};

IdentityReport run_check(const IdentityCheck& check, const RunOptions& opts = {});

/// The full catalogue in a stable order.
const std::vector<IdentityCheck>& registry();

/// Every name is "all", a tag, or an id; result keeps registry order without
/// duplicates. Unknown names raise UsageError.
std::vector<const IdentityCheck*> select(const std::vector<std::string>& names);

/// Runs the checks on up to `jobs` threads; reports come back in input order.
std::vector<IdentityReport> run_suite(const std::vector<const IdentityCheck*>& checks, const RunOptions& opts = {},
                                      int jobs = 0);

bool all_passed(const std::vector<IdentityReport>& reports);

nlohmann::json report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const IdentityReport& r);

}  // namespace qseries
