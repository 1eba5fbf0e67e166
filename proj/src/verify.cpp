#include "qseries/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <omp.h>

namespace qseries {

std::string Mode::str() const {
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::Congruent: return "congruent(" + std::to_string(modulus) + ")";
    case Kind::ResidueVanishing: {
      std::string r;
      for (int x : residues) {
        r += (r.empty() ? "" : ",") + std::to_string(x);
      }
      return "residue-vanishing(mod " + (modulus == 0 ? std::string("exact") : std::to_string(modulus)) +
             "; q^e, e = " + r + " mod " + std::to_string(class_modulus) + ")";
    }
  }
  return "?";
}

bool IdentityCheck::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

struct CaseOutcome {
  int effective_order = 0;
  std::optional<MismatchReport> mismatch;
  std::vector<ProbeReport> probes;
};

template <class S>
S zero_like(const S& s, int order) {
  return S::zero(std::max(order, s.order()));
}

/// True when the coefficients agree under the mode (residue filtering is
/// done by the caller).
bool agree(const Mode& mode, const Rational& a, const Rational& b) {
  if (mode.kind == Mode::Kind::Exact || mode.modulus == 0) {
    return a == b;
  }
  return mod_residue(a - b, mode.modulus) == 0;
}

template <class S>
CaseOutcome compare_sides(const IdentityCheck& check, const std::string& label, const S& lhs, const S& rhs,
                          int order, int min_exp) {
  CaseOutcome out;
  out.effective_order = std::min({lhs.order(), rhs.order(), order});
  const int start = std::max(min_exp, std::min(lhs.lower(), rhs.lower()));
  const Mode& mode = check.mode;
  for (int e : check.probes) {
    if (e <= out.effective_order) {
      auto a = lhs.coef(e);
      auto b = rhs.coef(e);
      bool same = false;
      if constexpr (std::is_same_v<S, Series>) {
        same = agree(mode, a, b);
      } else {
        same = a == b;
      }
      out.probes.push_back({label, e, to_string(a), to_string(b), same});
    }
  }
  if (mode.kind == Mode::Kind::Exact) {
    auto c = compare(lhs, rhs, start, out.effective_order);
    out.effective_order = c.effective_order;
    if (c.mismatch) {
      out.mismatch = MismatchReport{label, c.mismatch->exponent, c.mismatch->lhs, c.mismatch->rhs};
    }
    return out;
  }
  if constexpr (!std::is_same_v<S, Series>) {
    throw InvalidConstruction("modular comparison needs rational coefficients");
  } else {
    for (int e = start; e <= out.effective_order; ++e) {
      if (mode.kind == Mode::Kind::ResidueVanishing) {
        const int r = ((e % mode.class_modulus) + mode.class_modulus) % mode.class_modulus;
        if (std::find(mode.residues.begin(), mode.residues.end(), r) == mode.residues.end()) {
          continue;
        }
      }
      const Rational a = lhs.coef(e);
      const Rational b = rhs.coef(e);
      if (!agree(mode, a, b)) {
        out.mismatch = MismatchReport{label, e, a.str(), b.str()};
        break;
      }
    }
    return out;
  }
}

CaseOutcome run_case(const IdentityCheck& check, const CheckCase& c, int order, int min_exp) {
  AnySeries lhs = c.lhs(order);
  AnySeries rhs = c.rhs ? c.rhs(order) : std::visit([&](const auto& s) -> AnySeries { return zero_like(s, order); }, lhs);
  if (lhs.index() != rhs.index()) {
    throw InvalidConstruction("the two sides of '" + c.label + "' live over different coefficient rings");
  }
  return std::visit(
      [&](const auto& a) {
        using S = std::decay_t<decltype(a)>;
        return compare_sides(check, c.label, a, std::get<S>(rhs), order, min_exp);
      },
      lhs);
}

}  // namespace

IdentityReport run_check(const IdentityCheck& check, const RunOptions& opts) {
  IdentityReport rep;
  rep.id = check.id;
  rep.order = opts.order.value_or(check.order);
  rep.min_exp = opts.min_exp.value_or(check.min_exp);
  rep.mode = check.mode.str();
  rep.note = check.note;
  rep.effective_order = rep.order;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (rep.order < 1) {
      throw UsageError("order must be at least 1");
    }
    for (const auto& c : check.cases) {
      CaseOutcome o = run_case(check, c, rep.order, rep.min_exp);
      rep.effective_order = std::min(rep.effective_order, o.effective_order);
      rep.probes.insert(rep.probes.end(), o.probes.begin(), o.probes.end());
      if (o.mismatch && !rep.first_mismatch) {
        rep.first_mismatch = o.mismatch;
      }
    }
    rep.passed = !rep.first_mismatch;
  } catch (const Error& e) {
    rep.passed = false;
    rep.error_kind = e.kind();
    rep.error = e.what();
  } catch (const std::exception& e) {
    rep.passed = false;
    rep.error_kind = "internal";
    rep.error = e.what();
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<const IdentityCheck*> select(const std::vector<std::string>& names) {
  const auto& all = registry();
  std::set<std::size_t> chosen;
  for (const auto& name : names) {
    bool hit = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (name == "all" || all[i].id == name || all[i].has_tag(name)) {
        chosen.insert(i);
        hit = true;
      }
    }
    if (!hit) {
      throw UsageError("unknown suite or identity '" + name + "'");
    }
  }
  std::vector<const IdentityCheck*> out;
  for (std::size_t i : chosen) {
    out.push_back(&all[i]);
  }
  return out;
}

std::vector<IdentityReport> run_suite(const std::vector<const IdentityCheck*>& checks, const RunOptions& opts,
                                      int jobs) {
  std::vector<IdentityReport> reports(checks.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    reports[static_cast<std::size_t>(i)] = run_check(*checks[static_cast<std::size_t>(i)], opts);
  }
  return reports;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["passed"] = r.passed;
  j["order"] = r.order;
  j["effective_order"] = r.effective_order;
  j["min_exp"] = r.min_exp == INT_MIN ? nlohmann::json(nullptr) : nlohmann::json(r.min_exp);
  j["mode"] = r.mode;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"case", r.first_mismatch->case_label},
                           {"exponent", r.first_mismatch->exponent},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["probes"] = nlohmann::json::array();
  for (const auto& p : r.probes) {
    j["probes"].push_back(
        {{"case", p.case_label}, {"exponent", p.exponent}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"agree", p.agree}});
  }
  j["runtime_ms"] = r.runtime_ms;
  if (r.error_kind.empty()) {
    j["error"] = nullptr;
  } else {
    j["error"] = {{"kind", r.error_kind}, {"message", r.error}};
  }
  j["note"] = r.note;
  return j;
}

IdentityReport report_from_json(const nlohmann::json& j) {
  IdentityReport r;
  r.id = j.at("id").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.order = j.at("order").get<int>();
  r.effective_order = j.at("effective_order").get<int>();
  r.min_exp = j.at("min_exp").is_null() ? INT_MIN : j.at("min_exp").get<int>();
  r.mode = j.at("mode").get<std::string>();
  if (const auto& m = j.at("first_mismatch"); !m.is_null()) {
    r.first_mismatch = MismatchReport{m.at("case").get<std::string>(), m.at("exponent").get<int>(),
                                      m.at("lhs").get<std::string>(), m.at("rhs").get<std::string>()};
  }
  for (const auto& p : j.at("probes")) {
    r.probes.push_back({p.at("case").get<std::string>(), p.at("exponent").get<int>(), p.at("lhs").get<std::string>(),
                        p.at("rhs").get<std::string>(), p.at("agree").get<bool>()});
  }
  r.runtime_ms = j.at("runtime_ms").get<double>();
  if (const auto& e = j.at("error"); !e.is_null()) {
    r.error_kind = e.at("kind").get<std::string>();
    r.error = e.at("message").get<std::string>();
  }
  r.note = j.at("note").get<std::string>();
  return r;
}

std::string report_to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.id << "  order " << r.effective_order;
  if (r.effective_order != r.order) {
    os << " (requested " << r.order << ")";
  }
  os << "  " << r.mode;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "  " << r.runtime_ms << " ms";
  if (!r.error_kind.empty()) {
    os << "\n    error[" << r.error_kind << "]: " << r.error;
  }
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    os << "\n    first mismatch";
    if (!m.case_label.empty()) {
      os << " [" << m.case_label << "]";
    }
    os << " at q^" << m.exponent << ": lhs " << m.lhs << ", rhs " << m.rhs;
  }
  for (const auto& p : r.probes) {
    os << "\n    probe";
    if (!p.case_label.empty()) {
      os << " [" << p.case_label << "]";
    }
    os << " q^" << p.exponent << ": lhs " << p.lhs << ", rhs " << p.rhs << (p.agree ? " (agree)" : " (differ)");
  }
  return os.str();
}

}  // namespace qseries
