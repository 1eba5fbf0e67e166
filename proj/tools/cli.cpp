#include "cli.hpp"

#include <algorithm>
#include <iomanip>

#include "CLI11.hpp"
#include "qseries/lerch.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

namespace {

struct VerifyArgs {
  std::vector<std::string> suites;
  std::vector<std::string> ids;
  std::optional<int> order;
  std::optional<int> min_exp;
  std::string format = "text";
  int jobs = 0;
  int max_order = 200;
  bool allow_large = false;
  bool list = false;
};

void check_order(int order, int max_order, bool allow_large) {
  if (order < 1) {
    throw UsageError("--order must be at least 1");
  }
  if (order > max_order && !allow_large) {
    throw UsageError("--order " + std::to_string(order) + " exceeds the limit of " + std::to_string(max_order) +
                     " (pass --allow-large-order to override)");
  }
}

void print_catalogue(const std::vector<const IdentityCheck*>& checks, std::ostream& out) {
  for (const auto* c : checks) {
    out << c->id;
    for (const auto& t : c->tags) {
      out << " [" << t << "]";
    }
    out << "\n    " << c->description << "\n    anchor: \"" << c->anchor << "\"\n";
    if (!c->note.empty()) {
      out << "    note: " << c->note << "\n";
    }
  }
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> names = a.suites;
  names.insert(names.end(), a.ids.begin(), a.ids.end());
  if (names.empty()) {
    names.push_back("all");
  }
  auto checks = select(names);
  if (a.list) {
    print_catalogue(checks, out);
    return 0;
  }
  if (a.order) {
    check_order(*a.order, a.max_order, a.allow_large);
  }
  if (a.jobs < 0) {
    throw UsageError("--jobs must be positive");
  }
  auto reports = run_suite(checks, {a.order, a.min_exp}, a.jobs);
  if (a.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
    }
    out << arr.dump(2) << "\n";
  } else {
    long passed = 0;
    for (const auto& r : reports) {
      out << report_to_text(r) << "\n";
      passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << reports.size() << " checks passed\n";
  }
  return all_passed(reports) ? 0 : 1;
}

Series named_series(const std::string& name, int order) {
  if (name == "master5" || name == "master7") {
    return build_master_lhs(name.back() - '0', order);
  }
  if (name == "numerator5" || name == "numerator7") {
    return master_numerator(name.back() - '0', order);
  }
  if (name == "p") {
    std::vector<Rational> c;
    for (int n = 0; n <= order; ++n) {
      c.emplace_back(p_count(n));
    }
    return Series::from_coefficients(0, std::move(c), order);
  }
  return named_product(name, order);
}

int do_series(const std::string& name, int order, const std::string& format, int max_order, bool allow_large,
              std::ostream& out) {
  check_order(order, max_order, allow_large);
  Series s = named_series(name, order);
  if (format == "json") {
    nlohmann::json j;
    j["name"] = name;
    j["lower"] = s.lower();
    j["order"] = s.order();
    j["coefficients"] = nlohmann::json::array();
    for (int e = s.lower(); e <= s.order(); ++e) {
      j["coefficients"].push_back(s.coef(e).str());
    }
    out << j.dump(2) << "\n";
  } else {
    out << format_series(s) << "\n";
  }
  return 0;
}

std::string show_partition(const Partition& p) {
  if (p.empty()) {
    return "()";
  }
  std::string s;
  for (int x : p) {
    s += (s.empty() ? "" : "+") + std::to_string(x);
  }
  return s;
}

int do_partitions(int n, int k, const std::string& stat_arg, std::ostream& out) {
  const Stat which = parse_stat(stat_arg);
  if (n < 0) {
    throw UsageError("--n must be non-negative");
  }
  if (k < 2) {
    throw UsageError("--k must be at least 2");
  }
  if (n > 60) {
    throw UsageError("--n is limited to 60 for enumeration");
  }
  if (n <= 12) {
    out << std::left << std::setw(28) << "partition" << std::right << std::setw(6) << "rank" << std::setw(7)
        << "crank" << std::setw(7) << "parts" << std::setw(6) << "ones" << "\n";
    for (const auto& p : enumerate(n)) {
      out << std::left << std::setw(28) << show_partition(p) << std::right << std::setw(6) << rank(p)
          << std::setw(7) << crank(p) << std::setw(7) << p.size() << std::setw(6) << ones(p) << "\n";
    }
    out << "\n";
  }
  const StatTable t = stats(n, k, which);
  out << stat_name(which) << "(m," << k << "," << n << ")  total " << t.total() << "  (p(" << n << ") = "
      << p_count(n).get_str() << ")\n";
  for (int m = 0; m < k; ++m) {
    out << "  m=" << m << "  " << t.at(m) << "\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series engine and identity checker"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", va.suites, "suite tag or id (repeatable; default all)");
  verify->add_option("--id", va.ids, "identity id (repeatable)");
  verify->add_option("--order", va.order, "truncation order (overrides each check's default)");
  verify->add_option("--min-exp", va.min_exp, "first exponent compared");
  verify->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", va.jobs, "worker threads (default: all cores)");
  verify->add_option("--max-order", va.max_order, "safety limit for --order");
  verify->add_flag("--allow-large-order", va.allow_large, "ignore the --order safety limit");
  verify->add_flag("--list", va.list, "list the selected checks instead of running them");

  std::string series_name;
  int series_order = 20;
  std::string series_format = "text";
  int series_max = 200;
  bool series_large = false;
  auto* series = app.add_subcommand("series", "print a named series");
  series->add_option("name", series_name,
                     "G H L N Q A B C D E euler P25(i) P49(i) p master5 master7 numerator5 numerator7")
      ->required();
  series->add_option("--order", series_order, "truncation order");
  series->add_option("--format", series_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  series->add_option("--max-order", series_max, "safety limit for --order");
  series->add_flag("--allow-large-order", series_large, "ignore the --order safety limit");

  int pn = 0;
  int pk = 5;
  std::string pstat = "N";
  auto* partitions = app.add_subcommand("partitions", "partition statistics");
  partitions->require_subcommand(1);
  auto* pstats = partitions->add_subcommand("stats", "tabulate a statistic by residue");
  pstats->add_option("--n", pn, "integer to partition")->required();
  pstats->add_option("--k", pk, "modulus");
  pstats->add_option("--stat", pstat, "N|rank, NT|parts, Mw|crank|ones");

  auto* list = app.add_subcommand("list", "print the identity catalogue");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) {
      return do_verify(va, out);
    }
    if (*series) {
      return do_series(series_name, series_order, series_format, series_max, series_large, out);
    }
    if (*partitions) {
      return do_partitions(pn, pk, pstat, out);
    }
    if (*list) {
      print_catalogue(select({"all"}), out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error[" << e.kind() << "]: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qseries::cli
