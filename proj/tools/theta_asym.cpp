// Command-line front end: exact theta-quotient coefficient statistics, the
// closed-form asymptotic main terms, reproduction tables, invariant
// verification suites and CSV scan output.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "theta/errors.hpp"
#include "theta/format.hpp"
#include "theta/partition.hpp"
#include "theta/records.hpp"
#include "theta/verify.hpp"

namespace {

using namespace theta;

int output_records(const std::vector<ScanRecord>& recs, const RunConfig& cfg) {
  switch (cfg.output) {
    case RunConfig::Output::Csv:
      std::cout << records_to_csv(recs);
      break;
    case RunConfig::Output::Json:
      std::cout << records_to_json(recs);
      break;
    case RunConfig::Output::Tty:
      for (const ScanRecord& r : recs) std::cout << record_to_tty(r) << '\n';
      break;
  }
  return 0;
}

int print_checks(const std::vector<CheckResult>& checks, const RunConfig& cfg) {
  bool all_ok = true;
  for (const CheckResult& c : checks) all_ok = all_ok && c.pass;
  if (cfg.output == RunConfig::Output::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << nlohmann::json{{"pass", all_ok}, {"checks", arr}}.dump(2) << '\n';
    return all_ok ? 0 : 1;
  }
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
  }
  std::cout << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta-asym: exact and asymptotic partition statistics"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string output_name = "tty";
  app.add_option("--precision", cfg.precision, "working precision in decimal digits (>= 20)");
  app.add_option("--cache-dir", cfg.cache_dir, "directory for partition table cache files");
  app.add_option("--table-limit", cfg.table_limit, "hard cap on exact table size");
  app.add_option("--output", output_name, "output format: csv, json or tty")
      ->check(CLI::IsMember({"csv", "json", "tty"}));
  app.add_flag("--slow", cfg.slow, "enable the long-running table rows (200, 400)");

  // compute
  auto* compute = app.add_subcommand("compute", "one statistic: exact, asymptotic, ratio");
  std::string family_name_arg = "B", selector_arg = "main";
  long m = 0;
  unsigned k = 1;
  unsigned long n = 100;
  compute->add_option("--family", family_name_arg,
                      "statistic family: J A B I N NDIFF CRANK RANK");
  compute->add_option("-m,--m", m, "statistic index m");
  compute->add_option("-k,--k", k, "color count / rank order k");
  compute->add_option("-n,--n", n, "argument n");
  compute->add_option("--selector", selector_arg, "formula variant: main, wide or kdiff");

  // table
  auto* table = app.add_subcommand("table", "reproduce the numeric comparison tables");
  int which = 1;
  std::vector<unsigned> rows;
  table->add_option("--which", which, "table number: 1 or 2")->check(CLI::IsMember({1, 2}));
  table->add_option("--rows", rows, "row labels (subset of 50,100,200,400)")->delimiter(',');

  // verify
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "mass symmetry oracle unimodal coeffs falsetheta contraction all");

  // scan
  auto* scan = app.add_subcommand("scan", "CSV scan over an m range");
  std::string scan_family = "B", scan_selector = "main";
  unsigned scan_k = 1;
  unsigned long scan_n = 2500;
  long m_from = 0, m_to = -1;
  scan->add_option("--family", scan_family, "statistic family");
  scan->add_option("-k,--k", scan_k, "color count / rank order k");
  scan->add_option("-n,--n", scan_n, "argument n");
  scan->add_option("--m-from", m_from, "first m");
  scan->add_option("--m-to", m_to, "last m (inclusive)");
  scan->add_option("--selector", scan_selector, "formula variant: main, wide or kdiff");

  // cache
  auto* cache = app.add_subcommand("cache", "build or refresh a partition table cache file");
  unsigned cache_k = 1;
  unsigned long cache_n = 1000;
  cache->add_option("-k,--k", cache_k, "color count");
  cache->add_option("-n,--n", cache_n, "table size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    if (output_name == "csv") cfg.output = RunConfig::Output::Csv;
    if (output_name == "json") cfg.output = RunConfig::Output::Json;
    Real::set_default_digits(cfg.precision);
    TableStore store(cfg.cache_dir, cfg.table_limit);

    if (*compute) {
      auto fam = family_from_name(family_name_arg);
      auto sel = selector_from_name(selector_arg);
      if (!fam || !sel) {
        std::cerr << "unknown family or selector\n";
        return 2;
      }
      StatisticId id{*fam, *sel, m, k, n};
      return output_records({compute_record(id, store)}, cfg);
    }

    if (*table) {
      if (rows.empty()) {
        rows = {50, 100};
        if (cfg.slow) {
          rows.push_back(200);
          rows.push_back(400);
        }
      }
      for (unsigned row : rows) {
        if (row > 100 && !cfg.slow) {
          std::cerr << "row " << row << " (argument " << row * row << ") needs --slow\n";
          return 2;
        }
        if (cfg.output == RunConfig::Output::Tty)
          std::cerr << "computing row " << row << " (n = " << row * row << ")...\n";
        const TableRowValues v = table_row(which, row, store);
        std::cout << v.row << "  " << v.exact1 << "  " << v.asym1 << "  " << v.ratio1 << "  |  "
                  << v.exact2 << "  " << v.asym2 << "  " << v.ratio2 << '\n';
      }
      return 0;
    }

    if (*verify) return print_checks(run_suite(suite, store), cfg);

    if (*scan) {
      auto fam = family_from_name(scan_family);
      auto sel = selector_from_name(scan_selector);
      if (!fam || !sel) {
        std::cerr << "unknown family or selector\n";
        return 2;
      }
      RunConfig csv_cfg = cfg;
      if (csv_cfg.output == RunConfig::Output::Tty) csv_cfg.output = RunConfig::Output::Csv;
      return output_records(scan_range(*fam, *sel, scan_k, scan_n, m_from, m_to, store), csv_cfg);
    }

    if (*cache) {
      if (cfg.cache_dir.empty()) {
        std::cerr << "cache subcommand needs --cache-dir\n";
        return 2;
      }
      const PartitionTable& t = store.need(cache_k, cache_n);
      std::cout << "cached p_" << cache_k << " up to n = " << t.max_n() << " in "
                << cfg.cache_dir << '\n';
      return 0;
    }
  } catch (const RegimeViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const TableTooShort& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
