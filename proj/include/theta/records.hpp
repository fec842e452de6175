#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "theta/asym_ops.hpp"
#include "theta/partition.hpp"
#include "theta/real.hpp"

namespace theta {

struct RunConfig {
  unsigned precision = 60;  // decimal digits, >= 20
  std::string cache_dir;
  long table_limit = -1;  // optional hard cap on table size; -1 = none
  enum class Output { Csv, Json, Tty } output = Output::Tty;
  bool slow = false;

  void validate() const;
};

struct StatisticId {
  Family family = Family::N;
  Selector selector = Selector::Main;
  long m = 0;
  unsigned k = 1;
  unsigned long n = 1;
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
const char* selector_name(Selector s);
std::optional<Selector> selector_from_name(const std::string& s);

struct ScanRecord {
  StatisticId id;
  mpz_class exact;
  Real asym;
  Real ratio;  // exact / asym
};

// Owns the exact tables, growing them on demand and persisting through the
// cache directory when one is configured. Growth is serialized; parallel
// readers must pre-size their tables (scan_range does) so no extension
// happens while cells evaluate.
class TableStore {
 public:
  explicit TableStore(std::string cache_dir = "", long limit = -1);

  const PartitionTable& need(unsigned k, unsigned long n);

 private:
  std::string cache_dir_;
  long limit_;
  std::mutex mu_;
  std::map<unsigned, PartitionTable> tables_;
};

// Largest table index the exact evaluation of id will touch.
unsigned long exact_table_requirement(const StatisticId& id);

mpz_class exact_statistic(const StatisticId& id, TableStore& store);
Real asym_statistic(const StatisticId& id, TableStore& store);
ScanRecord compute_record(const StatisticId& id, TableStore& store);

// One table row of the reproduction tables: row label r works on n = r^2.
struct TableRowValues {
  unsigned row;
  std::string exact1, asym1, ratio1;
  std::string exact2, asym2, ratio2;
};

// which = 1: b_{1,1}(r^2) and b_{r,1}(r^2) against the closed B form;
// which = 2: rank differences at m = 0 and m = r+1 against the same form.
TableRowValues table_row(int which, unsigned row, TableStore& store);

// Scan records over an inclusive m range; cells evaluate in parallel.
std::vector<ScanRecord> scan_range(Family family, Selector sel, unsigned k, unsigned long n,
                                   long m_from, long m_to, TableStore& store);

std::string records_to_csv(const std::vector<ScanRecord>& recs);
std::string records_to_json(const std::vector<ScanRecord>& recs);
std::string record_to_tty(const ScanRecord& rec);

}  // namespace theta
