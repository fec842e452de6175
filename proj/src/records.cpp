#include "theta/records.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "theta/errors.hpp"
#include "theta/format.hpp"
#include "theta/quad_sum.hpp"

namespace theta {

void RunConfig::validate() const {
  if (precision < 20) throw std::invalid_argument("precision must be >= 20 digits");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::J: return "J";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::I: return "I";
    case Family::N: return "N";
    case Family::NDIFF: return "NDIFF";
    case Family::CRANK: return "CRANK";
    case Family::RANK: return "RANK";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  static const std::map<std::string, Family> names = {
      {"J", Family::J},         {"A", Family::A},     {"B", Family::B},
      {"I", Family::I},         {"N", Family::N},     {"NDIFF", Family::NDIFF},
      {"CRANK", Family::CRANK}, {"RANK", Family::RANK}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const char* selector_name(Selector s) {
  switch (s) {
    case Selector::Main: return "main";
    case Selector::Wide: return "wide";
    case Selector::KDiff: return "kdiff";
  }
  return "?";
}

std::optional<Selector> selector_from_name(const std::string& s) {
  if (s == "main") return Selector::Main;
  if (s == "wide") return Selector::Wide;
  if (s == "kdiff") return Selector::KDiff;
  return std::nullopt;
}

TableStore::TableStore(std::string cache_dir, long limit)
    : cache_dir_(std::move(cache_dir)), limit_(limit) {}

const PartitionTable& TableStore::need(unsigned k, unsigned long n) {
  if (limit_ >= 0 && n > static_cast<unsigned long>(limit_))
    throw TableTooShort("table request " + std::to_string(n) +
                        " exceeds configured limit " + std::to_string(limit_));
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(k);
  if (it != tables_.end() && it->second.max_n() >= n) return it->second;

  std::string path;
  if (!cache_dir_.empty()) {
    std::filesystem::create_directories(cache_dir_);
    path = (std::filesystem::path(cache_dir_) / ("pk_" + std::to_string(k) + ".txt")).string();
  }

  if (it == tables_.end()) {
    PartitionTable t;
    t.k = k;
    if (!path.empty() && std::filesystem::exists(path)) t = load_table(path, k);
    it = tables_.emplace(k, std::move(t)).first;
  }
  if (it->second.values.empty() || it->second.max_n() < n) {
    extend_partition_table(it->second, n);
    if (!path.empty()) save_table(it->second, path);
  }
  return it->second;
}

unsigned long exact_table_requirement(const StatisticId& id) {
  const unsigned long am = static_cast<unsigned long>(id.m < 0 ? -id.m : id.m);
  unsigned long n = id.n;
  if (id.selector == Selector::Wide) {
    switch (id.family) {
      case Family::J:
      case Family::A:
      case Family::B:
      case Family::N:
      case Family::CRANK:
      case Family::RANK:
      case Family::NDIFF:
        n = id.n + am;
        break;
      case Family::I:
        break;
    }
  }
  return n;
}

namespace {

unsigned family_k(const StatisticId& id) {
  switch (id.family) {
    case Family::CRANK: return 1;
    case Family::RANK: return 2;
    default: return id.k;
  }
}

}  // namespace

mpz_class exact_statistic(const StatisticId& id, TableStore& store) {
  const unsigned long am = static_cast<unsigned long>(id.m < 0 ? -id.m : id.m);
  const unsigned long n = exact_table_requirement(id);
  const unsigned k = family_k(id);

  if (id.selector == Selector::KDiff) {
    const PartitionTable& p1 = store.need(1, n);
    switch (id.family) {
      case Family::I:
        return i_coeff(k, static_cast<long>(am), p1, static_cast<long>(n)) -
               i_coeff(k + 1, static_cast<long>(am), p1, static_cast<long>(n));
      case Family::N:
      case Family::CRANK:
      case Family::RANK:
        return n_coeff(k + 1, id.m, p1, static_cast<long>(n)) -
               n_coeff(k, id.m, p1, static_cast<long>(n));
      default:
        throw std::invalid_argument("k-difference form exists for families I and N only");
    }
  }

  switch (id.family) {
    case Family::J: {
      const PartitionTable& pk = store.need(k, n);
      if (id.selector == Selector::Wide)
        return alt_quad_sum(pk, QuadSumSpec(1, 2 * static_cast<long>(am) - 1),
                            static_cast<long>(n));
      return j_coeff(id.m, pk, static_cast<long>(n));
    }
    case Family::A: {
      const PartitionTable& pk = store.need(k, n);
      return a_coeff(id.m, pk, static_cast<long>(n));
    }
    case Family::B: {
      const PartitionTable& pk = store.need(k, n);
      return b_coeff(id.m, pk, static_cast<long>(n));
    }
    case Family::I: {
      const PartitionTable& p1 = store.need(1, n);
      return i_coeff(k, static_cast<long>(am), p1, static_cast<long>(n));
    }
    case Family::N:
    case Family::CRANK:
    case Family::RANK: {
      const PartitionTable& p1 = store.need(1, n);
      return n_coeff(k, id.m, p1, static_cast<long>(n));
    }
    case Family::NDIFF: {
      const PartitionTable& p1 = store.need(1, n);
      return nk_diff(k, id.m, p1, static_cast<long>(n));
    }
  }
  throw std::logic_error("unhandled family");
}

Real asym_statistic(const StatisticId& id, TableStore& store) {
  const unsigned k = family_k(id);
  unsigned scale_k = 1;
  if (id.family == Family::J || id.family == Family::A || id.family == Family::B)
    scale_k = k;
  const PartitionTable& scale_table = store.need(scale_k, id.n);
  return closed_ratio(id.family, id.selector, id.m, k, id.n, scale_table.at(id.n));
}

ScanRecord compute_record(const StatisticId& id, TableStore& store) {
  ScanRecord rec;
  rec.id = id;
  rec.exact = exact_statistic(id, store);
  rec.asym = asym_statistic(id, store);
  rec.ratio = Real(rec.exact) / rec.asym;
  return rec;
}

TableRowValues table_row(int which, unsigned row, TableStore& store) {
  if (which != 1 && which != 2) throw std::invalid_argument("table selector must be 1 or 2");
  const unsigned long n = static_cast<unsigned long>(row) * row;
  StatisticId id1, id2;
  if (which == 1) {
    id1 = {Family::B, Selector::Main, 1, 1, n};
    id2 = {Family::B, Selector::Main, static_cast<long>(row), 1, n};
  } else {
    id1 = {Family::NDIFF, Selector::Main, 0, 2, n};
    id2 = {Family::NDIFF, Selector::Main, static_cast<long>(row) + 1, 2, n};
  }
  const ScanRecord r1 = compute_record(id1, store);
  const ScanRecord r2 = compute_record(id2, store);
  TableRowValues out;
  out.row = row;
  out.exact1 = sci_mpz(r1.exact);
  out.asym1 = sci_real(r1.asym);
  out.ratio1 = fixed_real(r1.ratio);
  out.exact2 = sci_mpz(r2.exact);
  out.asym2 = sci_real(r2.asym);
  out.ratio2 = fixed_real(r2.ratio);
  return out;
}

std::vector<ScanRecord> scan_range(Family family, Selector sel, unsigned k, unsigned long n,
                                   long m_from, long m_to, TableStore& store) {
  std::vector<ScanRecord> out;
  if (m_to < m_from) return out;
  // Tables are grown once up front; the per-cell work is then pure.
  long widest = std::max(std::labs(m_from), std::labs(m_to));
  StatisticId probe{family, sel, widest, k, n};
  store.need(1, exact_table_requirement(probe));
  if (family == Family::J || family == Family::A || family == Family::B)
    store.need(family_k(probe), exact_table_requirement(probe));
  asym_statistic({family, sel, 0, k, n}, store);

  const std::size_t count = static_cast<std::size_t>(m_to - m_from + 1);
  out.resize(count);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < count; i += workers) {
          StatisticId id{family, sel, m_from + static_cast<long>(i), k, n};
          out[i] = compute_record(id, store);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
      mpfr_free_cache();  // per-thread constant caches
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::string records_to_csv(const std::vector<ScanRecord>& recs) {
  std::ostringstream os;
  os << "family,k,m,n,exact,asym,ratio\n";
  for (const ScanRecord& r : recs) {
    os << family_name(r.id.family) << ',' << r.id.k << ',' << r.id.m << ',' << r.id.n << ','
       << r.exact.get_str() << ',' << sci_real(r.asym) << ',' << fixed_real(r.ratio) << '\n';
  }
  return os.str();
}

std::string records_to_json(const std::vector<ScanRecord>& recs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ScanRecord& r : recs) {
    arr.push_back({{"family", family_name(r.id.family)},
                   {"selector", selector_name(r.id.selector)},
                   {"k", r.id.k},
                   {"m", r.id.m},
                   {"n", r.id.n},
                   {"exact", r.exact.get_str()},
                   {"asym", sci_real(r.asym)},
                   {"ratio", fixed_real(r.ratio)}});
  }
  return arr.dump(2) + "\n";
}

std::string record_to_tty(const ScanRecord& rec) {
  std::ostringstream os;
  os << family_name(rec.id.family) << "(m=" << rec.id.m << ", k=" << rec.id.k
     << ", n=" << rec.id.n << ", " << selector_name(rec.id.selector) << ")"
     << "  exact " << sci_mpz(rec.exact) << "  asym " << sci_real(rec.asym) << "  ratio "
     << fixed_real(rec.ratio);
  return os.str();
}

}  // namespace theta
