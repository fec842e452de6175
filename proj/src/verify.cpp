#include "theta/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "theta/asym_ops.hpp"
#include "theta/enumeration.hpp"
#include "theta/errors.hpp"
#include "theta/false_theta.hpp"
#include "theta/format.hpp"
#include "theta/int_series.hpp"
#include "theta/lerch.hpp"
#include "theta/quad_sum.hpp"

namespace theta {

namespace {

CheckResult make(const std::string& name, bool pass, const std::string& detail = "") {
  return {name, pass, detail};
}

Real rel_err(const Real& got, const Real& want) {
  if (want.is_zero()) return abs(got);
  return abs(got / want - Real(1));
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_mass(TableStore& store) {
  std::vector<CheckResult> out;
  const PartitionTable& p1 = store.need(1, 210);
  for (unsigned k = 1; k <= 2; ++k) {
    bool ok = true;
    std::string detail;
    for (long n = 1; n <= 200 && ok; ++n) {
      mpz_class sum = 0;
      for (long m = -(n + 2); m <= n + 2; ++m) sum += n_coeff(k, m, p1, n);
      if (sum != p1.at(n)) {
        ok = false;
        detail = "first failure at n = " + std::to_string(n);
      }
    }
    out.push_back(make("mass: sum_m N_" + std::to_string(k) + "(m,n) = p(n), n <= 200", ok,
                       detail));
  }
  return out;
}

std::vector<CheckResult> verify_symmetry(TableStore& store) {
  std::vector<CheckResult> out;
  const PartitionTable& p1 = store.need(1, 160);
  bool ok = true;
  std::string detail;
  for (unsigned k = 1; k <= 3 && ok; ++k)
    for (long n = 1; n <= 60 && ok; ++n)
      for (long m = 0; m <= n + 1 && ok; ++m)
        if (n_coeff(k, m, p1, n) != n_coeff(k, -m, p1, n)) {
          ok = false;
          detail = "N_" + std::to_string(k) + " at (m,n)=(" + std::to_string(m) + "," +
                   std::to_string(n) + ")";
        }
  // spot checks away from the dense grid
  for (unsigned k = 1; k <= 3 && ok; ++k)
    for (long m : {5L, 37L, 80L})
      if (n_coeff(k, m, p1, 150) != n_coeff(k, -m, p1, 150)) ok = false;
  out.push_back(make("symmetry: N_k(m,n) = N_k(-m,n)", ok, detail));

  ok = true;
  detail.clear();
  for (unsigned k = 1; k <= 3 && ok; ++k) {
    const PartitionTable& pk = store.need(k, 130);
    for (long n = 0; n <= 60 && ok; ++n)
      for (long m = 0; m <= n + 1 && ok; ++m)
        if (a_coeff(m, pk, n) != a_coeff(-m, pk, n)) {
          ok = false;
          detail = "a at (m,k,n)=(" + std::to_string(m) + "," + std::to_string(k) + "," +
                   std::to_string(n) + ")";
        }
  }
  out.push_back(make("symmetry: a_{m,k}(n) = a_{-m,k}(n)", ok, detail));
  return out;
}

std::vector<CheckResult> verify_oracle(TableStore& store) {
  std::vector<CheckResult> out;

  {  // generating-series route vs recurrence tables
    bool ok = true;
    std::string detail;
    for (unsigned k = 1; k <= 4 && ok; ++k) {
      const IntSeries s = eta_power_series(-static_cast<long>(k), 300);
      const PartitionTable& pk = store.need(k, 300);
      for (unsigned long n = 0; n <= 300; ++n)
        if (s[n] != pk.values[n]) {
          ok = false;
          detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
          break;
        }
    }
    out.push_back(make("oracle: eta series = recurrence tables, k <= 4, N = 300", ok, detail));
  }

  {  // Lerch-sum bivariate oracle vs alternating sums
    bool ok = true;
    std::string detail;
    for (unsigned k = 1; k <= 3 && ok; ++k) {
      const BiSeriesOracle oracle(k, 12, 100);
      const PartitionTable& pk = store.need(k, 120);
      for (long m = -10; m <= 10 && ok; ++m)
        for (long n = 0; n <= 100 && ok; ++n) {
          const long x = n + (m > 0 ? m : 0);
          if (oracle.j(m, n) != j_coeff(m, pk, x)) {
            ok = false;
            detail = "j mismatch at (m,k,n)=(" + std::to_string(m) + "," + std::to_string(k) +
                     "," + std::to_string(n) + ")";
          }
        }
      for (long m = -10; m <= 10 && ok; ++m)
        for (long n = 0; n <= 100 && ok; ++n)
          if (oracle.a(m, n) != a_coeff(m, pk, n)) {
            ok = false;
            detail = "a mismatch";
          }
      for (long m = 0; m <= 10 && ok; ++m)
        for (long n = 0; n <= 100 && ok; ++n)
          if (oracle.b(m, n) != b_coeff(m, pk, n)) {
            ok = false;
            detail = "b mismatch";
          }
    }
    out.push_back(
        make("oracle: Lerch expansion = alternating sums, |m| <= 10, n <= 100, k <= 3", ok,
             detail));
  }

  {  // coefficient mass identities through the oracle
    bool ok = true;
    std::string detail;
    for (unsigned k = 1; k <= 3 && ok; ++k) {
      const BiSeriesOracle oracle(k, 103, 100);
      const PartitionTable& pk = store.need(k, 100);
      for (long n = 0; n <= 100 && ok; ++n) {
        mpz_class sum = 0;
        for (long m = -102; m <= 102; ++m) sum += oracle.a(m, n);
        if (sum != pk.values[n]) {
          ok = false;
          detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
      }
    }
    out.push_back(make("oracle: sum_m a_{m,k}(n) = p_k(n), n <= 100", ok, detail));
  }

  {  // direct partition enumeration vs series statistics
    const PartitionTable& p1 = store.need(1, 45);
    bool ok = mpz_class(static_cast<unsigned long>(partition_count_by_enumeration(10))) == p1.at(10);
    std::string detail = ok ? "" : "p(10) mismatch";
    for (unsigned n = 2; n <= 40 && ok; ++n) {
      const auto cranks = crank_counts(n);
      for (long m = -static_cast<long>(n) - 1; m <= static_cast<long>(n) + 1; ++m) {
        auto it = cranks.find(m);
        const mpz_class want(it == cranks.end() ? 0UL : static_cast<unsigned long>(it->second));
        if (n_coeff(1, m, p1, n) != want || a_coeff(m, store.need(1, 45), n) != want) {
          ok = false;
          detail = "crank mismatch at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                   ")";
          break;
        }
      }
    }
    out.push_back(make("oracle: crank counts vs enumeration, 2 <= n <= 40", ok, detail));

    ok = true;
    detail.clear();
    for (unsigned n = 1; n <= 40 && ok; ++n) {
      const auto ranks = rank_counts(n);
      for (long m = -static_cast<long>(n) - 1; m <= static_cast<long>(n) + 1; ++m) {
        auto it = ranks.find(m);
        const mpz_class want(it == ranks.end() ? 0UL : static_cast<unsigned long>(it->second));
        if (n_coeff(2, m, p1, n) != want) {
          ok = false;
          detail = "rank mismatch at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                   ")";
          break;
        }
      }
    }
    out.push_back(make("oracle: rank counts vs enumeration, n <= 40", ok, detail));
  }

  return out;
}

std::vector<CheckResult> verify_unimodal(TableStore& store) {
  std::vector<CheckResult> out;
  const PartitionTable& p1 = store.need(1, 300);
  bool ok = true;
  std::string detail;
  for (long n = 50; n <= 300 && ok; ++n) {
    std::vector<mpz_class> seq;
    seq.reserve(2 * n - 5);
    for (long m = 3 - n; m <= n - 3; ++m) seq.push_back(n_coeff(2, m, p1, n));
    const UnimodalResult r = unimodal_check(seq);
    const long peak_m = 3 - n + static_cast<long>(r.peak_index);
    if (!r.is_unimodal || peak_m != 0) {
      ok = false;
      detail = "n = " + std::to_string(n) + (r.is_unimodal ? " off-center peak" : " not unimodal");
    }
  }
  out.push_back(make("unimodal: N_2(., n) rises then falls with central peak, 50 <= n <= 300",
                     ok, detail));
  return out;
}

namespace {

Real inv_gamma_nonneg(int j) {
  // 1/Gamma(j) with the reciprocal-gamma convention at nonpositive integers.
  if (j <= 0) return Real(0);
  return Real(1) / factorial(static_cast<unsigned>(j - 1));
}

std::vector<CheckResult> coeff_checks_for(const GrowthProfile& profile) {
  std::vector<CheckResult> out;
  const OperatorCoeffs table(profile, 8);
  const Real beta = profile.beta;
  const Real alpha = profile.alpha;
  const Real tol = Real("1e-12");

  // -alpha beta^{J-1}/2^{J-1} / Gamma(J) - beta^{J-1}/2^{J+1} / Gamma(J-1);
  // the reciprocal gamma kills both pieces at J = 0.
  auto first_correction = [&](unsigned J) {
    if (J == 0) return Real(0);
    const Real bp = ipow(beta, J - 1);
    return -alpha * bp / ipow(Real(2), J - 1) * inv_gamma_nonneg(static_cast<int>(J)) -
           bp / ipow(Real(2), J + 1) * inv_gamma_nonneg(static_cast<int>(J) - 1);
  };

  bool ok = true;
  std::string detail;
  for (unsigned J = 0; J <= 4 && ok; ++J) {
    const Real jf = factorial(J);
    struct Item {
      Real got;
      Real want;
      const char* what;
    };
    const Item items[] = {
        {table.c_central(J, 0, J, 0), ipow(beta, J) / (ipow(Real(2), J) * jf), "leading"},
        {table.c_central(J + 1, 0, J, 0), first_correction(J), "first correction"},
        {table.c_central(J + 1, 0, J, 1), -ipow(beta, J + 1) / (ipow(Real(2), J + 1) * jf),
         "a-coefficient"},
        {table.c_central(J + 2, 1, J, 0),
         -ipow(beta, J) / ipow(Real(2), J + 1) * inv_gamma_nonneg(static_cast<int>(J)) -
             alpha * ipow(beta, J) / (ipow(Real(2), J) * jf),
         "b-coefficient"},
        {table.c_central(J + 3, 2, J, 0), -ipow(beta, J + 1) / (ipow(Real(2), J + 3) * jf),
         "b^2-coefficient"},
    };
    for (const Item& item : items) {
      const Real err = item.want.is_zero() ? abs(item.got) : rel_err(item.got, item.want);
      if (!(err <= tol)) {
        ok = false;
        detail = std::string(item.what) + " at J=" + std::to_string(J) + " (" +
                 profile.label + "), err=" + fmt_double(err.to_double());
        break;
      }
    }
  }
  out.push_back(make("coeffs: central closed forms, J <= 4, profile " + profile.label, ok,
                     detail));

  ok = true;
  detail.clear();
  for (unsigned J = 0; J <= 4 && ok; ++J) {
    const Real jf = factorial(J);
    const Real sgn = (J % 2 == 0) ? Real(1) : Real(-1);
    struct Item {
      Real got;
      Real want;
      const char* what;
    };
    const Item items[] = {
        {sgn * table.c_tail(J, J, 0), ipow(beta, J) / (ipow(Real(2), J) * jf), "leading"},
        {sgn * table.c_tail(J + 1, J, 0), first_correction(J), "first correction"},
        {-sgn * table.c_tail(J + 1, J, 1), ipow(beta, J + 1) / (ipow(Real(2), J + 1) * jf),
         "a-coefficient"},
    };
    for (const Item& item : items) {
      const Real err = item.want.is_zero() ? abs(item.got) : rel_err(item.got, item.want);
      if (!(err <= tol)) {
        ok = false;
        detail = std::string(item.what) + " at J=" + std::to_string(J) + " (" +
                 profile.label + "), err=" + fmt_double(err.to_double());
        break;
      }
    }
    if (ok && !table.c_tail(J, J + 1, 0).is_zero()) {
      ok = false;
      detail = "tail coefficient beyond l+s <= g not zero";
    }
  }
  out.push_back(make("coeffs: tail closed forms, J <= 4, profile " + profile.label, ok, detail));
  return out;
}

}  // namespace

std::vector<CheckResult> verify_coeffs() {
  std::vector<CheckResult> out;
  for (const GrowthProfile& profile :
       {partition_profile(), colored_profile(3, Real(0.37), {Real(1)})}) {
    for (CheckResult& r : coeff_checks_for(profile)) out.push_back(std::move(r));
  }

  // parity of the shift coefficients
  const OperatorCoeffs table(partition_profile(), 6);
  bool ok = true;
  for (unsigned n = 0; n <= 12 && ok; ++n)
    for (unsigned j = 0; j <= 6 && ok; ++j) {
      if ((n % 2) != (j % 2) && table.lambda_known(n, j) && !table.lambda(n, j).is_zero())
        ok = false;
      if (n >= 1 && j == 0 && !table.lambda(n, 0).is_zero()) ok = false;
    }
  out.push_back(make("coeffs: lambda parity and row-zero structure", ok, ""));
  return out;
}

std::vector<CheckResult> verify_falsetheta() {
  std::vector<CheckResult> out;
  const unsigned digits = Real::default_digits();

  {  // direct vs Euler-transform route
    Real worst(0);
    Real bound(1);
    mpfr_ui_pow_ui(bound.raw(), 10, digits - 5, MPFR_RNDN);
    bound = Real(1) / bound;
    bool ok = true;
    std::string detail;
    for (double a : {0.5, 1.0, 1.5})
      for (double b : {0.0, 1.0, 10.0, 100.0})
        for (double z : {1.0, 0.1, 0.01}) {
          const Real direct = t_direct(Real(a), Real(b), Real(z));
          const Real accel = t_via_euler(Real(a), Real(b), Real(z));
          const Real diff = abs(direct - accel);
          if (diff > worst) worst = diff;
          if (!(diff <= bound)) {
            ok = false;
            detail = "grid point a=" + fmt_double(a) + " b=" + fmt_double(b) +
                     " z=" + fmt_double(z) + " |diff|=" + fmt_double(diff.to_double());
          }
        }
    if (ok) detail = "worst |diff| = " + fmt_double(worst.to_double());
    out.push_back(make("falsetheta: direct vs Euler-transform route <= 1e-" +
                           std::to_string(digits - 5),
                       ok, detail));
  }

  {  // uniform expansion error law in z, uniformly over b modes
    PrecisionGuard guard(120);
    bool ok = true;
    std::string detail;
    Real floor(1);
    mpfr_ui_pow_ui(floor.raw(), 10, 110, MPFR_RNDN);
    floor = Real(1) / floor;
    for (unsigned p = 1; p <= 3 && ok; ++p) {
      for (int mode = 0; mode <= 2 && ok; ++mode) {
        auto b_of = [&](const Real& z) {
          if (mode == 0) return Real(0);
          if (mode == 1) return Real(1) / sqrt(z);
          return Real(1) / z;
        };
        auto scaled_err = [&](const Real& z) {
          const FalseThetaParams params(Real(1), b_of(z), Complex(z));
          const Real direct = t_direct(Real(1), b_of(z), z, DirectSumOptions(floor / Real(100)));
          const Real uni = t_uniform(0, params, p);
          return abs(uni - direct) * exp(b_of(z) * z);
        };
        const Real c_fit = scaled_err(Real("1e-2")) / ipow(Real("1e-2"), p);
        for (const char* zs : {"1e-3", "1e-4"}) {
          const Real z(zs);
          const Real allowance = c_fit * ipow(z, p) * Real(1.5) + floor;
          const Real e = scaled_err(z);
          if (!(e <= allowance)) {
            ok = false;
            detail = "p=" + std::to_string(p) + " mode=" + std::to_string(mode) +
                     " z=" + zs + " err=" + fmt_double(e.to_double()) +
                     " allowance=" + fmt_double(allowance.to_double());
          }
        }
      }
    }
    out.push_back(make("falsetheta: uniform expansion error law O(z^p) across b modes", ok,
                       detail));
  }

  {  // kernel derivatives vs central finite differences
    PrecisionGuard guard(80);
    const Real h("1e-8");
    bool ok = true;
    std::string detail;
    for (unsigned J = 1; J <= 8 && ok; ++J)
      for (long ai = -5; ai <= 5 && ok; ++ai) {
        const Real alpha(ai);
        const Real fd =
            (logistic_deriv(J - 1, alpha + h) - logistic_deriv(J - 1, alpha - h)) / (Real(2) * h);
        const Real err = rel_err(fd, logistic_deriv(J, alpha));
        if (!(err <= Real("1e-6"))) {
          ok = false;
          detail = "J=" + std::to_string(J) + " alpha=" + std::to_string(ai);
        }
      }
    out.push_back(make("falsetheta: kernel matches finite differences, J <= 8", ok, detail));
  }

  {  // consecutive partial sums bracket the limit (real z)
    const Real a(1), b(Real(1) / Real(2)), z(Real(1) / Real(8));
    const Real limit = t_direct(a, b, z);
    Real partial(0);
    bool ok = true;
    for (unsigned long n = 1; n <= 9; ++n) {
      const Real nn(n);
      const Real term = exp(-(a * nn * nn + b * nn) * z);
      partial = (n % 2 == 1) ? partial + term : partial - term;
      if (n % 2 == 1 ? !(partial >= limit) : !(partial <= limit)) ok = false;
    }
    out.push_back(make("falsetheta: alternating partial sums bracket the limit", ok, ""));
  }

  return out;
}

std::vector<CheckResult> verify_contraction(TableStore& store) {
  std::vector<CheckResult> out;
  store.need(1, 10200);
  store.need(2, 10200);
  const unsigned long ns[] = {625, 2500, 10000};
  struct Case {
    Family family;
    unsigned k;
    bool sqrt_mode;  // m = floor(sqrt n); otherwise m = 0
  };
  const Case cases[] = {
      {Family::J, 1, false},     {Family::J, 1, true},      {Family::A, 1, false},
      {Family::A, 1, true},      {Family::B, 1, false},     {Family::B, 1, true},
      {Family::I, 2, false},     {Family::I, 2, true},      {Family::N, 2, false},
      {Family::N, 2, true},      {Family::NDIFF, 2, false}, {Family::NDIFF, 2, true},
  };
  for (const Case& c : cases) {
    Real errs[3];
    for (int i = 0; i < 3; ++i) {
      const long m = c.sqrt_mode ? static_cast<long>(std::sqrt(static_cast<double>(ns[i]))) : 0;
      const StatisticId id{c.family, Selector::Main, m, c.k, ns[i]};
      const ScanRecord rec = compute_record(id, store);
      errs[i] = abs(rec.ratio - Real(1));
    }
    const bool ok = errs[1] <= Real(0.7) * errs[0] && errs[2] <= Real(0.7) * errs[1];
    std::ostringstream detail;
    detail << "err(625)=" << errs[0].to_double() << " err(2500)=" << errs[1].to_double()
           << " err(10000)=" << errs[2].to_double();
    out.push_back(make(std::string("contraction: family ") + family_name(c.family) +
                           (c.sqrt_mode ? ", m = floor(sqrt n)" : ", m = 0"),
                       ok, detail.str()));
  }
  return out;
}

std::vector<CheckResult> verify_table_rows(int which, const std::vector<unsigned>& rows,
                                           TableStore& store) {
  struct Expected {
    unsigned row;
    const char* exact1;
    const char* asym1;
    const char* ratio1;
    const char* exact2;
    const char* asym2;
    const char* ratio2;
  };
  static const Expected table1[] = {
      {50, "8.67687e45", "9.08059e45", "0.9555", "1.77991e47", "1.81723e47", "0.9795"},
      {100, "1.39866e100", "1.43049e100", "0.9777", "5.66389e101", "5.72242e101", "0.9898"},
      {200, "1.11517e210", "1.12772e210", "0.9889", "8.97474e211", "9.02079e211", "0.9949"},
      {400, "2.22252e431", "2.23496e431", "0.9944", "3.56615e433", "3.57527e433", "0.9974"},
  };
  static const Expected table2[] = {
      {50, "3.04871e45", "3.02819e45", "1.0068", "1.82908e47", "1.81764e47", "1.0063"},
      {100, "4.78500e99", "4.76884e99", "1.0034", "5.74203e101", "5.72403e101", "1.0031"},
      {200, "3.76555e209", "3.75918e209", "1.0017", "9.03662e211", "9.02244e211", "1.0016"},
      {400, "7.45623e430", "7.44992e430", "1.0008", "3.57845e433", "3.57564e433", "1.0008"},
  };
  std::vector<CheckResult> out;
  for (unsigned row : rows) {
    const Expected* want = nullptr;
    for (const Expected& e : (which == 1 ? table1 : table2))
      if (e.row == row) want = &e;
    if (!want) throw std::invalid_argument("no reference data for row " + std::to_string(row));
    const TableRowValues got = table_row(which, row, store);
    const bool ok = got.exact1 == want->exact1 && got.asym1 == want->asym1 &&
                    got.ratio1 == want->ratio1 && got.exact2 == want->exact2 &&
                    got.asym2 == want->asym2 && got.ratio2 == want->ratio2;
    std::string detail;
    if (!ok)
      detail = "got (" + got.exact1 + ", " + got.asym1 + ", " + got.ratio1 + "; " + got.exact2 +
               ", " + got.asym2 + ", " + got.ratio2 + ")";
    out.push_back(make("table " + std::to_string(which) + " row " + std::to_string(row), ok,
                       detail));
  }
  return out;
}

std::vector<CheckResult> verify_peaks(TableStore& store) {
  std::vector<CheckResult> out;

  for (unsigned long n : {2500UL, 10000UL}) {
    const PartitionTable& p1 = store.need(1, n);
    const long cap = static_cast<long>(min_diff_prediction(n).to_double()) + 40;
    long argmax = 0;
    mpz_class best = -1;
    for (long m = 0; m <= cap; ++m) {
      const mpz_class v = b_coeff(m, p1, static_cast<long>(n));
      if (v > best) {
        best = v;
        argmax = m;
      }
    }
    const double stated = peak_prediction(1, n).to_double();
    const bool ok = std::abs(static_cast<double>(argmax) - stated) <= 3.0;
    std::ostringstream detail;
    detail << "exact argmax m = " << argmax << ", stated location " << stated
           << " (closed-form critical point " << closed_b_critical_m(1, n).to_double() << ")";
    out.push_back(
        make("peak: argmax_m b_{m,1}(" + std::to_string(n) + ") within 3 of stated formula", ok,
             detail.str()));
  }

  {
    const unsigned long n = 2500;
    const PartitionTable& p1 = store.need(1, n);
    long argmin = 0;
    mpz_class best(-1);
    for (long m = 0; m <= 120; ++m) {
      mpz_class diff = n_coeff(2, m, p1, static_cast<long>(n)) -
                       n_coeff(3, m, p1, static_cast<long>(n));
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      if (best < 0 || diff < best) {
        best = diff;
        argmin = m;
      }
    }
    const double pred = min_diff_prediction(n).to_double();
    const bool ok = std::abs(static_cast<double>(argmin) - pred) <= 5.0;
    std::ostringstream detail;
    detail << "exact argmin m = " << argmin << ", predicted " << pred;
    out.push_back(make("peak: minimizer of |N_2 - N_3|(m, 2500) within 5 of predicted", ok,
                       detail.str()));
  }
  return out;
}

std::vector<CheckResult> verify_profile(TableStore& store) {
  std::vector<CheckResult> out;
  const PartitionTable& p1 = store.need(1, 10001);
  const OperatorCoeffs table(partition_profile(), 12);
  const Real exact = Real(p1.at(10001)) / Real(p1.at(10000));
  const Real asym = shift_ratio(table, Real(10000), Real(1), 4);
  const Real err = rel_err(asym, exact);
  const bool ok = err <= Real("1e-6");
  out.push_back(make("profile: shift ratio reproduces p(10001)/p(10000) to 1e-6", ok,
                     "rel err = " + fmt_double(err.to_double())));
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, TableStore& store) {
  if (name == "mass") return verify_mass(store);
  if (name == "symmetry") return verify_symmetry(store);
  if (name == "oracle") return verify_oracle(store);
  if (name == "unimodal") return verify_unimodal(store);
  if (name == "coeffs") return verify_coeffs();
  if (name == "falsetheta") return verify_falsetheta();
  if (name == "contraction") return verify_contraction(store);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const char* s :
         {"mass", "symmetry", "oracle", "unimodal", "coeffs", "falsetheta", "contraction"}) {
      for (CheckResult& r : run_suite(s, store)) out.push_back(std::move(r));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace theta
