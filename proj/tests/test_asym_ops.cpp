#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/asym_ops.hpp"
#include "theta/errors.hpp"
#include "theta/false_theta.hpp"
#include "theta/format.hpp"
#include "theta/partition.hpp"
#include "theta/quad_sum.hpp"

using namespace theta;

namespace {

const OperatorCoeffs& pcoeffs() {
  static const OperatorCoeffs t(partition_profile(), 12);
  return t;
}

const PartitionTable& p1(unsigned long n = 10001) {
  static PartitionTable t = partition_table(1, 10001);
  if (t.max_n() < n) extend_partition_table(t, n);
  return t;
}

Real rel(const Real& got, const Real& want) { return abs(got / want - Real(1)); }

}  // namespace

TEST_CASE("shift by zero is exactly one") {
  CHECK(shift_ratio(pcoeffs(), Real(400), Real(0), 4) == Real(1));
}

TEST_CASE("shift ratio against exact neighbor counts") {
  const Real exact_up = Real(p1().at(10001)) / Real(p1().at(10000));
  CHECK(rel(shift_ratio(pcoeffs(), Real(10000), Real(1), 4), exact_up) <= Real("1e-6"));
  const Real exact_down = Real(p1().at(9950)) / Real(p1().at(10000));
  CHECK(rel(shift_ratio(pcoeffs(), Real(10000), Real(-50), 4), exact_down) <= Real("1e-4"));
}

TEST_CASE("leading operator block is the plain kernel") {
  const Real alpha("0.37");
  CHECK(sf_central_term(pcoeffs(), 0, Real(0.5), Real(3), Real(-0.5), alpha) ==
        logistic_deriv(0, alpha));
}

TEST_CASE("central expansion against the exact alternating sum") {
  auto exact_ratio = [&](long X) {
    const mpz_class s = alt_quad_sum(p1(), QuadSumSpec(1, -1), X);
    return Real(s) / Real(p1().at(X));
  };
  auto asym_ratio = [&](long X) {
    return sf_ratio_central(pcoeffs(), Real(0.5), Real(0), Real(-0.5), Real(X), 2);
  };
  const Real err400 = rel(asym_ratio(400), exact_ratio(400));
  const Real err1600 = rel(asym_ratio(1600), exact_ratio(1600));
  CHECK(err400 <= Real("5e-2"));
  CHECK(err1600 <= Real(0.7) * err400);
}

TEST_CASE("central expansion sharpens with the order") {
  const OperatorCoeffs fc(partition_profile(16), 15);
  const long X = 4096;
  const Real exact = Real(alt_quad_sum(p1(), QuadSumSpec(1, 5), X)) / Real(p1().at(X));
  auto err = [&](unsigned p) {
    return rel(sf_ratio_central(fc, Real(0.5), Real(2.5), Real(0), Real(X), p), exact);
  };
  CHECK(err(1) <= Real("1e-5"));
  CHECK(err(2) <= Real("1e-9"));
  CHECK(err(3) <= Real("1e-13"));
  CHECK(err(4) <= Real("1e-17"));
}

TEST_CASE("difference expansion away from the center") {
  for (long m : {10L, 40L}) {
    const Real exact = Real(a_coeff(m, p1(), 2500)) / Real(p1().at(2500));
    const Real asym =
        sf_delta_ratio(pcoeffs(), 1, Real(0.5), Real(m) + Real(0.5), Real(-1), Real(2500));
    CHECK(rel(asym, exact) <= Real("1e-3"));
  }
}

TEST_CASE("single surviving term in the far regime") {
  // a = 3/2, b = X - 19.5: only l = 1 contributes and the sum is p(18).
  for (long X : {100L, 250L}) {
    const mpz_class s = alt_quad_sum(p1(), QuadSumSpec(3, 2 * X - 39), X);
    CHECK(s == p1().at(18));
  }
}

TEST_CASE("far-regime expansion against exact sums") {
  const long X = 10000, b = 2000;
  const mpz_class s = alt_quad_sum(p1(), QuadSumSpec(1, 2 * b - 1), X);  // mu = -1/2
  const Real exact = Real(s) / Real(p1().at(X - b));
  const Real asym = sf_ratio_tail(pcoeffs(), Real(0.5), Real(b), Real(-0.5), Real(X), 6);
  CHECK(rel(asym, exact) <= Real("1e-8"));
}

TEST_CASE("leading far-regime coefficient is one") {
  CHECK(pcoeffs().c_tail(0, 0, 0) == Real(1));
}

TEST_CASE("gap between the regimes is reported") {
  CHECK_THROWS_AS(sf_ratio_tail(pcoeffs(), Real(0.5), Real(500), Real(0), Real(10000), 4),
                  RegimeViolation);
}

TEST_CASE("order limits and short profiles surface as errors") {
  CHECK_THROWS_AS(sf_ratio_central(pcoeffs(), Real(0.5), Real(0), Real(0), Real(400), 8),
                  OrderTooHigh);
  const OperatorCoeffs short_profile(colored_profile(2, Real(1), {Real(1)}), 12);
  CHECK_THROWS_AS(shift_ratio(short_profile, Real(10000), Real(1), 4), GammaTooShort);
}

TEST_CASE("the two expansions agree where the regimes overlap") {
  const Real X("1e6");
  const Real b = pow(X, Real(0.7));
  const GrowthProfile& f = pcoeffs().profile();
  const Real central = sf_ratio_central(pcoeffs(), Real(0.5), b, Real(0.5), X, 3);
  const Real tail = sf_ratio_tail(pcoeffs(), Real(0.5), b, Real(0.5), X, 8);
  // central is S/f(X), tail is S/f(X-b); convert through the profile series
  const Real conversion = profile_eval(f, X - b) / profile_eval(f, X);
  CHECK(rel(central, tail * conversion) <= Real("1e-2"));
}

TEST_CASE("difference operator expansion, first difference") {
  const unsigned long n = 2500;
  // alpha = 0 (m = 0) is a regular point of the expansion
  const Real asym = sf_delta_ratio(pcoeffs(), 1, Real(0.5), Real(0.5), Real(-1), Real(n));
  const Real exact = Real(a_coeff(0, p1(), n)) / Real(p1().at(n));
  CHECK(rel(asym, exact) <= Real("2e-2"));
  CHECK_THROWS_AS(
      sf_delta_ratio(pcoeffs(), 1, Real(0.5), Real(0.5), Real(-1), Real(n), /*strict=*/true),
      DegenerateB);
}

TEST_CASE("difference operator expansion, second difference") {
  const unsigned long n = 2500;
  const Real asym = sf_delta_ratio(pcoeffs(), 2, Real(0.5), Real(2.5), Real(-1), Real(n));
  const Real exact = Real(b_coeff(1, p1(), n)) / Real(p1().at(n));
  CHECK(rel(asym, exact) <= Real("5e-2"));
  // tighter than the leading closed form at the same point
  const Real closed = closed_ratio(Family::B, Selector::Main, 1, 1, n, p1().at(n));
  const Real closed_err = rel(closed, Real(b_coeff(1, p1(), n)));
  CHECK(rel(asym, exact) < closed_err);
}

TEST_CASE("zeroth difference is the plain ratio expansion") {
  const unsigned long n = 2500;
  const mpz_class s = alt_quad_sum(p1(), QuadSumSpec(1, 5), n);
  const Real exact = Real(s) / Real(p1().at(n));
  const Real asym = sf_delta_ratio(pcoeffs(), 0, Real(0.5), Real(2.5), Real(1), Real(n));
  CHECK(rel(asym, exact) <= Real("1e-2"));
}

TEST_CASE("closed forms print the reference comparison values") {
  CHECK(sci_real(closed_ratio(Family::B, Selector::Main, 1, 1, 2500, p1().at(2500))) ==
        "9.08059e45");
  CHECK(sci_real(closed_ratio(Family::NDIFF, Selector::Main, 0, 2, 2500, p1().at(2500))) ==
        "3.02819e45");
}

TEST_CASE("crank peak value is the quarter-spacing form") {
  const unsigned long n = 1600;
  const Real want = sqrt(pi() * pi() / (Real(6) * Real(n))) / Real(4) * Real(p1().at(n));
  CHECK(rel(closed_ratio(Family::A, Selector::Main, 0, 1, n, p1().at(n)), want) <=
        Real("1e-50"));
}

TEST_CASE("closed B formula peaks at its own critical point") {
  const unsigned long n = 2500;
  auto argmax_with_scale = [&](const mpz_class& scale) {
    long argmax = 0;
    Real best(-1);
    for (long m = 0; m <= 120; ++m) {
      const Real v = closed_ratio(Family::B, Selector::Main, m, 1, n, scale);
      if (v > best) {
        best = v;
        argmax = m;
      }
    }
    return argmax;
  };
  const long argmax = argmax_with_scale(p1().at(n));
  const double crit = closed_b_critical_m(1, n).to_double();
  CHECK(std::abs(argmax - crit) <= 1.0);
  // the location is a property of the hyperbolic factor, not of the scale
  CHECK(argmax_with_scale(mpz_class(1)) == argmax);
  CHECK_THROWS_AS(closed_ratio(Family::B, Selector::Main, -2, 1, n, p1().at(n)), NegativeM);
}

TEST_CASE("stated peak locations") {
  CHECK(abs(peak_prediction(1, 2500) - Real("25.6707")) <= Real("1e-3"));
  CHECK(rel(min_diff_prediction(2500), Real(2) * peak_prediction(1, 2500)) <= Real("1e-40"));
}

TEST_CASE("spacing constant") {
  CHECK(rel(delta_k(1, 2500), pi() / sqrt(Real(15000))) <= Real("1e-50"));
}
