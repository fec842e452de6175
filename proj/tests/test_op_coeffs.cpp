#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/errors.hpp"
#include "theta/growth.hpp"
#include "theta/op_coeffs.hpp"
#include "theta/partition.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

bool close_rel(const Real& got, const Real& want, const Real& tol) {
  if (want.is_zero()) return abs(got) <= tol;
  return abs(got / want - Real(1)) <= tol;
}

}  // namespace

TEST_CASE("anchor values of the shift coefficients") {
  for (const GrowthProfile& f :
       {partition_profile(), colored_profile(2, Real("0.81"), {Real(2), Real(-1)})}) {
    const OperatorCoeffs t(f, 4);
    CHECK(t.lambda(0, 0) == Real(1));
    CHECK(close_rel(t.lambda(1, 1), -f.alpha, Real("1e-40")));
    CHECK(close_rel(t.lambda(0, 2), -f.beta / Real(8), Real("1e-40")));
    for (unsigned n = 1; n <= 8; ++n) CHECK(t.lambda(n, 0).is_zero());
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned j = 0; j <= 4; ++j)
        if ((n % 2) != (j % 2) && t.lambda_known(n, j)) CHECK(t.lambda(n, j).is_zero());
  }
}

TEST_CASE("missing gamma terms surface as an error, not a guess") {
  const OperatorCoeffs t(colored_profile(2, Real(1), {Real(1)}), 3);
  CHECK_FALSE(t.lambda_known(3, 1));
  CHECK_THROWS_AS(t.lambda(3, 1), GammaTooShort);
  CHECK(t.lambda_known(2, 2));  // determined by gamma0 alone
  CHECK(t.lambda_known(1, 1));
}

TEST_CASE("closed-form identity suite passes") {
  for (const CheckResult& r : verify_coeffs()) {
    INFO(r.name, " ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("built-in profile leading constants") {
  const GrowthProfile f = partition_profile(4);
  CHECK(close_rel(f.beta, Real(2) * pi() / sqrt(Real(6)), Real("1e-50")));
  CHECK(f.alpha == Real(1));
  CHECK(close_rel(f.gamma[0], Real(1) / (Real(4) * sqrt(Real(3))), Real("1e-50")));
  // second coefficient has the closed form -(beta/48 + 1/beta) * gamma0
  const Real want = -(f.beta / Real(48) + Real(1) / f.beta) * f.gamma[0];
  CHECK(close_rel(f.gamma[1], want, Real("1e-40")));
}

TEST_CASE("profile corrections match the exact table") {
  const GrowthProfile f = partition_profile(4);
  const PartitionTable t = partition_table(1, 10000);
  const unsigned long n = 10000;
  const Real sn = sqrt(Real(n));
  const Real scaled =
      Real(t.values[n]) * Real(4) * sqrt(Real(3)) * Real(n) * exp(-f.beta * sn);
  // (scaled - 1) * sqrt(n) -> gamma1/gamma0 with an O(n^{-1/2}) tail
  const Real fit1 = (scaled - Real(1)) * sn;
  const Real t1 = f.gamma[1] / f.gamma[0];
  CHECK(abs(fit1 - t1) <= Real("5e-3"));
  const Real fit2 = ((scaled - Real(1)) - t1 / sn) * Real(n);
  const Real t2 = f.gamma[2] / f.gamma[0];
  CHECK(abs(fit2 - t2) <= Real("5e-2"));
}

TEST_CASE("colored leading constants reduce to the one-color values") {
  CHECK(close_rel(colored_alpha_leading(1), Real(1), Real("1e-55")));
  CHECK(close_rel(colored_gamma0_leading(1), Real(1) / (Real(4) * sqrt(Real(3))),
                  Real("1e-50")));
}

TEST_CASE("colored leading constants against exact tables") {
  const unsigned k = 2;
  const GrowthProfile f = colored_profile(k, colored_alpha_leading(k),
                                          {colored_gamma0_leading(k)});
  const PartitionTable t = partition_table(k, 10000);
  auto scaled = [&](unsigned long n) {
    return Real(t.values[n]) * pow(Real(n), f.alpha) * exp(-f.beta * sqrt(Real(n)));
  };
  // Richardson step removes the n^{-1/2} correction.
  const Real v1 = scaled(2500), v2 = scaled(10000);
  const Real extrapolated = Real(2) * v2 - v1;
  CHECK(close_rel(extrapolated, f.gamma[0], Real("1e-2")));
}

TEST_CASE("profile validation requires positive scale") {
  CHECK_THROWS_AS(GrowthProfile(Real(0), Real(1), {Real(1)}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthProfile(Real(1), Real(1), {Real(-1)}, "bad"), std::invalid_argument);
}
