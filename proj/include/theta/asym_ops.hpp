#pragma once

#include <gmpxx.h>

#include <ostream>

#include "theta/op_coeffs.hpp"
#include "theta/real.hpp"

namespace theta {

// f(X+r)/f(X) via the re-expanded shift series, truncated at p gauge
// powers of r X^{-3/4}.
Real shift_ratio(const OperatorCoeffs& fc, const Real& X, const Real& r, unsigned p);

// One operator block of the central expansion applied to the logistic
// kernel at alpha (test hook).
Real sf_central_term(const OperatorCoeffs& fc, unsigned g, const Real& a, const Real& b,
                     const Real& mu, const Real& alpha);

// S_f(a, b+mu; X)/f(X) for b = o(X^{3/4}): sum of 3p operator blocks at
// alpha = b beta/(2 sqrt X). Emits a note to *warn when b exceeds X^0.74.
Real sf_ratio_central(const OperatorCoeffs& fc, const Real& a, const Real& b, const Real& mu,
                      const Real& X, unsigned p, std::ostream* warn = nullptr);

// S_f(a, b+mu; X)/f(X-b) in the large-b regimes: a plain coefficient
// expansion in (X-b)^{-1/2} when b is at least sqrt(X) log X, or the
// single-term shift form when b > X/3. RegimeViolation otherwise.
Real sf_ratio_tail(const OperatorCoeffs& fc, const Real& a, const Real& b, const Real& mu,
                   const Real& X, unsigned order);

// Second-order differential operator appearing in the finite-difference
// expansion: M_{f,J}(a, d_alpha) applied to the logistic kernel.
struct DeltaOperatorM {
  unsigned J;
  Real a;

  // ((4 alpha_f - 1 + J) J D_J + 2(J + 2 alpha_f) alpha D_{J+1}
  //  + (a beta_f^2 + alpha^2) D_{J+2}) at alpha.
  Real apply(const GrowthProfile& f, const Real& alpha) const;
};

// Delta_u^J|_0 S_f(a, b+u mu; X) / f(X) via the two-term operator form at
// alpha = (2b + mu J) beta/(4 sqrt X). The expansion is regular at
// 2b = -mu J (alpha = 0); strict mode enforces the hypothesis and throws
// DegenerateB there instead.
Real sf_delta_ratio(const OperatorCoeffs& fc, unsigned J, const Real& a, const Real& b,
                    const Real& mu, const Real& X, bool strict = false);

enum class Family { J, A, B, I, N, NDIFF, CRANK, RANK };
enum class Selector { Main, Wide, KDiff };

// sqrt(k pi^2 / (6n)).
Real delta_k(unsigned k, unsigned long n);

// Closed hyperbolic main-term value of the selected statistic. pk_exact is
// the exact count the formula scales (p_k(n) for families J/A/B, p(n)
// otherwise).
Real closed_ratio(Family family, Selector sel, long m, unsigned k, unsigned long n,
                  const mpz_class& pk_exact);

// Stated peak location (1/2pi) sqrt(6n/k) log(2+sqrt 3) for the B family.
Real peak_prediction(unsigned k, unsigned long n);

// Stated location (sqrt(6n)/pi) log(2+sqrt 3) of the minimal rank-crank
// style k-difference.
Real min_diff_prediction(unsigned long n);

// Critical point in m of the closed B-family formula itself:
// (1/pi) sqrt(6n/k) log(2+sqrt 3) - 1/2.
Real closed_b_critical_m(unsigned k, unsigned long n);

}  // namespace theta
