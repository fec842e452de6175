#pragma once

#include <string>
#include <vector>

#include "theta/real.hpp"

namespace theta {

// Parameters of an asymptotic law f(X) ~ e^{beta sqrt X} X^{-alpha}
// sum_n gamma[n] X^{-n/2}, with beta > 0 and gamma[0] > 0. Everything the
// operator expansions need about f is carried here.
struct GrowthProfile {
  Real beta;
  Real alpha;
  std::vector<Real> gamma;
  std::string label;

  GrowthProfile(Real beta_, Real alpha_, std::vector<Real> gamma_, std::string label_);
};

// Built-in profile of the ordinary partition function: beta = 2*pi/sqrt(6),
// alpha = 1, gamma[0] = 1/(4 sqrt 3). Higher gamma terms are derived from
// the dominant term of the Hardy-Ramanujan-Rademacher series (the remaining
// terms are exponentially smaller and contribute to no power order); they
// are cross-validated against exact tables in the test suite.
GrowthProfile partition_profile(std::size_t n_gamma = 12);

// Colored-count profile: beta = 2*pi*sqrt(k/6) is forced; alpha and gamma
// are caller-supplied (no closed-form constants are assumed here).
GrowthProfile colored_profile(unsigned k, Real alpha, std::vector<Real> gamma);

// Leading saddle-point constants for the k-colored counting function,
// usable as colored_profile inputs: alpha = (k+3)/4 and
// gamma0 = (k/24)^{k/4} k^{1/4} / (2 * 6^{1/4}).
Real colored_alpha_leading(unsigned k);
Real colored_gamma0_leading(unsigned k);

// Value of the defining series at X (no remainder): meaningful for ratios
// of large arguments, e.g. converting between normalizations f(X)/f(X-b).
Real profile_eval(const GrowthProfile& f, const Real& X);

}  // namespace theta
