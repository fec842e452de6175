#pragma once

#include <cstdint>
#include <vector>

#include "theta/growth.hpp"
#include "theta/real.hpp"

namespace theta {

// Per-profile coefficient tables for the operator expansions: the shift
// coefficients lambda_{n,j}(f) obtained by composing the exponential
// rearrangement series with the gamma-ratio series, and the derived
// expansion constants C_{r,l,s}(g;f) (central regime) and C_{l,s}(g;f)
// (large-shift regime). Built once per profile; immutable afterwards.
class OperatorCoeffs {
 public:
  OperatorCoeffs(GrowthProfile profile, unsigned g_max);

  const GrowthProfile& profile() const { return profile_; }
  unsigned g_max() const { return g_max_; }

  // lambda_{n,j}; throws GammaTooShort when the profile's gamma list cannot
  // determine the entry.
  const Real& lambda(unsigned n, unsigned j) const;
  bool lambda_known(unsigned n, unsigned j) const;

  // C_{r,l,s}(g;f); zero whenever 2s+2l+3r > 2g.
  Real c_central(unsigned g, unsigned r, unsigned l, unsigned s) const;

  // C_{l,s}(g;f); zero whenever l+s > g.
  Real c_tail(unsigned g, unsigned l, unsigned s) const;

 private:
  GrowthProfile profile_;
  unsigned g_max_;
  unsigned j_max_;
  unsigned n_max_;
  std::vector<std::vector<Real>> lambda_;        // [n][j]
  std::vector<std::vector<std::uint8_t>> known_;  // gamma coverage flags
};

}  // namespace theta
