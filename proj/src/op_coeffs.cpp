#include "theta/op_coeffs.hpp"

#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

Real half_binomial(unsigned h) {
  Real r(1);
  Real top(0.5);
  for (unsigned i = 0; i < h; ++i) {
    r *= top / Real(static_cast<long>(i) + 1);
    top -= Real(1);
  }
  return r;
}

// binom(x, g) for real x.
Real real_binomial(const Real& x, unsigned g) {
  Real r(1);
  for (unsigned i = 0; i < g; ++i) r *= (x - Real(static_cast<long>(i))) / Real(static_cast<long>(i) + 1);
  return r;
}

}  // namespace

OperatorCoeffs::OperatorCoeffs(GrowthProfile profile, unsigned g_max)
    : profile_(std::move(profile)), g_max_(g_max), j_max_(g_max), n_max_(2 * g_max) {
  PrecisionGuard guard(Real::default_digits() + 10);
  const Real& beta = profile_.beta;
  const std::size_t L = profile_.gamma.size();  // gamma ratios known for h < L

  // Exponential rearrangement coefficients d[k][l]:
  // exp(beta sqrt X (sqrt(1+r/X) - 1 - r/(2X))) expanded as a double series;
  // d[k][l] = beta^l / l! * [t^{k+2l}] B(t)^l with B(t) = sum_{h>=2} binom(1/2,h) t^h.
  const unsigned t_len = j_max_ + 1;
  std::vector<Real> base(t_len, Real(0));
  for (unsigned h = 2; h < t_len; ++h) base[h] = half_binomial(h);

  const unsigned l_max = j_max_ / 2;
  std::vector<std::vector<Real>> d(j_max_ + 1, std::vector<Real>(l_max + 1, Real(0)));
  std::vector<Real> bl(t_len, Real(0));  // B(t)^l
  bl[0] = 1;
  Real beta_l(1), l_fact(1);
  for (unsigned l = 0; l <= l_max; ++l) {
    if (l > 0) {
      std::vector<Real> next(t_len, Real(0));
      for (unsigned i = 0; i < t_len; ++i) {
        if (bl[i].is_zero()) continue;
        for (unsigned j = 2; i + j < t_len; ++j) next[i + j] += bl[i] * base[j];
      }
      bl = std::move(next);
      beta_l *= beta;
      l_fact *= Real(static_cast<long>(l));
    }
    for (unsigned k = 0; k + 2 * l <= j_max_; ++k) d[k][l] = beta_l / l_fact * bl[k + 2 * l];
  }

  // Gamma-ratio series c_g(y) = (sum binom(-n/2-alpha, g) t_n y^n) / (sum t_n y^n),
  // t_n = gamma_n/gamma_0. Row g = 0 is identically 1.
  std::vector<Real> t(L);
  for (std::size_t i = 0; i < L; ++i) t[i] = profile_.gamma[i] / profile_.gamma[0];
  std::vector<Real> invden(L, Real(0));
  invden[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    Real acc(0);
    for (std::size_t i = 1; i <= n; ++i) acc += t[i] * invden[n - i];
    invden[n] = -acc;
  }
  std::vector<std::vector<Real>> c(j_max_ + 1, std::vector<Real>(L, Real(0)));
  c[0][0] = 1;
  for (unsigned g = 1; g <= j_max_; ++g) {
    std::vector<Real> num(L, Real(0));
    for (std::size_t n = 0; n < L; ++n)
      num[n] = real_binomial(-Real(static_cast<long>(n)) / Real(2) - profile_.alpha, g) * t[n];
    for (std::size_t h = 0; h < L; ++h) {
      Real acc(0);
      for (std::size_t i = 0; i <= h; ++i) acc += num[i] * invden[h - i];
      c[g][h] = acc;
    }
  }

  // lambda_{n,j} = sum over l, k with h = l + (n-j)/2, g' = j - 2l - k of
  // c[g'][h] d[k][l]; entries needing gamma ratios beyond the profile's list
  // are flagged instead of guessed.
  lambda_.assign(n_max_ + 1, std::vector<Real>(j_max_ + 1, Real(0)));
  known_.assign(n_max_ + 1, std::vector<std::uint8_t>(j_max_ + 1, 1));
  for (unsigned n = 0; n <= n_max_; ++n) {
    for (unsigned j = 0; j <= j_max_; ++j) {
      if ((n % 2) != (j % 2)) continue;  // parity: lambda vanishes
      const long shift = (static_cast<long>(n) - static_cast<long>(j)) / 2;
      Real acc(0);
      bool ok = true;
      for (unsigned l = 0; 2 * l <= j; ++l) {
        const long h = static_cast<long>(l) + shift;
        if (h < 0) continue;
        for (unsigned k = 0; k + 2 * l <= j; ++k) {
          if (d[k][l].is_zero()) continue;
          const unsigned gp = j - 2 * l - k;
          Real cval(0);
          if (gp == 0) {
            if (h != 0) continue;
            cval = Real(1);
          } else if (static_cast<std::size_t>(h) < L) {
            cval = c[gp][h];
          } else {
            ok = false;
            break;
          }
          acc += cval * d[k][l];
        }
        if (!ok) break;
      }
      lambda_[n][j] = acc;
      known_[n][j] = ok ? 1 : 0;
    }
  }
}

bool OperatorCoeffs::lambda_known(unsigned n, unsigned j) const {
  if (n > n_max_ || j > j_max_) return false;
  return known_[n][j] != 0;
}

const Real& OperatorCoeffs::lambda(unsigned n, unsigned j) const {
  if (n > n_max_ || j > j_max_)
    throw OrderTooHigh("lambda(" + std::to_string(n) + "," + std::to_string(j) +
                       ") beyond table built for g_max = " + std::to_string(g_max_));
  if (!known_[n][j])
    throw GammaTooShort("lambda(" + std::to_string(n) + "," + std::to_string(j) +
                        ") needs gamma terms beyond the " +
                        std::to_string(profile_.gamma.size()) + " supplied for profile " +
                        profile_.label);
  return lambda_[n][j];
}

Real OperatorCoeffs::c_central(unsigned g, unsigned r, unsigned l, unsigned s) const {
  if (2 * s + 2 * l + 3 * r > 2 * g) return Real(0);
  const unsigned M = 2 * g - 2 * s - 2 * l - 3 * r;
  Real acc(0);
  const Real half_beta = profile_.beta / Real(2);
  for (unsigned j = 0; j <= s + l && j <= M; ++j) {
    const Real& lam = lambda(M - j, j + r);
    if (lam.is_zero()) continue;
    acc += ipow(half_beta, s + l - j) / factorial(s + l - j) * binomial(j + r, r) * lam;
  }
  Real result = binomial(s + l, s) * acc;
  return (s % 2 == 0) ? result : -result;
}

Real OperatorCoeffs::c_tail(unsigned g, unsigned l, unsigned s) const {
  if (l + s > g) return Real(0);
  const unsigned M = 2 * (g - l - s);
  Real acc(0);
  const Real half_beta = profile_.beta / Real(2);
  for (unsigned j = 0; j <= l + s && j <= M; ++j) {
    const Real& lam = lambda(M - j, j);
    if (lam.is_zero()) continue;
    acc += ipow(half_beta, l + s - j) / factorial(l + s - j) * lam;
  }
  Real result = binomial(l + s, s) * acc;
  return ((l + s) % 2 == 0) ? result : -result;
}

}  // namespace theta
