#include "theta/growth.hpp"

#include <stdexcept>
#include <utility>

namespace theta {

namespace {

using RSeries = std::vector<Real>;  // coefficients in y

RSeries mul(const RSeries& a, const RSeries& b, std::size_t len) {
  RSeries r(len, Real(0));
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j + i < len && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// exp of a series with zero constant term.
RSeries exp_series(const RSeries& b, std::size_t len) {
  RSeries acc(len, Real(0));
  acc[0] = 1;
  RSeries term(len, Real(0));
  term[0] = 1;
  for (std::size_t j = 1; j < len; ++j) {
    term = mul(term, b, len);
    const Real inv_j = Real(1) / Real(static_cast<long>(j));
    bool all_zero = true;
    for (std::size_t i = 0; i < len; ++i) {
      term[i] *= inv_j;
      if (!term[i].is_zero()) all_zero = false;
      acc[i] += term[i];
    }
    if (all_zero) break;
  }
  return acc;
}

// Reciprocal of a series with constant term 1.
RSeries reciprocal(const RSeries& w, std::size_t len) {
  RSeries r(len, Real(0));
  r[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Real acc(0);
    for (std::size_t i = 1; i <= n && i < w.size(); ++i) acc += w[i] * r[n - i];
    r[n] = -acc;
  }
  return r;
}

Real half_binomial(unsigned h) {
  // binom(1/2, h)
  Real r(1);
  Real top(0.5);
  for (unsigned i = 0; i < h; ++i) {
    r *= top / Real(static_cast<long>(i) + 1);
    top -= Real(1);
  }
  return r;
}

}  // namespace

GrowthProfile::GrowthProfile(Real beta_, Real alpha_, std::vector<Real> gamma_,
                             std::string label_)
    : beta(std::move(beta_)), alpha(std::move(alpha_)), gamma(std::move(gamma_)),
      label(std::move(label_)) {
  if (!(beta > Real(0))) throw std::invalid_argument("growth profile needs beta > 0");
  if (gamma.empty() || !(gamma[0] > Real(0)))
    throw std::invalid_argument("growth profile needs gamma[0] > 0");
}

GrowthProfile partition_profile(std::size_t n_gamma) {
  if (n_gamma == 0) n_gamma = 1;
  PrecisionGuard guard(Real::default_digits() + 10);
  const Real beta = Real(2) * pi() / sqrt(Real(6));

  // p(n) = gamma0 * e^{beta sqrt m} (1/m) (1 - 1/(beta sqrt m)) + lower order,
  // m = n - 1/24. Expand the m -> n reshuffle as a series in y = n^{-1/2}.
  const std::size_t len = n_gamma;
  const Real c24 = Real(1) / Real(24);

  RSeries w(len, Real(0));  // sqrt(1 - y^2/24)
  for (std::size_t h = 0; 2 * h < len; ++h)
    w[2 * h] = half_binomial(static_cast<unsigned>(h)) * ipow(-c24, h);

  RSeries s(len, Real(0));  // beta * (w(y) - 1)/y
  for (std::size_t i = 0; i + 1 < len; ++i) s[i] = beta * w[i + 1];

  const RSeries e1 = exp_series(s, len);

  RSeries u(len, Real(0));  // 1/(1 - y^2/24) = n/m
  for (std::size_t i = 0; 2 * i < len; ++i) u[2 * i] = ipow(c24, i);

  const RSeries invw = reciprocal(w, len);
  RSeries v(len, Real(0));  // 1 - y/(beta w(y))
  v[0] = 1;
  for (std::size_t i = 0; i + 1 < len; ++i) v[i + 1] -= invw[i] / beta;

  RSeries ratio = mul(mul(e1, u, len), v, len);

  const Real gamma0 = Real(1) / (Real(4) * sqrt(Real(3)));
  std::vector<Real> gamma(n_gamma);
  for (std::size_t i = 0; i < n_gamma; ++i) gamma[i] = gamma0 * ratio[i];
  return GrowthProfile(beta, Real(1), std::move(gamma), "p");
}

GrowthProfile colored_profile(unsigned k, Real alpha, std::vector<Real> gamma) {
  if (k == 0) throw std::invalid_argument("color count k must be >= 1");
  const Real beta = Real(2) * pi() * sqrt(Real(static_cast<long>(k)) / Real(6));
  return GrowthProfile(beta, std::move(alpha), std::move(gamma),
                       "p_" + std::to_string(k));
}

Real colored_alpha_leading(unsigned k) {
  return Real(static_cast<long>(k) + 3) / Real(4);
}

Real colored_gamma0_leading(unsigned k) {
  const Real kk(static_cast<long>(k));
  return pow(kk / Real(24), kk / Real(4)) * pow(kk, Real(1) / Real(4)) /
         (Real(2) * pow(Real(6), Real(1) / Real(4)));
}

Real profile_eval(const GrowthProfile& f, const Real& X) {
  const Real rx = sqrt(X);
  Real series(0);
  Real xp(1);
  for (const Real& g : f.gamma) {
    series += g * xp;
    xp /= rx;
  }
  return exp(f.beta * rx) * pow(X, -f.alpha) * series;
}

}  // namespace theta
