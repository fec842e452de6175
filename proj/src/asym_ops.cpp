#include "theta/asym_ops.hpp"

#include <stdexcept>
#include <string>

#include "theta/errors.hpp"
#include "theta/false_theta.hpp"

namespace theta {

Real shift_ratio(const OperatorCoeffs& fc, const Real& X, const Real& r, unsigned p) {
  if (p == 0) throw std::invalid_argument("shift_ratio needs p >= 1");
  if (!(abs(r) < X)) throw std::invalid_argument("shift_ratio needs |r| < X");
  const GrowthProfile& f = fc.profile();
  const Real sqrtX = sqrt(X);
  const Real quarter_root = sqrt(sqrtX);
  const Real gauge = r / (sqrtX * quarter_root);  // r X^{-3/4}
  Real sum(0);
  Real gauge_j(1);
  for (unsigned j = 0; j < p; ++j) {
    // Lambda_j(X) truncated so every retained piece is above the X^{-3p/4} cut.
    Real lam_j(0);
    Real xq(1);  // X^{-n/4}
    for (unsigned n = 0; n + 3 * j < 3 * p; ++n) {
      lam_j += fc.lambda(n, j) * xq;
      xq /= quarter_root;
    }
    sum += lam_j * gauge_j;
    gauge_j *= gauge;
  }
  return exp(f.beta * r / (Real(2) * sqrtX)) * sum;
}

Real sf_central_term(const OperatorCoeffs& fc, unsigned g, const Real& a, const Real& b,
                     const Real& mu, const Real& alpha) {
  Real block(0);
  for (unsigned r = 0; 3 * r <= 2 * g; ++r) {
    for (unsigned l = 0; 3 * r + 2 * l <= 2 * g; ++l) {
      for (unsigned s = 0; 3 * r + 2 * l + 2 * s <= 2 * g; ++s) {
        const Real c = fc.c_central(g, r, l, s);
        if (c.is_zero()) continue;
        block += c * ipow(a, s) * ipow(b, r) * ipow(mu, l) *
                 logistic_deriv(r + l + 2 * s, alpha);
      }
    }
  }
  return block;
}

Real sf_ratio_central(const OperatorCoeffs& fc, const Real& a, const Real& b, const Real& mu,
                      const Real& X, unsigned p, std::ostream* warn) {
  if (p == 0) throw std::invalid_argument("sf_ratio_central needs p >= 1");
  if (b < Real(0)) throw std::invalid_argument("sf_ratio_central needs b >= 0");
  if (3 * p - 1 > fc.g_max())
    throw OrderTooHigh("coefficient table built for g_max = " + std::to_string(fc.g_max()) +
                       ", expansion needs " + std::to_string(3 * p - 1));
  if (warn && b > pow(X, Real(0.74)))
    *warn << "note: b = " << b.to_double() << " is large for X = " << X.to_double()
          << "; the central expansion assumes b = o(X^(3/4))\n";
  const GrowthProfile& f = fc.profile();
  const Real sqrtX = sqrt(X);
  const Real alpha = b * f.beta / (Real(2) * sqrtX);
  Real sum(0);
  Real xg(1);  // X^{-g/2}
  for (unsigned g = 0; g < 3 * p; ++g) {
    sum += xg * sf_central_term(fc, g, a, b, mu, alpha);
    xg /= sqrtX;
  }
  return sum;
}

Real sf_ratio_tail(const OperatorCoeffs& fc, const Real& a, const Real& b, const Real& mu,
                   const Real& X, unsigned order) {
  if (!(b > Real(0)) || !(X > Real(0)))
    throw std::invalid_argument("sf_ratio_tail needs b, X > 0");
  const Real logX = log(X);
  const Real sqrtX = sqrt(X);
  if (Real(3) * b > X) {
    // Only the first quadratic value survives; S = f(X-a-b-mu) up to an
    // exponentially smaller second term. Past the support of f the sum is 0.
    if (a + mu >= X - b) return Real(0);
    return shift_ratio(fc, X - b, -(a + mu), 4);
  }
  if (b < sqrtX * logX)
    throw RegimeViolation("b between the central and large-shift regimes");
  const Real base = X - b;
  const Real sqrt_base = sqrt(base);
  Real sum(0);
  Real xg(1);  // (X-b)^{-g/2}
  for (unsigned g = 0; g <= order; ++g) {
    Real block(0);
    for (unsigned l = 0; l <= g; ++l)
      for (unsigned s = 0; l + s <= g; ++s) {
        const Real c = fc.c_tail(g, l, s);
        if (c.is_zero()) continue;
        block += c * ipow(mu, l) * ipow(a, s);
      }
    sum += xg * block;
    xg /= sqrt_base;
  }
  return sum;
}

Real DeltaOperatorM::apply(const GrowthProfile& f, const Real& alpha) const {
  const Real dj = logistic_deriv(J, alpha);
  const Real dj1 = logistic_deriv(J + 1, alpha);
  const Real dj2 = logistic_deriv(J + 2, alpha);
  const Real jj(static_cast<long>(J));
  return (Real(4) * f.alpha - Real(1) + jj) * jj * dj +
         Real(2) * (jj + Real(2) * f.alpha) * alpha * dj1 +
         (a * f.beta * f.beta + alpha * alpha) * dj2;
}

Real sf_delta_ratio(const OperatorCoeffs& fc, unsigned J, const Real& a, const Real& b,
                    const Real& mu, const Real& X, bool strict) {
  if (b < Real(0)) throw std::invalid_argument("sf_delta_ratio needs b >= 0");
  const GrowthProfile& f = fc.profile();
  const Real muJ = mu * Real(static_cast<long>(J));
  const Real two_b_mu_j = Real(2) * b + muJ;
  if (strict && two_b_mu_j.is_zero())
    throw DegenerateB("2b = -mu J puts the expansion point at alpha = 0");
  const Real sqrtX = sqrt(X);
  const Real alpha = two_b_mu_j * f.beta / (Real(4) * sqrtX);
  const DeltaOperatorM op{J, a};
  const Real bracket =
      logistic_deriv(J, alpha) - op.apply(f, alpha) / (Real(2) * f.beta * sqrtX);
  Real scale = ipow(mu * f.beta / Real(2), J);
  Real xj = ipow(Real(1) / sqrtX, J);
  return xj * scale * bracket;
}

Real delta_k(unsigned k, unsigned long n) {
  const Real pi_v = pi();
  return sqrt(Real(static_cast<long>(k)) * pi_v * pi_v / (Real(6) * Real(n)));
}

namespace {

Real sech2(const Real& x) {
  const Real s = sech(x);
  return s * s;
}

}  // namespace

Real closed_ratio(Family family, Selector sel, long m, unsigned k, unsigned long n,
                  const mpz_class& pk_exact) {
  if (n == 0) throw std::invalid_argument("closed_ratio needs n >= 1");
  const Real pkn(pk_exact);
  const Real dk = delta_k(k, n);       // colored spacing, families J/A/B
  const Real d1 = delta_k(1, n);       // plain spacing, rank/crank families
  const Real am(static_cast<long>(m < 0 ? -m : m));
  const Real mm(static_cast<long>(m));

  if (sel == Selector::KDiff) {
    switch (family) {
      case Family::I: {
        const Real x = (Real(2) * am - Real(1)) / Real(4) * d1;
        return d1 / Real(4) * sech2(x) * tanh(x) * pkn;
      }
      case Family::N:
      case Family::CRANK:
      case Family::RANK: {
        const Real x = mm / Real(2) * d1;
        const Real t = tanh(x);
        return d1 * d1 / Real(8) * sech2(x) * (Real(1) - Real(3) * t * t) * pkn;
      }
      default:
        throw std::invalid_argument("k-difference form exists for families I and N only");
    }
  }

  const bool wide = sel == Selector::Wide;
  switch (family) {
    case Family::J: {
      if (wide) return pkn / (Real(1) + exp(-(am * dk)));
      const Real x = (Real(2) * am - Real(1)) / Real(4) * dk;
      return Real(0.5) * (Real(1) - tanh(x)) * pkn;
    }
    case Family::A: {
      if (wide) {
        const Real w = Real(1) + exp(-(am * dk));
        return dk * pkn / (w * w);
      }
      return dk / Real(4) * sech2(mm / Real(2) * dk) * pkn;
    }
    case Family::B: {
      if (m < 0) throw NegativeM("b_{m,k} is defined for m >= 0");
      const Real x = (Real(2) * mm + Real(1)) / Real(4) * dk;
      if (wide) {
        const Real w = Real(1) + exp(-(mm * dk));
        return dk * dk * tanh(x) * pkn / (w * w);
      }
      return dk * dk / Real(4) * sech2(x) * tanh(x) * pkn;
    }
    case Family::I: {
      if (wide) return pkn / (Real(1) + exp(-(am * d1)));
      const Real x = (Real(2) * am - Real(1)) / Real(4) * d1;
      return Real(0.5) * (Real(1) - tanh(x)) * pkn;
    }
    case Family::N:
    case Family::CRANK:
    case Family::RANK: {
      if (wide) {
        const Real w = Real(1) + exp(-(am * d1));
        return d1 * pkn / (w * w);
      }
      return d1 / Real(4) * sech2(mm / Real(2) * d1) * pkn;
    }
    case Family::NDIFF: {
      const Real x = (Real(2) * mm + Real(1)) / Real(4) * d1;
      if (wide) {
        const Real w = Real(1) + exp(-(am * d1));
        return d1 * d1 * tanh(x) * pkn / (w * w);
      }
      return d1 * d1 / Real(4) * sech2(x) * tanh(x) * pkn;
    }
  }
  throw std::logic_error("unhandled family");
}

Real peak_prediction(unsigned k, unsigned long n) {
  const Real log_tan = log(Real(2) + sqrt(Real(3)));
  return sqrt(Real(6) * Real(n) / Real(static_cast<long>(k))) * log_tan /
         (Real(2) * pi());
}

Real min_diff_prediction(unsigned long n) {
  const Real log_tan = log(Real(2) + sqrt(Real(3)));
  return sqrt(Real(6) * Real(n)) * log_tan / pi();
}

Real closed_b_critical_m(unsigned k, unsigned long n) {
  const Real log_tan = log(Real(2) + sqrt(Real(3)));
  return sqrt(Real(6) * Real(n) / Real(static_cast<long>(k))) * log_tan / pi() -
         Real(0.5);
}

}  // namespace theta
