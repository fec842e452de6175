#include "theta/false_theta.hpp"

#include <deque>
#include <stdexcept>

#include "theta/errors.hpp"

namespace theta {

FalseThetaParams::FalseThetaParams(Real a_, Real b_, Complex z_)
    : a(std::move(a_)), b(std::move(b_)), z(std::move(z_)) {
  if (!(a > Real(0))) throw std::invalid_argument("false theta needs a > 0");
  if (b < Real(0)) throw std::invalid_argument("false theta needs b >= 0");
  if (!(z.re > Real(0))) throw std::invalid_argument("false theta needs Re(z) > 0");
}

bool FalseThetaParams::in_asym_sector() const { return abs(z.im) <= z.re; }

LogisticKernel::LogisticKernel(unsigned j_max) {
  polys_.resize(j_max + 1);
  polys_[0] = {mpz_class(0), mpz_class(1)};  // D_0 = g
  for (unsigned J = 0; J < j_max; ++J) {
    const std::vector<mpz_class>& p = polys_[J];
    std::vector<mpz_class> q(p.size() + 1);
    // (d/dg p) * (g^2 - g)
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      const mpz_class t = mpz_class(static_cast<unsigned long>(i)) * p[i];
      q[i + 1] += t;
      q[i] -= t;
    }
    polys_[J + 1] = std::move(q);
  }
}

const std::vector<mpz_class>& LogisticKernel::poly(unsigned J) const {
  if (J >= polys_.size())
    throw OrderTooHigh("logistic kernel holds J <= " + std::to_string(j_max()));
  return polys_[J];
}

Real LogisticKernel::eval(unsigned J, const Real& alpha) const {
  const std::vector<mpz_class>& p = poly(J);
  const Real g = Real(1) / (Real(1) + exp(alpha));
  Real acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= g;
    if (p[i] != 0) acc += Real(p[i]);
  }
  return acc;
}

Complex LogisticKernel::eval(unsigned J, const Complex& alpha) const {
  const std::vector<mpz_class>& p = poly(J);
  const Complex g = Complex(Real(1)) / (Complex(Real(1)) + exp(alpha));
  Complex acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * g;
    if (p[i] != 0) acc.re += Real(p[i]);
  }
  return acc;
}

const LogisticKernel& logistic_kernel() {
  static const LogisticKernel kernel(40);
  return kernel;
}

Real logistic_deriv(unsigned J, const Real& alpha) {
  return logistic_kernel().eval(J, alpha);
}

DirectSumOptions::DirectSumOptions() {
  Real t(1);
  mpfr_ui_pow_ui(t.raw(), 10, Real::default_digits() + 5, MPFR_RNDN);
  tol = Real(1) / t;
}

DirectSumOptions::DirectSumOptions(Real t, unsigned long mt) : tol(std::move(t)), max_terms(mt) {}

Real t_direct(const Real& a, const Real& b, const Real& z, const DirectSumOptions& opt) {
  PrecisionGuard guard(Real::default_digits() + 15);
  Real sum(0);
  bool positive = true;
  for (unsigned long n = 1;; ++n, positive = !positive) {
    if (n > opt.max_terms)
      throw NoConvergence("t_direct exceeded " + std::to_string(opt.max_terms) + " terms");
    const Real nn(n);
    const Real term = exp(-(a * nn * nn + b * nn) * z);
    if (positive)
      sum += term;
    else
      sum -= term;
    // Past the vertex of the exponent the terms strictly decrease, so the
    // next term is smaller than this one and bounds the truncation error.
    if (term < opt.tol && Real(2) * a * nn + b > Real(0)) break;
  }
  return sum;
}

Complex t_direct(const FalseThetaParams& p, const DirectSumOptions& opt) {
  PrecisionGuard guard(Real::default_digits() + 15);
  Complex sum;
  bool positive = true;
  for (unsigned long n = 1;; ++n, positive = !positive) {
    if (n > opt.max_terms)
      throw NoConvergence("t_direct exceeded " + std::to_string(opt.max_terms) + " terms");
    const Real nn(n);
    const Real w = p.a * nn * nn + p.b * nn;
    const Complex term = exp(Complex(-(w * p.z.re), -(w * p.z.im)));
    if (positive)
      sum = sum + term;
    else
      sum = sum - term;
    if (abs(term) < opt.tol) break;
  }
  return sum;
}

Real euler_transform_sum(const std::function<Real(long)>& h, const Real& x, unsigned K,
                         const DirectSumOptions& opt) {
  if (K == 0) throw std::invalid_argument("euler_transform_sum needs K >= 1");
  PrecisionGuard guard(Real::default_digits() + 15);

  // Difference table h(0..K) -> Delta^r h(0) on the diagonal.
  std::vector<Real> row(K + 1);
  for (unsigned i = 0; i <= K; ++i) row[i] = h(static_cast<long>(i));
  std::vector<Real> diag(K + 1);
  diag[0] = row[0];
  for (unsigned r = 1; r <= K; ++r) {
    for (unsigned i = 0; i + r <= K; ++i) row[i] = row[i + 1] - row[i];
    diag[r] = row[0];
  }

  const Real one_minus_x = Real(1) - x;
  Real head(0);
  Real xp(1), denom = one_minus_x;
  for (unsigned r = 0; r < K; ++r) {
    head += xp * diag[r] / denom;
    xp *= x;
    denom *= one_minus_x;
  }

  // Tail: (x/(1-x))^K sum_n x^n Delta^K h(n).
  std::vector<mpz_class> binom(K + 1);
  for (unsigned j = 0; j <= K; ++j) mpz_bin_uiui(binom[j].get_mpz_t(), K, j);

  std::deque<Real> window;  // h(n), ..., h(n+K)
  for (unsigned i = 0; i <= K; ++i) window.push_back(h(static_cast<long>(i)));

  const Real factor = pow(x / one_minus_x, static_cast<unsigned long>(K));
  Real tail(0);
  Real xn(1);
  unsigned consecutive_small = 0;
  for (unsigned long n = 0;; ++n) {
    if (n > opt.max_terms)
      throw NoConvergence("euler transform tail exceeded " + std::to_string(opt.max_terms) +
                          " terms");
    Real dk(0);
    for (unsigned j = 0; j <= K; ++j) {
      const Real t = mul_z(window[j], binom[j]);
      if ((K - j) % 2 == 0)
        dk += t;
      else
        dk -= t;
    }
    const Real term = xn * dk;
    tail += term;
    if (abs(term * factor) < opt.tol) {
      if (++consecutive_small >= 3) break;
    } else {
      consecutive_small = 0;
    }
    xn *= x;
    window.pop_front();
    window.push_back(h(static_cast<long>(n + K + 1)));
  }
  return head + factor * tail;
}

Real t_via_euler(const Real& a, const Real& b, const Real& z, unsigned K,
                 const DirectSumOptions& opt) {
  PrecisionGuard guard(Real::default_digits() + 15);
  const Real az = a * z;
  const Real x = -exp(-(b * z));
  auto h = [&az](long n) {
    const Real nn(n);
    return exp(-(az * nn * nn));
  };
  return Real(1) - euler_transform_sum(h, x, K, opt);
}

namespace {

void check_kernel_order(unsigned max_order) {
  if (max_order > logistic_kernel().j_max())
    throw OrderTooHigh("expansion needs derivative order " + std::to_string(max_order) +
                       " > kernel limit " + std::to_string(logistic_kernel().j_max()));
}

}  // namespace

Real t_uniform(unsigned ell, const FalseThetaParams& p, unsigned p_order) {
  if (p_order == 0) throw std::invalid_argument("t_uniform needs p >= 1");
  if (!(abs(p.z.im) == Real(0)))
    throw std::invalid_argument("t_uniform with complex z: use t_uniform_c");
  check_kernel_order(2 * (p_order - 1) + ell);
  const Real z = p.z.re;
  const Real alpha = p.b * z;
  const Real az = p.a * z;
  Real sum(0);
  Real coef(1);  // (-az)^k / k!
  for (unsigned k = 0; k < p_order; ++k) {
    sum += coef * logistic_kernel().eval(2 * k + ell, alpha);
    coef *= -az / Real(static_cast<long>(k) + 1);
  }
  return (ell % 2 == 0) ? sum : -sum;
}

Complex t_uniform_c(unsigned ell, const FalseThetaParams& p, unsigned p_order) {
  if (p_order == 0) throw std::invalid_argument("t_uniform needs p >= 1");
  if (!p.in_asym_sector())
    throw std::invalid_argument("asymptotic route requires |Im z| <= Re z");
  check_kernel_order(2 * (p_order - 1) + ell);
  const Complex alpha = p.b * p.z;
  const Complex az = p.a * p.z;
  Complex sum;
  Complex coef(Real(1));
  for (unsigned k = 0; k < p_order; ++k) {
    sum = sum + coef * logistic_kernel().eval(2 * k + ell, alpha);
    coef = (Real(-1) / Real(static_cast<long>(k) + 1)) * (coef * az);
  }
  if (ell % 2 == 1) sum = -sum;
  return sum;
}

std::map<unsigned, Real> z_derivative_operator(unsigned k, unsigned J, const Real& mu,
                                               const Real& a, const Real& b) {
  std::map<unsigned, Real> coeffs;
  const Real inv_kfact = Real(1) / factorial(k);
  for (unsigned r = 0; r <= J; ++r) {
    for (unsigned s = 0; s <= k + J - r; ++s) {
      Real c = inv_kfact * binomial(J, r) * binomial(J - r + k, s);
      c *= ipow(mu, k + J - s - r);
      c *= ipow(-a, s);
      c *= ipow(b, r);
      const unsigned order = s + k + J;
      auto it = coeffs.find(order);
      if (it == coeffs.end())
        coeffs.emplace(order, c);
      else
        it->second += c;
    }
  }
  return coeffs;
}

Real t_z_derivative_asym(unsigned J, const Real& mu, const FalseThetaParams& p,
                         unsigned p_order) {
  if (p_order == 0) throw std::invalid_argument("t_z_derivative_asym needs p >= 1");
  if (!(abs(p.z.im) == Real(0)))
    throw std::invalid_argument("t_z_derivative_asym takes real z");
  check_kernel_order(2 * (p_order - 1) + 2 * J);
  const Real z = p.z.re;
  const Real alpha = p.b * z;
  Real sum(0);
  Real zk(1);
  for (unsigned k = 0; k < p_order; ++k) {
    Real block(0);
    for (const auto& [order, c] : z_derivative_operator(k, J, mu, p.a, p.b))
      block += c * logistic_kernel().eval(order, alpha);
    sum += zk * block;
    zk *= z;
  }
  return sum;
}

Real euler_polynomial(unsigned n, const Real& x) {
  std::vector<Real> e(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Real acc = ipow(x, j);
    Real corr(0);
    for (unsigned i = 0; i < j; ++i) corr += binomial(j, i) * e[i];
    e[j] = acc - corr / Real(2);
  }
  return e[n];
}

mpz_class hermite_number(unsigned n) {
  if (n % 2 != 0) return 0;
  mpz_class num, den;
  mpz_fac_ui(num.get_mpz_t(), n);
  mpz_fac_ui(den.get_mpz_t(), n / 2);
  mpz_class h = num / den;
  return (n / 2) % 2 == 0 ? h : -h;
}

Real t_euler_poly_expansion(const Real& a, const Real& b, const Real& z, unsigned N) {
  const Real xe = b / (Real(2) * a);
  const Real az = a * z;
  Real sum(0);
  for (unsigned n = 0; n < N; n += 2) {  // odd-n Hermite numbers vanish
    const Real term = euler_polynomial(n, xe) * Real(hermite_number(n)) / factorial(n) *
                      ipow(az, n / 2);
    sum += term;
  }
  return sum;
}

}  // namespace theta
