#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "theta/real.hpp"

namespace theta {

// Parameters of T_{a,b}(z) = sum_{n>=1} (-1)^{n-1} exp(-(a n^2 + b n) z).
// Direct summation accepts any Re(z) > 0; the asymptotic routes additionally
// require the sector |Im z| <= Re z.
struct FalseThetaParams {
  Real a;
  Real b;
  Complex z;

  FalseThetaParams(Real a_, Real b_, Complex z_);
  bool in_asym_sector() const;
};

// Derivatives D_J = d^J/dalpha^J [1/(1+e^alpha)], held as exact integer
// polynomials in g = 1/(1+e^alpha) via g' = g^2 - g. Built once, immutable.
class LogisticKernel {
 public:
  explicit LogisticKernel(unsigned j_max = 40);

  unsigned j_max() const { return static_cast<unsigned>(polys_.size() - 1); }
  const std::vector<mpz_class>& poly(unsigned J) const;  // coeff of g^i
  Real eval(unsigned J, const Real& alpha) const;
  Complex eval(unsigned J, const Complex& alpha) const;

 private:
  std::vector<std::vector<mpz_class>> polys_;
};

// Shared kernel instance (j_max = 40).
const LogisticKernel& logistic_kernel();

// D_J(alpha) through the shared kernel.
Real logistic_deriv(unsigned J, const Real& alpha);

struct DirectSumOptions {
  Real tol;  // stop once the next term magnitude drops below tol
  unsigned long max_terms = 5'000'000;

  DirectSumOptions();  // tol = 10^-(digits+5)
  explicit DirectSumOptions(Real t, unsigned long mt = 5'000'000);
};

// Partial-sum evaluation of T_{a,b}(z). For real z the series alternates
// with decreasing terms, so consecutive partial sums bracket the limit and
// the returned value is within tol of it.
Real t_direct(const Real& a, const Real& b, const Real& z,
              const DirectSumOptions& opt = DirectSumOptions());
Complex t_direct(const FalseThetaParams& p,
                 const DirectSumOptions& opt = DirectSumOptions());

// sum_{n>=0} x^n h(n) evaluated as K leading difference terms plus the
// transformed tail. Requires sum |x^n h(n)| < infinity.
Real euler_transform_sum(const std::function<Real(long)>& h, const Real& x, unsigned K,
                         const DirectSumOptions& opt = DirectSumOptions());

// T_{a,b}(z) through the Euler transform with x = -e^{-bz}, h(n) = e^{-n^2 a z}.
Real t_via_euler(const Real& a, const Real& b, const Real& z, unsigned K = 8,
                 const DirectSumOptions& opt = DirectSumOptions());

// Uniform small-z expansion of sum_{n>=1} (-1)^{n-1} n^ell e^{-(a n^2+b n) z}:
// (-1)^ell sum_{k<p} (-az)^k/k! D_{2k+ell}(bz), valid uniformly in b >= 0.
Real t_uniform(unsigned ell, const FalseThetaParams& p, unsigned p_order);
Complex t_uniform_c(unsigned ell, const FalseThetaParams& p, unsigned p_order);

// Differential-operator coefficients for the J-th z-derivative expansion:
// order of d/dalpha -> scalar coefficient, for the k-th power of z.
std::map<unsigned, Real> z_derivative_operator(unsigned k, unsigned J, const Real& mu,
                                               const Real& a, const Real& b);

// d^J/dz^J T_{a,b+mu}(z) via sum_{k<p} z^k P_{k,J}(mu,a,b,d_alpha) D_0(bz).
Real t_z_derivative_asym(unsigned J, const Real& mu, const FalseThetaParams& p,
                         unsigned p_order);

// Euler polynomial E_n(x) from its exponential generating function.
Real euler_polynomial(unsigned n, const Real& x);

// Hermite number H_n(0) = (-1)^{n/2} n!/(n/2)! for even n, 0 for odd n.
mpz_class hermite_number(unsigned n);

// Partial sum sum_{n<N} E_n(b/2a) H_n(0)/n! (az)^{n/2}, approximating
// 2 e^{-b^2 z/4a} (1 - T_{a,b}(z)) for small z.
Real t_euler_poly_expansion(const Real& a, const Real& b, const Real& z, unsigned N);

}  // namespace theta
