#pragma once

#include <gmpxx.h>

#include <string>

#include "theta/real.hpp"

namespace theta {

// "8.67687e45"-style scientific form of an exact integer, rounded to sig
// significant digits by exact digit extraction with round-half-even ties.
std::string sci_mpz(const mpz_class& v, unsigned sig = 6);

// Same shape for a Real (correctly rounded by MPFR).
std::string sci_real(const Real& x, unsigned sig = 6);

// Fixed-point form with the given number of decimals, e.g. "0.9555".
std::string fixed_real(const Real& x, unsigned decimals = 4);

}  // namespace theta
