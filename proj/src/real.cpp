#include "theta/real.hpp"

#include <cmath>

namespace theta {

namespace {
unsigned& digits_ref() {
  static unsigned d = 60;
  return d;
}
}  // namespace

mpfr_prec_t decimal_digits_to_bits(unsigned digits) {
  // log2(10) with headroom so printed digits are stable.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

unsigned Real::default_digits() { return digits_ref(); }

void Real::set_default_digits(unsigned digits) { digits_ref() = digits; }

mpfr_prec_t Real::default_prec() { return decimal_digits_to_bits(digits_ref()); }

}  // namespace theta
