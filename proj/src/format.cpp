#include "theta/format.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace theta {

namespace {

std::string assemble(bool negative, std::string digits, long exp10) {
  std::string out;
  if (negative) out.push_back('-');
  out.push_back(digits[0]);
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(exp10);
  return out;
}

}  // namespace

std::string sci_mpz(const mpz_class& v, unsigned sig) {
  if (sig == 0) throw std::invalid_argument("sig must be >= 1");
  if (v == 0) return assemble(false, std::string(sig, '0'), 0);
  const bool negative = v < 0;
  const mpz_class av = abs(v);
  std::string digits = av.get_str();
  long exp10 = static_cast<long>(digits.size()) - 1;
  if (digits.size() <= sig) {
    digits.append(sig - digits.size(), '0');
    return assemble(negative, digits, exp10);
  }

  std::string kept = digits.substr(0, sig);
  const char first_dropped = digits[sig];
  bool rest_nonzero = false;
  for (std::size_t i = sig + 1; i < digits.size(); ++i)
    if (digits[i] != '0') {
      rest_nonzero = true;
      break;
    }

  bool round_up;
  if (first_dropped > '5')
    round_up = true;
  else if (first_dropped < '5')
    round_up = false;
  else if (rest_nonzero)
    round_up = true;
  else
    round_up = (kept.back() - '0') % 2 == 1;  // ties to even

  if (round_up) {
    int i = static_cast<int>(kept.size()) - 1;
    for (; i >= 0; --i) {
      if (kept[i] != '9') {
        ++kept[i];
        break;
      }
      kept[i] = '0';
    }
    if (i < 0) {  // 999... rolled over
      kept.insert(kept.begin(), '1');
      kept.pop_back();
      ++exp10;
    }
  }
  return assemble(negative, kept, exp10);
}

std::string sci_real(const Real& x, unsigned sig) {
  if (sig == 0) throw std::invalid_argument("sig must be >= 1");
  if (x.is_zero()) return assemble(false, std::string(sig, '0'), 0);
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, sig, x.raw(), MPFR_RNDN);
  if (!s) throw std::runtime_error("mpfr_get_str failed");
  std::string digits(s);
  mpfr_free_str(s);
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(digits.begin());
  }
  // mpfr places the decimal point before the first digit: value = 0.d1d2... * 10^e
  return assemble(negative, digits, static_cast<long>(e) - 1);
}

std::string fixed_real(const Real& x, unsigned decimals) {
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rf", static_cast<int>(decimals), x.raw());
  return std::string(buf);
}

}  // namespace theta
