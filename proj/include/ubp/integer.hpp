#pragma once

#include <gmpxx.h>

#include <string>

namespace ubp {

  using Integer = mpz_class;

  inline Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
  }

  inline Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
  }

  inline std::string to_string(Integer const& x) {
    return x.get_str();
  }

}  // namespace ubp
