#pragma once

#include <gmpxx.h>

#include <string>

namespace efl {

// Exact arithmetic everywhere: arbitrary-precision rationals and integers.
using Rat = mpq_class;
using Int = mpz_class;

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// "5", "-1/2", ... (denominator printed only when != 1)
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace efl
