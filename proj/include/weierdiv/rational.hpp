#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace weierdiv {

using rational = mpq_class;

inline rational make_rational(std::int64_t num, std::int64_t den) {
    mpz_class n(static_cast<long>(num)), d(static_cast<long>(den));
    rational q(n, d);
    q.canonicalize();
    return q;
}

/// Natural log of |q|, computed from the limb representation so values far
/// outside double range still work. Returns -inf for q == 0.
inline double log_abs(const rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    constexpr double ln2 = 0.6931471805599453;
    return std::log(std::fabs(mn)) + static_cast<double>(en) * ln2 -
           (std::log(std::fabs(md)) + static_cast<double>(ed) * ln2);
}

inline double to_double(const rational& q) { return q.get_d(); }

inline rational factorial_q(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(f);
}

/// n!^p as an exact rational.
inline rational factorial_pow_q(unsigned n, unsigned p) {
    mpz_class f, r;
    mpz_fac_ui(f.get_mpz_t(), n);
    mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), p);
    return rational(r);
}

}  // namespace weierdiv
