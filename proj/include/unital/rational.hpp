#pragma once

#include <gmpxx.h>

#include <string>

#include "unital/errors.hpp"

namespace unital {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (reduced, positive denominator), which the whole library relies on for
// bit-exact equality.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_decimal(const std::string& num, const std::string& den) {
    Int n(num), d(den);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// p-adic valuation of a nonzero rational.
inline long rat_val_p(const Rat& q, unsigned long p) {
    if (q == 0) throw DivisionByZero("valuation of zero");
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), Int(p).get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), Int(p).get_mpz_t()));
    return vn - vd;
}

}  // namespace unital
