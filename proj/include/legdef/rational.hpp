#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace legdef {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Exact k-th root of a rational, if one exists.
// Returns false when numerator or denominator is not a perfect k-th power.
inline bool rat_kth_root(const Rat& u, int k, Rat& out) {
    if (k <= 0) throw std::invalid_argument("k-th root needs k >= 1");
    mpz_class num = u.get_num(), den = u.get_den();
    bool neg = num < 0;
    if (neg) {
        if (k % 2 == 0) return false;
        num = -num;
    }
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
    if (neg) rn = -rn;
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

}  // namespace legdef
