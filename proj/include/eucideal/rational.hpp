#pragma once

#include <gmpxx.h>

#include <string>

#include "eucideal/errors.hpp"

namespace eucideal {

using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form, den > 0
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// nearest integer, ties toward +infinity
inline Int rat_round(const Rat& q) {
    Rat shifted = q + make_rat(1, 2);
    return rat_floor(shifted);
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/*
 * floor(sqrt(q)) for rational q >= 0.  With N = num*den and s = isqrt(N),
 * sqrt(q) = sqrt(N)/den and no integer lies in (s/den, sqrt(N)/den], so
 * floor(sqrt(q)) = floor(s/den).
 */
inline Int floor_sqrt(const Rat& q) {
    Int nd = q.get_num() * q.get_den();
    Int s = isqrt(nd);
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

// always "num/den", including den = 1
inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw io_error("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw io_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace eucideal
