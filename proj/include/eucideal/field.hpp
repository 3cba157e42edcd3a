#pragma once

#include <string>

#include "eucideal/rational.hpp"

namespace eucideal {

enum class omega_kind { sqrt_d, half_one_plus_sqrt_d };

/*
 * The imaginary quadratic field Q(sqrt(-d)) for squarefree d >= 1.
 * Ring of integers is Z[omega], omega = sqrt(-d) for d = 1, 2 (mod 4)
 * and omega = (1 + sqrt(-d))/2 for d = 3 (mod 4).  omega is a root of
 * x^2 - t x + n with t = omega_trace() and n = omega_norm().
 */
struct quad_field {
    long d = 0;
    long disc = 0;
    omega_kind omega = omega_kind::sqrt_d;
    int unit_count = 2;

    long omega_trace() const { return omega == omega_kind::sqrt_d ? 0 : 1; }
    Int omega_norm() const { return omega == omega_kind::sqrt_d ? Int(d) : Int((1 + d) / 4); }

    bool operator==(const quad_field& o) const { return d == o.d; }
    bool operator!=(const quad_field& o) const { return d != o.d; }
};

// throws not_squarefree
quad_field make_field(long d);

/* u + v*omega, exact rational coordinates over the integral basis (1, omega). */
struct field_element {
    quad_field field;
    Rat u, v;

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_integral() const { return is_integer(u) && is_integer(v); }
    std::string str() const;
};

field_element make_elem(const quad_field& f, const Rat& u, const Rat& v);
field_element from_int(const quad_field& f, const Int& n);
field_element omega_of(const quad_field& f);
// sqrt(-d) itself: omega, or 2*omega - 1 when omega = (1+sqrt(-d))/2
field_element sqrt_minus_d(const quad_field& f);

field_element operator+(const field_element& a, const field_element& b);
field_element operator-(const field_element& a, const field_element& b);
field_element operator-(const field_element& a);
field_element operator*(const field_element& a, const field_element& b);
field_element operator*(const Rat& s, const field_element& a);
bool operator==(const field_element& a, const field_element& b);
inline bool operator!=(const field_element& a, const field_element& b) { return !(a == b); }

field_element conj(const field_element& e);
Rat norm(const field_element& e);
// conj(e)/norm(e); throws error on zero
field_element inverse(const field_element& e);

/* The complex number p + q*sqrt(d)*i, both coordinates rational. */
struct plane_point {
    Rat p, q;
};

inline bool operator==(const plane_point& a, const plane_point& b) { return a.p == b.p && a.q == b.q; }
inline bool operator!=(const plane_point& a, const plane_point& b) { return !(a == b); }
inline plane_point operator+(const plane_point& a, const plane_point& b) {
    return {Rat(a.p + b.p), Rat(a.q + b.q)};
}
inline plane_point operator-(const plane_point& a, const plane_point& b) {
    return {Rat(a.p - b.p), Rat(a.q - b.q)};
}
inline plane_point operator-(const plane_point& a) { return {Rat(-a.p), Rat(-a.q)}; }
inline plane_point operator*(const Rat& s, const plane_point& a) {
    return {Rat(s * a.p), Rat(s * a.q)};
}

plane_point embed(const field_element& e);

// real inner product of p1 + q1*sqrt(d)i and p2 + q2*sqrt(d)i
inline Rat dot(const quad_field& f, const plane_point& a, const plane_point& b) {
    return Rat(a.p * b.p + f.d * (a.q * b.q));
}
inline Rat norm_sq(const quad_field& f, const plane_point& a) { return dot(f, a, a); }

inline bool lex_less(const plane_point& a, const plane_point& b) {
    int c = cmp(a.p, b.p);
    if (c != 0) return c < 0;
    return cmp(a.q, b.q) < 0;
}

// canonical sign: p > 0, or p = 0 and q > 0
inline bool is_positive(const plane_point& a) {
    int c = sgn(a.p);
    if (c != 0) return c > 0;
    return sgn(a.q) > 0;
}

}  // namespace eucideal
