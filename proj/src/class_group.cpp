#include "eucideal/class_group.hpp"

#include "eucideal/errors.hpp"

namespace eucideal {

std::string quad_form::str() const {
    return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

bool quad_form::operator<(const quad_form& o) const {
    int r = cmp(a, o.a);
    if (r != 0) return r < 0;
    r = cmp(b, o.b);
    if (r != 0) return r < 0;
    return cmp(c, o.c) < 0;
}

static void normalize(quad_form& f) {
    // shift b by multiples of 2a into (-a, a], keeping the discriminant
    Int two_a = 2 * f.a;
    Int k;  // k = ceil((b - a)/(2a)), then b - 2ak lies in (-a, a]
    mpz_cdiv_q(k.get_mpz_t(), Int(f.b - f.a).get_mpz_t(), two_a.get_mpz_t());
    Int disc = f.disc();
    f.b -= two_a * k;
    f.c = (f.b * f.b - disc) / (4 * f.a);
}

quad_form reduce_form(quad_form f) {
    if (f.a <= 0 || f.disc() >= 0) throw invariant_violation("not a positive-definite form");
    normalize(f);
    while (f.a > f.c) {
        f = quad_form{f.c, Int(-f.b), f.a};
        normalize(f);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

quad_form principal_form(const quad_field& f) {
    return reduce_form(quad_form{Int(1), Int(f.omega_trace()), f.omega_norm()});
}

std::vector<quad_form> reduced_forms(const quad_field& f) {
    Int disc(f.disc);
    std::vector<quad_form> out;
    Int amax = floor_sqrt(make_rat(-disc, 3));
    for (Int a = 1; a <= amax; ++a)
        for (Int b = 1 - a; b <= a; ++b) {
            if (mod_floor(Int(b - disc), Int(2)) != 0) continue;
            Int num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            out.push_back(quad_form{a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

long class_number(const quad_field& f) { return (long)reduced_forms(f).size(); }

quad_form ideal_class(const frac_ideal& I) {
    // form Nm(a x + (b+omega) y) / a of the primitive part
    const quad_field& f = I.field();
    Int a = I.a(), b = I.b();
    Int bf = 2 * b + f.omega_trace();
    Int cf = Int(b * b + f.omega_trace() * b + f.omega_norm()) / a;
    return reduce_form(quad_form{a, bf, cf});
}

frac_ideal ideal_of_form(const quad_field& f, const quad_form& form) {
    if (form.disc() != f.disc) throw invariant_violation("form discriminant does not match field");
    Int b = mod_floor(Int((form.b - f.omega_trace()) / 2), form.a);
    return frac_ideal::from_parts(f, Rat(1), form.a, b);
}

quad_form compose(const quad_field& f, const quad_form& x, const quad_form& y) {
    return ideal_class(ideal_of_form(f, x) * ideal_of_form(f, y));
}

quad_form class_inverse(const quad_form& x) {
    return reduce_form(quad_form{x.a, Int(-x.b), x.c});
}

quad_form class_pow(const quad_field& f, const quad_form& x, long e) {
    quad_form base = e < 0 ? class_inverse(x) : x;
    if (e < 0) e = -e;
    quad_form acc = principal_form(f);
    for (long i = 0; i < e; ++i) acc = compose(f, acc, base);
    return acc;
}

long class_order(const quad_field& f, const quad_form& x) {
    quad_form id = principal_form(f);
    quad_form acc = x;
    long k = 1;
    while (acc != id) {
        acc = compose(f, acc, x);
        ++k;
        if (k > 1000000) throw invariant_violation("class order runaway");
    }
    return k;
}

}  // namespace eucideal
