#include "eucideal/ideal.hpp"

#include <algorithm>

#include "eucideal/errors.hpp"

namespace eucideal {

static Int norm_b_plus_omega(const quad_field& f, const Int& b) {
    // Nm(b + omega) = b^2 + t*b + n
    return Int(b * b + f.omega_trace() * b + f.omega_norm());
}

/*
 * Hermite form of the Z-module spanned by integer vectors (u, v) over the
 * basis (1, omega): module = A Z + (B + c omega) Z with A, c > 0.  The
 * caller reduces B mod A after splitting off the content c.  Rank < 2
 * raises zero_ideal.
 */
static void hnf2(const std::vector<std::pair<Int, Int>>& gens, Int& A, Int& B, Int& c) {
    // accumulate gcd of omega-coordinates together with an achieving vector
    Int cu = 0, cv = 0;
    for (const auto& [u, v] : gens) {
        if (v == 0) continue;
        if (cv == 0) {
            cu = u;
            cv = v;
            continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cv.get_mpz_t(), v.get_mpz_t());
        cu = s * cu + t * u;
        cv = g;
    }
    if (cv < 0) {
        cu = -cu;
        cv = -cv;
    }
    if (cv == 0) throw zero_ideal();
    // reduce every generator to omega-coordinate zero and gcd the remainders
    Int A_acc = 0;
    for (const auto& [u, v] : gens) {
        Int q = v / cv;
        Int r = u - q * cu;
        mpz_gcd(A_acc.get_mpz_t(), A_acc.get_mpz_t(), r.get_mpz_t());
    }
    if (A_acc == 0) throw zero_ideal();
    A = A_acc;
    B = cu;
    c = cv;
}

frac_ideal frac_ideal::from_generators(const quad_field& f, const std::vector<field_element>& gens) {
    std::vector<std::pair<Rat, Rat>> coords;
    for (const auto& g : gens) {
        if (g.field != f) throw field_mismatch();
        if (g.is_zero()) continue;
        field_element wg = omega_of(f) * g;
        coords.emplace_back(g.u, g.v);
        coords.emplace_back(wg.u, wg.v);
    }
    if (coords.empty()) throw zero_ideal();

    Int den = 1;
    for (const auto& [u, v] : coords) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), u.get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<std::pair<Int, Int>> igens;
    igens.reserve(coords.size());
    for (const auto& [u, v] : coords) {
        Rat su = u * den, sv = v * den;
        igens.emplace_back(su.get_num(), sv.get_num());
    }

    Int A, B, c;
    hnf2(igens, A, B, c);
    // an O_K-module has c | A and c | B; split off the content c
    if (A % c != 0 || B % c != 0)
        throw invariant_violation("module closed under omega must have c | A, c | B");
    frac_ideal I;
    I.field_ = f;
    I.a_ = A / c;
    I.b_ = mod_floor(B / c, I.a_);
    I.scale_ = make_rat(c, den);
    if (norm_b_plus_omega(f, I.b_) % I.a_ != 0)
        throw invariant_violation("normal form fails a | Nm(b+omega)");
    return I;
}

frac_ideal frac_ideal::ring(const quad_field& f) {
    frac_ideal I;
    I.field_ = f;
    return I;
}

frac_ideal frac_ideal::principal(const field_element& g) {
    return from_generators(g.field, {g});
}

frac_ideal frac_ideal::from_parts(const quad_field& f, const Rat& scale, const Int& a, const Int& b) {
    if (scale <= 0 || a <= 0 || b < 0 || b >= a || norm_b_plus_omega(f, b) % a != 0)
        throw invariant_violation("not a valid ideal normal form");
    frac_ideal I;
    I.field_ = f;
    I.scale_ = scale;
    I.a_ = a;
    I.b_ = b;
    return I;
}

bool frac_ideal::contains(const field_element& e) const {
    if (e.field != field_) throw field_mismatch();
    // e = scale*(x*a + y*(b+omega)) with x, y integers
    Rat y = e.v / scale_;
    if (!is_integer(y)) return false;
    Rat x = (e.u / scale_ - b_ * y) / a_;
    return is_integer(x);
}

std::pair<field_element, field_element> frac_ideal::module_basis() const {
    field_element w1 = make_elem(field_, Rat(scale_ * a_), Rat(0));
    field_element w2 = make_elem(field_, Rat(scale_ * b_), scale_);
    return {w1, w2};
}

frac_ideal frac_ideal::conjugate() const {
    frac_ideal I = *this;
    I.b_ = mod_floor(Int(-b_ - field_.omega_trace()), a_);
    return I;
}

frac_ideal frac_ideal::inverse() const {
    // I * conj(I) = Nm(I) * O_K, so I^{-1} = conj(I) / Nm(I)
    frac_ideal I = conjugate();
    I.scale_ = Rat(1 / (scale_ * a_));
    return I;
}

frac_ideal operator*(const frac_ideal& x, const frac_ideal& y) {
    if (x.field_ != y.field_) throw field_mismatch();
    auto [x1, x2] = x.module_basis();
    auto [y1, y2] = y.module_basis();
    return frac_ideal::from_generators(x.field_, {x1 * y1, x1 * y2, x2 * y1, x2 * y2});
}

frac_ideal operator*(const frac_ideal& I, const field_element& g) {
    auto [w1, w2] = I.module_basis();
    return frac_ideal::from_generators(I.field(), {w1 * g, w2 * g});
}

bool operator==(const frac_ideal& x, const frac_ideal& y) {
    return x.field_ == y.field_ && x.scale_ == y.scale_ && x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const frac_ideal& x, const frac_ideal& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    c = cmp(x.b_, y.b_);
    if (c != 0) return c < 0;
    return cmp(x.scale_, y.scale_) < 0;
}

std::string frac_ideal::key() const {
    return rat_str(scale_) + "|" + a_.get_str() + "|" + b_.get_str();
}

std::string frac_ideal::str() const {
    std::string prim = "[" + a_.get_str() + ", " +
                       make_elem(field_, Rat(b_), Rat(1)).str() + "]";
    if (scale_ == 1) return prim;
    return scale_.get_str() + "*" + prim;
}

std::vector<field_element> quotient_reps(const frac_ideal& I, const frac_ideal& C) {
    if (I.field() != C.field()) throw field_mismatch();
    auto [w1, w2] = I.module_basis();
    auto [c1, c2] = C.module_basis();

    // columns of M express C's basis in I's basis; C subset I iff M integral
    auto coords_in_I = [&](const field_element& e, Rat& x, Rat& y) {
        y = e.v / I.scale();
        x = (e.u / I.scale() - I.b() * y) / I.a();
    };
    Rat m11, m21, m12, m22;
    coords_in_I(c1, m11, m21);
    coords_in_I(c2, m12, m22);
    if (!is_integer(m11) || !is_integer(m21) || !is_integer(m12) || !is_integer(m22))
        throw not_submodule();

    // unimodular column reduction; the quotient is (Z/d1) x (Z/d2) in I's basis
    Int a1 = m11.get_num(), b1 = m21.get_num();
    Int a2 = m12.get_num(), b2 = m22.get_num();
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
    Int d1 = abs(Int((b2 / g) * a1 - (b1 / g) * a2));  // column with bottom coordinate 0
    Int d2 = abs(g);
    if (d1 == 0 || d2 == 0) throw invariant_violation("quotient of equal-rank modules is finite");

    std::vector<field_element> reps;
    for (Int j = 0; j < d2; ++j)
        for (Int i = 0; i < d1; ++i) {
            field_element r = make_elem(I.field(), Rat(i), Rat(0)) * w1 +
                              make_elem(I.field(), Rat(j), Rat(0)) * w2;
            reps.push_back(r);
        }
    return reps;
}

std::vector<prime_factor> primes_above(const quad_field& f, long p) {
    if (!is_prime(Int(p))) throw not_prime(p);
    Int t(f.omega_trace());
    Int n = f.omega_norm();
    std::vector<Int> roots;
    for (Int r = 0; r < p; ++r)
        if (mod_floor(Int(r * r - t * r + n), Int(p)) == 0) roots.push_back(r);

    std::vector<prime_factor> out;
    if (roots.empty()) {
        out.push_back({frac_ideal::principal(from_int(f, p)), 2});
        return out;
    }
    for (const Int& r : roots) {
        field_element gen = make_elem(f, Rat(-r), Rat(1));  // omega - r
        out.push_back({frac_ideal::from_generators(f, {from_int(f, p), gen}), 1});
    }
    std::sort(out.begin(), out.end(),
              [](const prime_factor& x, const prime_factor& y) { return x.ideal < y.ideal; });
    return out;
}

std::optional<field_element> is_principal(const frac_ideal& I) {
    // search x*a + y*(b+omega) of norm a in the primitive part; with
    // u = x*a + y*b the norm is u^2 + t*u*y + n*y^2 = a, so
    // (2u + t*y)^2 = 4a - |disc| y^2 must be a perfect square.
    const quad_field& f = I.field();
    Int a = I.a(), b = I.b();
    Int t(f.omega_trace());
    Int disc_abs(-f.disc);
    Int ybound = floor_sqrt(make_rat(4 * a, disc_abs)) + 1;

    std::optional<field_element> best;
    for (Int y = -ybound; y <= ybound; ++y) {
        Int rhs = 4 * a - disc_abs * y * y;
        if (rhs < 0 || !is_square(rhs)) continue;
        Int s = isqrt(rhs);
        for (int sign : {1, -1}) {
            Int num = sign * s - t * y;
            if (mod_floor(num, Int(2)) != 0) continue;
            Int u = num / 2;
            if (mod_floor(Int(u - y * b), a) != 0) continue;  // x must be integral
            field_element g = make_elem(f, Rat(u), Rat(y));
            if (norm(g) != a) continue;
            // canonical sign
            if (g.u < 0 || (g.u == 0 && g.v < 0)) g = -g;
            if (!best || lex_less(embed(g), embed(*best))) best = g;
        }
    }
    if (!best) return std::nullopt;
    return I.scale() * *best;
}

std::vector<frac_ideal> integral_ideals_of_norm(const quad_field& f, const Int& n) {
    std::vector<frac_ideal> out;
    if (n < 1) return out;
    for (Int g = 1; g * g <= n; ++g) {
        if (n % (g * g) != 0) continue;
        Int a = n / (g * g);
        for (Int b = 0; b < a; ++b)
            if (norm_b_plus_omega(f, b) % a == 0)
                out.push_back(frac_ideal::from_parts(f, Rat(g), a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<frac_ideal> integral_ideals_up_to(const quad_field& f, const Int& bound) {
    std::vector<frac_ideal> out;
    for (Int n = 1; n <= bound; ++n) {
        auto of_n = integral_ideals_of_norm(f, n);
        out.insert(out.end(), of_n.begin(), of_n.end());
    }
    return out;
}

}  // namespace eucideal
