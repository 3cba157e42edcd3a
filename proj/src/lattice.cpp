#include "eucideal/lattice.hpp"

#include <algorithm>

#include "eucideal/errors.hpp"

namespace eucideal {

planar_lattice lattice_of_ideal(const frac_ideal& I) {
    auto [w1, w2] = I.module_basis();
    return {I.field(), embed(w1), embed(w2)};
}

static Rat basis_det(const planar_lattice& L) {
    return Rat(L.v1.p * L.v2.q - L.v2.p * L.v1.q);
}

// Lagrange-Gauss: shortest basis up to signs and ties
static void lagrange_reduce(const quad_field& f, plane_point& v1, plane_point& v2) {
    while (true) {
        if (norm_sq(f, v1) > norm_sq(f, v2)) std::swap(v1, v2);
        Rat mu = dot(f, v1, v2) / norm_sq(f, v1);
        Int r = rat_round(mu);
        if (r == 0) break;
        v2 = v2 - Rat(r) * v1;
        if (norm_sq(f, v2) >= norm_sq(f, v1)) break;
    }
    if (norm_sq(f, v1) > norm_sq(f, v2)) std::swap(v1, v2);
}

// enumeration core against an already-reduced basis
static std::vector<lattice_point> enumerate_disk(const quad_field& f, const plane_point& v1,
                                                 const plane_point& v2, const plane_point& center,
                                                 const Rat& r_sq) {
    std::vector<lattice_point> out;
    if (r_sq < 0) return out;
    Rat g11 = norm_sq(f, v1), g22 = norm_sq(f, v2), g12 = dot(f, v1, v2);
    Rat det_gram = g11 * g22 - g12 * g12;  // > 0 for independent basis

    // coefficients of the center in the basis
    Rat det = Rat(v1.p * v2.q - v2.p * v1.q);
    Rat beta = Rat(v1.p * center.q - v1.q * center.p) / det;

    // |y - beta|^2 <= r_sq * g11 / det_gram bounds the v2-coefficient
    Rat y_spread_sq = r_sq * g11 / det_gram;
    Int yw = floor_sqrt(y_spread_sq) + 1;
    Int ylo = rat_floor(beta) - yw, yhi = rat_ceil(beta) + yw;

    for (Int y = ylo; y <= yhi; ++y) {
        plane_point u = Rat(y) * v2 - center;      // v = x*v1 + u
        Rat bx = dot(f, v1, u);
        Rat uu = norm_sq(f, u);
        // g11 x^2 + 2 bx x + uu <= r_sq
        Rat discx = bx * bx - g11 * (uu - r_sq);
        if (discx < 0) continue;
        Rat xc = Rat(-bx / g11);
        Int xw = floor_sqrt(Rat(discx / (g11 * g11))) + 1;
        Int xlo = rat_floor(xc) - xw, xhi = rat_ceil(xc) + xw;
        for (Int x = xlo; x <= xhi; ++x) {
            Rat d2 = Rat(g11 * x * x + 2 * (bx * x) + uu);
            if (d2 > r_sq) continue;
            plane_point pt = Rat(x) * v1 + Rat(y) * v2;
            out.push_back({x, y, pt, d2});
        }
    }
    return out;
}

planar_lattice reduce_basis(const planar_lattice& L) {
    if (basis_det(L) == 0) throw degenerate_lattice();
    plane_point v1 = L.v1, v2 = L.v2;
    lagrange_reduce(L.field, v1, v2);

    /*
     * Canonicalize over all shortest pairs.  Every candidate for either
     * basis vector has norm <= norm_sq(v2), a finite set; pick v1 as the
     * lex-least positive representative of the first minimum, then v2 as
     * the lex-least second-minimum vector with dot(v1, v2) <= 0.
     */
    Rat n2 = norm_sq(L.field, v2);
    auto shells = enumerate_disk(L.field, v1, v2, plane_point{Rat(0), Rat(0)}, n2);

    Rat n1 = norm_sq(L.field, v1);
    std::optional<plane_point> best1;
    for (const auto& c : shells) {
        if (c.dist_sq != n1) continue;
        plane_point cand = is_positive(c.pt) ? c.pt : -c.pt;
        if (!best1 || lex_less(cand, *best1)) best1 = cand;
    }
    v1 = *best1;

    // second minimum: smallest norm among vectors independent of v1
    std::optional<Rat> m2;
    for (const auto& c : shells) {
        if (c.dist_sq == 0) continue;
        if (Rat(c.pt.p * v1.q - v1.p * c.pt.q) == 0) continue;  // parallel
        if (!m2 || c.dist_sq < *m2) m2 = c.dist_sq;
    }
    std::optional<plane_point> best2;
    for (const auto& c : shells) {
        if (!(c.dist_sq == *m2)) continue;
        if (Rat(c.pt.p * v1.q - v1.p * c.pt.q) == 0) continue;
        if (dot(L.field, v1, c.pt) > 0) continue;
        if (!best2 || lex_less(c.pt, *best2)) best2 = c.pt;
    }
    v2 = *best2;
    return {L.field, v1, v2};
}

std::vector<lattice_point> points_in_disk(const planar_lattice& L, const plane_point& center,
                                          const Rat& r_sq) {
    planar_lattice R = reduce_basis(L);
    return enumerate_disk(R.field, R.v1, R.v2, center, r_sq);
}

std::vector<lattice_point> points_in_disk_reduced(const planar_lattice& L, const plane_point& center,
                                                  const Rat& r_sq) {
    return enumerate_disk(L.field, L.v1, L.v2, center, r_sq);
}

// circumcenter of the triangle (0, A, B): 2<c,A> = |A|^2, 2<c,B> = |B|^2
static plane_point circumcenter(const quad_field& f, const plane_point& A, const plane_point& B) {
    Rat d(f.d);
    Rat a11 = Rat(2 * A.p), a12 = Rat(2 * d * A.q);
    Rat a21 = Rat(2 * B.p), a22 = Rat(2 * d * B.q);
    Rat r1 = norm_sq(f, A), r2 = norm_sq(f, B);
    Rat det = a11 * a22 - a12 * a21;
    if (det == 0) throw degenerate_lattice();
    Rat cp = Rat((r1 * a22 - r2 * a12) / det);
    Rat cq = Rat((a11 * r2 - a21 * r1) / det);
    return {cp, cq};
}

covering_result covering_radius_sq(const planar_lattice& L) {
    planar_lattice R = reduce_basis(L);
    plane_point diag = R.v1 + R.v2;
    plane_point c1 = circumcenter(R.field, R.v1, diag);
    plane_point c2 = circumcenter(R.field, R.v2, diag);
    Rat r1 = norm_sq(R.field, c1), r2 = norm_sq(R.field, c2);
    if (r1 > r2) return {r1, c1};
    if (r2 > r1) return {r2, c2};
    return {r1, lex_less(c1, c2) ? c1 : c2};
}

cvp_result closest_vector(const planar_lattice& L, const plane_point& z) {
    planar_lattice R = reduce_basis(L);
    const quad_field& f = R.field;

    // Babai rounding gives a radius that certainly contains the answer
    Rat det = Rat(R.v1.p * R.v2.q - R.v2.p * R.v1.q);
    Rat alpha = Rat(z.p * R.v2.q - z.q * R.v2.p) / det;
    Rat beta = Rat(R.v1.p * z.q - R.v1.q * z.p) / det;
    plane_point guess = Rat(rat_round(alpha)) * R.v1 + Rat(rat_round(beta)) * R.v2;
    Rat r_sq = norm_sq(f, guess - z);

    std::optional<cvp_result> best;
    for (const auto& c : enumerate_disk(f, R.v1, R.v2, z, r_sq)) {
        if (!best || c.dist_sq < best->dist_sq ||
            (c.dist_sq == best->dist_sq && lex_less(c.pt, best->point)))
            best = cvp_result{c.pt, c.dist_sq};
    }
    return *best;
}

cover_verdict covering_verdict(const frac_ideal& C) {
    covering_result cov = covering_radius_sq(lattice_of_ideal(C));
    Rat disk = C.norm();
    cover_verdict v{cover_kind::covered, std::nullopt, cov.radius_sq, disk};
    if (cov.radius_sq < disk) return v;
    v.kind = cov.radius_sq == disk ? cover_kind::boundary_touch : cover_kind::open_gap;
    v.witness = cov.deep_hole;
    return v;
}

const char* cover_kind_name(cover_kind k) {
    switch (k) {
        case cover_kind::covered: return "Covered";
        case cover_kind::boundary_touch: return "BoundaryTouch";
        case cover_kind::open_gap: return "OpenGap";
    }
    return "?";
}

}  // namespace eucideal
