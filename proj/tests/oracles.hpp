#pragma once

// Test-only oracles, independent of the exact code paths they check.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "eucideal/class_group.hpp"
#include "eucideal/ideal.hpp"
#include "eucideal/lattice.hpp"

namespace oracles {

using namespace eucideal;

// -------- element arithmetic via real/imaginary rational coordinates --------

// multiply through (x + y*sqrt(-d)) coordinates instead of the (1, omega) basis
inline field_element mul_oracle(const field_element& a, const field_element& b) {
    const quad_field& f = a.field;
    auto to_xy = [&](const field_element& e) {
        plane_point p = embed(e);
        return std::pair<Rat, Rat>(p.p, p.q);  // value is x + y*sqrt(d)*i
    };
    auto [x1, y1] = to_xy(a);
    auto [x2, y2] = to_xy(b);
    Rat x = Rat(x1 * x2 - f.d * (y1 * y2));
    Rat y = Rat(x1 * y2 + x2 * y1);
    // back to u + v*omega
    if (f.omega == omega_kind::sqrt_d) return make_elem(f, x, y);
    return make_elem(f, Rat(x - y), Rat(2 * y));
}

// -------- ideal norm by counting residues --------

// |O_K / I| for integral I, counted by pairwise congruence over a box that
// contains a full set of residues
inline long residue_count_oracle(const frac_ideal& I) {
    long m = (long)I.norm().get_num().get_si();  // box side; index = scale^2 * a
    if (m < 1) return -1;
    std::vector<field_element> box;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) box.push_back(make_elem(I.field(), Rat(x), Rat(y)));
    std::vector<field_element> reps;
    for (const auto& e : box) {
        bool seen = false;
        for (const auto& r : reps)
            if (I.contains(e - r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(e);
    }
    // the box is m x m but residues repeat with period dividing m in each
    // coordinate only if m is a multiple of the elementary divisors; m = index
    // always works since both divisors divide it
    return (long)reps.size();
}

// -------- covering radius by floating-point sampling --------

struct sampled_lattice {
    double v1x, v1y, v2x, v2y;  // real-plane basis
    double inv[4];              // inverse of the basis matrix
};

inline sampled_lattice sample_basis(const planar_lattice& L) {
    double sd = std::sqrt((double)L.field.d);
    sampled_lattice s{};
    s.v1x = L.v1.p.get_d();
    s.v1y = L.v1.q.get_d() * sd;
    s.v2x = L.v2.p.get_d();
    s.v2y = L.v2.q.get_d() * sd;
    double det = s.v1x * s.v2y - s.v2x * s.v1y;
    s.inv[0] = s.v2y / det;
    s.inv[1] = -s.v2x / det;
    s.inv[2] = -s.v1y / det;
    s.inv[3] = s.v1x / det;
    return s;
}

inline double min_dist_sq(const sampled_lattice& s, double x, double y) {
    double a = s.inv[0] * x + s.inv[1] * y;
    double b = s.inv[2] * x + s.inv[3] * y;
    double ra = std::floor(a + 0.5), rb = std::floor(b + 0.5);
    double best = 1e300;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) {
            double px = (ra + i) * s.v1x + (rb + j) * s.v2x - x;
            double py = (ra + i) * s.v1y + (rb + j) * s.v2y - y;
            double d2 = px * px + py * py;
            if (d2 < best) best = d2;
        }
    return best;
}

/*
 * Fine-grid estimate of the squared covering radius: coarse grid over the
 * fundamental parallelogram, then shrinking-grid refinement around the best
 * seeds.  Good to ~1e-12 relative on these lattices.
 */
inline double covering_radius_sq_estimate(const planar_lattice& L0) {
    planar_lattice L = reduce_basis(L0);
    sampled_lattice s = sample_basis(L);

    struct seed {
        double val, x, y;
    };
    std::vector<seed> seeds;
    const int n = 96;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double a = (double)i / n, b = (double)j / n;
            double x = a * s.v1x + b * s.v2x, y = a * s.v1y + b * s.v2y;
            seeds.push_back({min_dist_sq(s, x, y), x, y});
        }
    std::sort(seeds.begin(), seeds.end(), [](const seed& a, const seed& b) { return a.val > b.val; });
    seeds.resize(12);

    double scale = std::sqrt(std::max(s.v1x * s.v1x + s.v1y * s.v1y,
                                      s.v2x * s.v2x + s.v2y * s.v2y));
    double best = 0;
    for (const auto& sd : seeds) {
        double cx = sd.x, cy = sd.y, val = sd.val;
        double h = 2.0 * scale / 96;
        for (int it = 0; it < 90; ++it) {
            double nx = cx, ny = cy;
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j) {
                    double x = cx + h * i / 3, y = cy + h * j / 3;
                    double v = min_dist_sq(s, x, y);
                    if (v > val) {
                        val = v;
                        nx = x;
                        ny = y;
                    }
                }
            cx = nx;
            cy = ny;
            h *= 0.7;
        }
        if (val > best) best = val;
    }
    return best;
}

// -------- exact exhaustive-box closest vector --------

struct box_cvp {
    plane_point point;
    Rat dist_sq;
    bool certified;  // the box provably contained every candidate
};

inline box_cvp cvp_box_oracle(const planar_lattice& L0, const plane_point& z) {
    planar_lattice L = reduce_basis(L0);
    const quad_field& f = L.field;
    Rat det = Rat(L.v1.p * L.v2.q - L.v2.p * L.v1.q);
    Rat alpha = Rat(z.p * L.v2.q - z.q * L.v2.p) / det;
    Rat beta = Rat(L.v1.p * z.q - L.v1.q * z.p) / det;
    Int x0 = rat_round(alpha), y0 = rat_round(beta);

    const int W = 6;
    std::optional<box_cvp> best;
    for (Int x = x0 - W; x <= x0 + W; ++x)
        for (Int y = y0 - W; y <= y0 + W; ++y) {
            plane_point pt = Rat(x) * L.v1 + Rat(y) * L.v2;
            Rat d2 = norm_sq(f, pt - z);
            if (!best || d2 < best->dist_sq ||
                (d2 == best->dist_sq && lex_less(pt, best->point)))
                best = box_cvp{pt, d2, false};
        }

    // certify: every lattice point within dist_sq of z has coefficients in
    // [alpha - wx, alpha + wx] x [beta - wy, beta + wy]
    Rat g11 = norm_sq(f, L.v1), g22 = norm_sq(f, L.v2), g12 = dot(f, L.v1, L.v2);
    Rat detg = Rat(g11 * g22 - g12 * g12);
    Int wx = floor_sqrt(Rat(best->dist_sq * g22 / detg)) + 1;
    Int wy = floor_sqrt(Rat(best->dist_sq * g11 / detg)) + 1;
    best->certified = (rat_ceil(alpha) + wx <= x0 + W) && (rat_floor(alpha) - wx >= x0 - W) &&
                      (rat_ceil(beta) + wy <= y0 + W) && (rat_floor(beta) - wy >= y0 - W);
    return *best;
}

// -------- randomness helpers --------

inline long rnd_long(std::mt19937_64& g, long lo, long hi) {
    return (long)(lo + (long long)(g() % (unsigned long long)(hi - lo + 1)));
}

inline quad_field random_field(std::mt19937_64& g, long dmax = 60) {
    while (true) {
        long d = rnd_long(g, 1, dmax);
        if (is_squarefree(d)) return make_field(d);
    }
}

inline Rat random_rat(std::mt19937_64& g, long num_range = 12, long den_range = 6) {
    return make_rat(Int(rnd_long(g, -num_range, num_range)), Int(rnd_long(g, 1, den_range)));
}

inline field_element random_element(std::mt19937_64& g, const quad_field& f) {
    return make_elem(f, random_rat(g), random_rat(g));
}

inline field_element random_nonzero_element(std::mt19937_64& g, const quad_field& f) {
    while (true) {
        field_element e = random_element(g, f);
        if (!e.is_zero()) return e;
    }
}

inline frac_ideal random_integral_ideal(std::mt19937_64& g, const quad_field& f, long max_norm) {
    while (true) {
        Int n(rnd_long(g, 1, max_norm));
        auto ideals = integral_ideals_of_norm(f, n);
        if (!ideals.empty()) return ideals[g() % ideals.size()];
    }
}

inline frac_ideal random_fractional_ideal(std::mt19937_64& g, const quad_field& f, long max_norm) {
    frac_ideal I = random_integral_ideal(g, f, max_norm);
    if (g() % 2) I = I * random_integral_ideal(g, f, 8).inverse();
    return I;
}

}  // namespace oracles
