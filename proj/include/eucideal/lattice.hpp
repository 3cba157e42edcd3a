#pragma once

#include <optional>
#include <vector>

#include "eucideal/ideal.hpp"

namespace eucideal {

/* Rank-2 lattice in the plane, basis points in (p, q) coordinates. */
struct planar_lattice {
    quad_field field;
    plane_point v1, v2;
};

planar_lattice lattice_of_ideal(const frac_ideal& I);

/*
 * Canonical reduced basis of the same lattice: norm_sq(v1) <= norm_sq(v2)
 * <= norm_sq(v1 +- v2), dot(v1, v2) <= 0, and a deterministic choice among
 * the finitely many bases satisfying this.  Throws degenerate_lattice.
 */
planar_lattice reduce_basis(const planar_lattice& L);

struct lattice_point {
    Int x, y;        // coefficients in the (reduced) basis used for the search
    plane_point pt;  // x*v1 + y*v2
    Rat dist_sq;     // exact squared distance to the query center
};

// all lattice points in the closed disk of squared radius r_sq around center;
// ordered by (y, x) coefficient, against the reduced basis of L
std::vector<lattice_point> points_in_disk(const planar_lattice& L, const plane_point& center,
                                          const Rat& r_sq);

// same, trusting that L already carries a reduced basis
std::vector<lattice_point> points_in_disk_reduced(const planar_lattice& L, const plane_point& center,
                                                  const Rat& r_sq);

struct covering_result {
    Rat radius_sq;         // exact squared covering radius
    plane_point deep_hole; // a point attaining it
};

/*
 * Exact squared covering radius via the obtuse superbase (v1, v2, -v1-v2)
 * of the reduced basis: the maximum squared circumradius of the triangles
 * (0, v1, v1+v2) and (0, v2, v1+v2).
 */
covering_result covering_radius_sq(const planar_lattice& L);

struct cvp_result {
    plane_point point;
    Rat dist_sq;
};

// exact closest lattice point; ties broken toward the lexicographically
// smallest (p, q)
cvp_result closest_vector(const planar_lattice& L, const plane_point& z);

enum class cover_kind { covered, boundary_touch, open_gap };

/*
 * Three-way comparison of the squared covering radius of the ideal lattice
 * against Nm(C), the squared radius of the norm disks.  covered certifies a
 * norm-Euclidean ideal; open_gap certifies the complement of the disk union
 * contains an open set, so no Euclidean algorithm exists for C at all;
 * boundary_touch decides nothing.
 */
struct cover_verdict {
    cover_kind kind;
    std::optional<plane_point> witness;  // deep hole, present unless covered
    Rat covering_radius_sq;
    Rat disk_radius_sq;  // Nm(C)
};

cover_verdict covering_verdict(const frac_ideal& C);

const char* cover_kind_name(cover_kind k);

}  // namespace eucideal
