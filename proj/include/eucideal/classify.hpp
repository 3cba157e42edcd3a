#pragma once

#include <string>
#include <vector>

#include "eucideal/lattice.hpp"

namespace eucideal {

struct candidate_report {
    frac_ideal ideal;
    std::string subcase;  // splitting pattern annotation, e.g. "2 ramified, d = 1 (mod 4)"
    cover_kind verdict;
    Rat covering_radius_sq;
    Rat disk_radius_sq;
    bool generates_class_group;

    bool operator==(const candidate_report& o) const;
};

enum class conclusion_kind { has_euclidean_ideal, no_euclidean_ideal, inconclusive };

/*
 * Per-field outcome.  has_euclidean_ideal iff some candidate is covered and
 * its class generates the class group (the witness is then norm-Euclidean);
 * no_euclidean_ideal iff every candidate is open_gap or fails to generate
 * (vacuously true when 2 and 3 are both inert); otherwise inconclusive.
 */
struct field_verdict {
    long d = 0;
    long class_number = 0;
    std::vector<candidate_report> candidates;
    conclusion_kind conclusion = conclusion_kind::no_euclidean_ideal;

    bool norm_euclidean() const { return conclusion == conclusion_kind::has_euclidean_ideal; }
    bool operator==(const field_verdict& o) const;
};

/*
 * Ideals whose classes can possibly be Euclidean: for d not in {1, 3} the
 * degree one primes over 2 and 3, one of each Galois-conjugate pair (the
 * conjugate has the mirror lattice and the inverse class, so the same
 * verdict); for d in {1, 3} the ring itself.
 */
std::vector<frac_ideal> candidate_classes(const quad_field& f);

// splitting-pattern annotation for a candidate, derivable from (field, ideal)
std::string candidate_subcase(const quad_field& f, const frac_ideal& C);

field_verdict classify_field(long d);  // throws not_squarefree

// all squarefree d <= d_max, in order; classification runs across a small
// thread pool, results merged in d order
std::vector<field_verdict> classify_range(long d_max, unsigned threads = 0);

std::vector<long> squarefree_up_to(long d_max);

const char* conclusion_name(conclusion_kind c);

}  // namespace eucideal
