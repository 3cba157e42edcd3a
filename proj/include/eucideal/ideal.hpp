#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eucideal/field.hpp"

namespace eucideal {

/*
 * Fractional ideal in normal form: scale * (a Z + (b + omega) Z) with
 * scale a positive rational, a > 0, 0 <= b < a and a | Nm(b + omega).
 * The primitive part a Z + (b + omega) Z is an integral ideal of norm a,
 * so norm() = scale^2 * a.  Equality of normalized forms is ideal equality.
 */
class frac_ideal {
  public:
    frac_ideal() = default;

    static frac_ideal from_generators(const quad_field& f, const std::vector<field_element>& gens);
    static frac_ideal ring(const quad_field& f);                    // O_K
    static frac_ideal principal(const field_element& g);
    // validated normal form (used by parsers); throws invariant_violation
    static frac_ideal from_parts(const quad_field& f, const Rat& scale, const Int& a, const Int& b);

    const quad_field& field() const { return field_; }
    const Rat& scale() const { return scale_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    Rat norm() const { return Rat(scale_ * scale_ * a_); }
    bool is_integral() const { return is_integer(scale_); }
    bool contains(const field_element& e) const;
    bool contains_ring() const { return contains(from_int(field_, 1)); }

    // Z-module basis (scale*a, scale*(b+omega)); also the ideal generators
    std::pair<field_element, field_element> module_basis() const;

    frac_ideal conjugate() const;
    frac_ideal inverse() const;  // conjugate()/norm(); I * I.inverse() = ring

    // norm of the inverse as an exact rational (integer for members of E)
    Rat inverse_norm() const { return Rat(1 / norm()); }

    std::string key() const;   // canonical hash key
    std::string str() const;   // display form, e.g. "1/2*[2, 1+w]"

    friend frac_ideal operator*(const frac_ideal& x, const frac_ideal& y);
    friend bool operator==(const frac_ideal& x, const frac_ideal& y);
    friend bool operator<(const frac_ideal& x, const frac_ideal& y);  // lexicographic on (a, b, scale)

  private:
    quad_field field_;
    Rat scale_{1};
    Int a_{1};
    Int b_{0};
};

inline bool operator!=(const frac_ideal& x, const frac_ideal& y) { return !(x == y); }

frac_ideal operator*(const frac_ideal& I, const field_element& g);

/*
 * Coset representatives of C in I, for C a submodule of I.  Exactly
 * norm(C)/norm(I) elements of I, pairwise incongruent mod C, covering all
 * cosets; 0 represents the zero coset and comes first.
 */
std::vector<field_element> quotient_reps(const frac_ideal& I, const frac_ideal& C);

struct prime_factor {
    frac_ideal ideal;
    int residue_degree;  // 1 for split/ramified factors, 2 for inert (p)
};

// factors of (p): split pair sorted by b, a single ramified prime, or inert (p)
std::vector<prime_factor> primes_above(const quad_field& f, long p);

// generator g with (g) = I, if one exists; deterministic choice
std::optional<field_element> is_principal(const frac_ideal& I);

// all integral ideals of norm exactly n / of norm <= bound, in (norm, a, b) order
std::vector<frac_ideal> integral_ideals_of_norm(const quad_field& f, const Int& n);
std::vector<frac_ideal> integral_ideals_up_to(const quad_field& f, const Int& bound);

}  // namespace eucideal
