#pragma once

#include <string>
#include <vector>

#include "eucideal/ideal.hpp"

namespace eucideal {

/*
 * Positive-definite binary quadratic form a x^2 + b xy + c y^2 of
 * discriminant b^2 - 4ac = disc(field).  Reduced means |b| <= a <= c with
 * b >= 0 whenever |b| = a or a = c; reduced forms index ideal classes.
 */
struct quad_form {
    Int a, b, c;

    Int disc() const { return Int(b * b - 4 * a * c); }
    std::string str() const;

    bool operator==(const quad_form& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const quad_form& o) const { return !(*this == o); }
    bool operator<(const quad_form& o) const;
};

quad_form reduce_form(quad_form f);
quad_form principal_form(const quad_field& f);
std::vector<quad_form> reduced_forms(const quad_field& f);  // sorted
long class_number(const quad_field& f);

// class label of a fractional ideal; principal ideals map to principal_form
quad_form ideal_class(const frac_ideal& I);
// primitive integral ideal whose class is the given form
frac_ideal ideal_of_form(const quad_field& f, const quad_form& form);

// group law on class labels, computed through the ideal correspondence
quad_form compose(const quad_field& f, const quad_form& x, const quad_form& y);
quad_form class_inverse(const quad_form& x);
quad_form class_pow(const quad_field& f, const quad_form& x, long e);
long class_order(const quad_field& f, const quad_form& x);

}  // namespace eucideal
