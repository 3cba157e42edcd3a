#include "eucideal/field.hpp"

#include "eucideal/errors.hpp"

namespace eucideal {

quad_field make_field(long d) {
    if (d < 1 || !is_squarefree(d)) throw not_squarefree(d);
    quad_field f;
    f.d = d;
    if (d % 4 == 3) {
        f.disc = -d;
        f.omega = omega_kind::half_one_plus_sqrt_d;
    } else {
        f.disc = -4 * d;
        f.omega = omega_kind::sqrt_d;
    }
    f.unit_count = d == 1 ? 4 : d == 3 ? 6 : 2;
    return f;
}

field_element make_elem(const quad_field& f, const Rat& u, const Rat& v) { return {f, u, v}; }

field_element from_int(const quad_field& f, const Int& n) { return {f, Rat(n), Rat(0)}; }

field_element omega_of(const quad_field& f) { return {f, Rat(0), Rat(1)}; }

field_element sqrt_minus_d(const quad_field& f) {
    if (f.omega == omega_kind::sqrt_d) return omega_of(f);
    return {f, Rat(-1), Rat(2)};
}

static void require_same_field(const field_element& a, const field_element& b) {
    if (a.field != b.field) throw field_mismatch();
}

field_element operator+(const field_element& a, const field_element& b) {
    require_same_field(a, b);
    return {a.field, Rat(a.u + b.u), Rat(a.v + b.v)};
}

field_element operator-(const field_element& a, const field_element& b) {
    require_same_field(a, b);
    return {a.field, Rat(a.u - b.u), Rat(a.v - b.v)};
}

field_element operator-(const field_element& a) { return {a.field, Rat(-a.u), Rat(-a.v)}; }

// omega^2 = t*omega - n
field_element operator*(const field_element& a, const field_element& b) {
    require_same_field(a, b);
    Int t(a.field.omega_trace());
    Int n = a.field.omega_norm();
    Rat vv = a.v * b.v;
    Rat u = a.u * b.u - n * vv;
    Rat v = a.u * b.v + a.v * b.u + t * vv;
    return {a.field, u, v};
}

field_element operator*(const Rat& s, const field_element& a) {
    return {a.field, Rat(s * a.u), Rat(s * a.v)};
}

bool operator==(const field_element& a, const field_element& b) {
    return a.field == b.field && a.u == b.u && a.v == b.v;
}

field_element conj(const field_element& e) {
    Int t(e.field.omega_trace());
    return {e.field, Rat(e.u + t * e.v), Rat(-e.v)};
}

Rat norm(const field_element& e) {
    Int t(e.field.omega_trace());
    Int n = e.field.omega_norm();
    return Rat(e.u * e.u + t * (e.u * e.v) + n * (e.v * e.v));
}

field_element inverse(const field_element& e) {
    if (e.is_zero()) throw error("division by zero element");
    Rat nm = norm(e);
    field_element c = conj(e);
    return {e.field, Rat(c.u / nm), Rat(c.v / nm)};
}

plane_point embed(const field_element& e) {
    if (e.field.omega == omega_kind::sqrt_d) return {e.u, e.v};
    Rat half_v = e.v / 2;
    return {Rat(e.u + half_v), half_v};
}

std::string field_element::str() const {
    auto rs = [](const Rat& q) { return q.get_str(); };
    if (is_zero()) return "0";
    std::string s;
    if (u != 0) s = rs(u);
    if (v != 0) {
        if (!s.empty() && v > 0) s += "+";
        if (v == 1)
            s += "w";
        else if (v == -1)
            s += "-w";
        else
            s += rs(v) + "*w";
    }
    return s;
}

}  // namespace eucideal
