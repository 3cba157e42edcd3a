#include "eucideal/motzkin.hpp"

#include <algorithm>
#include <sstream>

#include "eucideal/errors.hpp"
#include "eucideal/lattice.hpp"

namespace eucideal {

std::vector<frac_ideal> enumerate_containing_ideals(const quad_field& f, const Int& max_inverse_norm,
                                                    const std::optional<quad_form>& class_filter) {
    std::vector<frac_ideal> out;
    for (const frac_ideal& J : integral_ideals_up_to(f, max_inverse_norm)) {
        frac_ideal I = J.inverse();
        if (class_filter && ideal_class(I) != *class_filter) continue;
        out.push_back(I);
    }
    return out;
}

void ideal_set::insert(const frac_ideal& I) {
    if (!keys_.insert(I.key()).second) return;
    items_.push_back(I);
    Rat inv = I.inverse_norm();
    if (is_integer(inv) && inv.get_num() > max_integral_norm_) max_integral_norm_ = inv.get_num();
}

bool member_test(const frac_ideal& I, const frac_ideal& C, const ideal_set& prior) {
    if (!I.contains_ring()) throw does_not_contain_ring();
    frac_ideal IC = I * C;
    std::vector<field_element> reps = quotient_reps(IC, C);

    planar_lattice LC = reduce_basis(lattice_of_ideal(C));
    auto [c1, c2] = C.module_basis();
    // map disk coefficients (taken against LC's basis) back to elements of C
    planar_lattice raw = lattice_of_ideal(C);
    Rat det = Rat(raw.v1.p * raw.v2.q - raw.v2.p * raw.v1.q);
    auto element_of = [&](const plane_point& pt) {
        Rat x = Rat(pt.p * raw.v2.q - pt.q * raw.v2.p) / det;
        Rat y = Rat(raw.v1.p * pt.q - raw.v1.q * pt.p) / det;
        return Rat(x) * c1 + Rat(y) * c2;
    };

    // every usable y satisfies Nm(x-y) = Nm(IC) * Nm(J^{-1}) <= this radius
    Rat radius = Rat(IC.norm() * prior.max_integral_norm());

    bool first = true;
    for (const field_element& x : reps) {
        if (first) {  // zero coset
            first = false;
            continue;
        }
        bool found = false;
        for (const lattice_point& cand : points_in_disk_reduced(LC, embed(x), radius)) {
            field_element y = element_of(cand.pt);
            field_element diff = x - y;
            if (diff.is_zero()) continue;
            frac_ideal J = IC * inverse(diff);
            if (prior.contains(J)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

motzkin_state motzkin_begin(const quad_field& f, const frac_ideal& c) {
    motzkin_state st;
    st.field = f;
    st.c = c;
    frac_ideal r = frac_ideal::ring(f);
    st.levels.push_back({r});
    st.members.insert(r);
    st.level_max_inverse_norm.push_back(Int(1));
    return st;
}

size_t motzkin_state::psi_of(const frac_ideal& I) const {
    for (size_t i = 0; i < levels.size(); ++i)
        for (const frac_ideal& J : levels[i])
            if (J == I) return i;
    throw error("ideal not in any level");
}

bool motzkin_step(motzkin_state& st) {
    size_t i = st.levels.size();  // index of the level being built
    Int norm_bound = Int(st.field.unit_count) * Int(st.members.size()) + 1;

    quad_form target = class_pow(st.field, class_inverse(ideal_class(st.c)), (long)i);

    std::vector<frac_ideal> admitted;
    for (const frac_ideal& I : enumerate_containing_ideals(st.field, norm_bound, target)) {
        if (st.members.contains(I)) continue;
        if (!member_test(I, st.c, st.members)) continue;
        // admitted at level i: check the class law and the norm law
        quad_form check = compose(st.field, ideal_class(I), class_pow(st.field, ideal_class(st.c), (long)i));
        if (check != principal_form(st.field)) ++st.law_violations;
        Rat inv = I.inverse_norm();
        if (!is_integer(inv) || inv.get_num() > norm_bound) ++st.law_violations;
        admitted.push_back(I);
    }

    Int level_max(0);
    for (const frac_ideal& I : admitted) {
        st.members.insert(I);
        Int n = I.inverse_norm().get_num();
        if (n > level_max) level_max = n;
    }
    st.levels.push_back(admitted);
    st.level_max_inverse_norm.push_back(level_max);

    // an empty level at the full norm-law bound can never refill
    if (admitted.empty()) st.status = motzkin_status::stabilized;
    return !admitted.empty();
}

bool horizon_absorbed(const motzkin_state& st, const Int& max_inverse_norm) {
    for (const frac_ideal& I : enumerate_containing_ideals(st.field, max_inverse_norm))
        if (!st.contains(I)) return false;
    return true;
}

motzkin_state run_motzkin_from(motzkin_state st, long max_levels, const Int& max_inverse_norm) {
    if (max_levels < 0 || max_inverse_norm < 1) throw error("bad budgets");
    st.status = motzkin_status::running;
    while (true) {
        if (horizon_absorbed(st, max_inverse_norm)) {
            st.status = motzkin_status::budget_exhausted;
            return st;
        }
        if ((long)st.levels.size() - 1 >= max_levels) {
            st.status = motzkin_status::budget_exhausted;
            return st;
        }
        motzkin_step(st);
        if (st.status == motzkin_status::stabilized) return st;
    }
}

motzkin_state run_motzkin(const quad_field& f, const frac_ideal& c, long max_levels,
                          const Int& max_inverse_norm) {
    if (!c.is_integral() || !(c.norm() >= 1)) throw error("candidate ideal must be nonzero integral");
    return run_motzkin_from(motzkin_begin(f, c), max_levels, max_inverse_norm);
}

std::string serialize_state(const motzkin_state& st) {
    std::ostringstream os;
    os << "motzkin-state 1\n";
    os << "field " << st.field.d << "\n";
    os << "ideal " << rat_str(st.c.scale()) << " " << st.c.a() << " " << st.c.b() << "\n";
    os << "status " << motzkin_status_name(st.status) << "\n";
    os << "violations " << st.law_violations << "\n";
    for (size_t i = 0; i < st.levels.size(); ++i)
        for (const frac_ideal& I : st.levels[i])
            os << i << " " << rat_str(I.scale()) << " " << I.a() << " " << I.b() << "\n";
    return os.str();
}

motzkin_state parse_state(const std::string& text) {
    std::istringstream is(text);
    std::string tag, version;
    if (!(is >> tag >> version) || tag != "motzkin-state" || version != "1")
        throw io_error("not a motzkin state file");
    long d = 0;
    std::string s_scale, s_a, s_b;
    if (!(is >> tag >> d) || tag != "field") throw io_error("missing field line");
    quad_field f = make_field(d);
    if (!(is >> tag >> s_scale >> s_a >> s_b) || tag != "ideal") throw io_error("missing ideal line");
    frac_ideal c = frac_ideal::from_parts(f, parse_rat(s_scale), Int(s_a), Int(s_b));

    motzkin_state st;
    st.field = f;
    st.c = c;
    std::string status_name;
    if (!(is >> tag >> status_name) || tag != "status") throw io_error("missing status line");
    for (motzkin_status s : {motzkin_status::running, motzkin_status::stabilized,
                             motzkin_status::budget_exhausted})
        if (status_name == motzkin_status_name(s)) st.status = s;
    if (!(is >> tag >> st.law_violations) || tag != "violations")
        throw io_error("missing violations line");

    size_t level;
    while (is >> level >> s_scale >> s_a >> s_b) {
        frac_ideal I = frac_ideal::from_parts(f, parse_rat(s_scale), Int(s_a), Int(s_b));
        if (level >= st.levels.size()) {
            if (level != st.levels.size()) throw io_error("levels out of order");
            st.levels.emplace_back();
            st.level_max_inverse_norm.emplace_back(0);
        }
        st.levels[level].push_back(I);
        st.members.insert(I);
        Int n = I.inverse_norm().get_num();
        if (n > st.level_max_inverse_norm[level]) st.level_max_inverse_norm[level] = n;
    }
    if (st.levels.empty() || st.levels[0].size() != 1 ||
        st.levels[0][0] != frac_ideal::ring(f))
        throw io_error("level 0 must be exactly the ring");
    return st;
}

const char* motzkin_status_name(motzkin_status s) {
    switch (s) {
        case motzkin_status::running: return "running";
        case motzkin_status::stabilized: return "stabilized";
        case motzkin_status::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

}  // namespace eucideal
