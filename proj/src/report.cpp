#include "eucideal/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eucideal/class_group.hpp"
#include "eucideal/errors.hpp"

namespace eucideal {

using ordered_json = nlohmann::ordered_json;

std::string emit_report_text(const std::vector<field_verdict>& verdicts) {
    std::ostringstream os;
    std::map<long, std::vector<long>> by_h;
    for (const auto& v : verdicts)
        if (v.conclusion == conclusion_kind::has_euclidean_ideal)
            by_h[v.class_number].push_back(v.d);

    os << "fields with a Euclidean ideal, by class number\n";
    if (by_h.empty()) os << "(none)\n";
    for (const auto& [h, ds] : by_h) {
        os << h << ": ";
        for (size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i];
        os << "\n";
    }
    os << "\n";

    for (const auto& v : verdicts) {
        os << "D=" << v.d << "  h=" << v.class_number << "  " << conclusion_name(v.conclusion);
        if (v.norm_euclidean()) os << " (norm-Euclidean)";
        os << "\n";
        for (const auto& c : v.candidates) {
            os << "  " << c.ideal.str() << "  [" << c.subcase << "]  "
               << cover_kind_name(c.verdict) << "  mu^2=" << c.covering_radius_sq.get_str()
               << "  Nm=" << c.disk_radius_sq.get_str()
               << "  generates=" << (c.generates_class_group ? "yes" : "no") << "\n";
        }
    }
    return os.str();
}

static ordered_json ideal_to_json(const frac_ideal& I) {
    ordered_json j;
    j["scale"] = rat_str(I.scale());
    j["a"] = I.a().get_str();
    j["b"] = I.b().get_str();
    return j;
}

std::string emit_report_json(const std::vector<field_verdict>& verdicts) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : verdicts) {
        ordered_json jv;
        jv["D"] = v.d;
        jv["class_number"] = v.class_number;
        ordered_json cands = ordered_json::array();
        for (const auto& c : v.candidates) {
            ordered_json jc;
            jc["ideal"] = ideal_to_json(c.ideal);
            jc["verdict"] = cover_kind_name(c.verdict);
            jc["covering_radius_sq"] = rat_str(c.covering_radius_sq);
            jc["disk_radius_sq"] = rat_str(c.disk_radius_sq);
            jc["generates"] = c.generates_class_group;
            cands.push_back(jc);
        }
        jv["candidates"] = cands;
        jv["conclusion"] = conclusion_name(v.conclusion);
        arr.push_back(jv);
    }
    return arr.dump(2) + "\n";
}

static cover_kind parse_kind(const std::string& s) {
    for (cover_kind k : {cover_kind::covered, cover_kind::boundary_touch, cover_kind::open_gap})
        if (s == cover_kind_name(k)) return k;
    throw io_error("unknown verdict: " + s);
}

static conclusion_kind parse_conclusion(const std::string& s) {
    for (conclusion_kind c : {conclusion_kind::has_euclidean_ideal,
                              conclusion_kind::no_euclidean_ideal, conclusion_kind::inconclusive})
        if (s == conclusion_name(c)) return c;
    throw io_error("unknown conclusion: " + s);
}

std::vector<field_verdict> parse_report_json(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw io_error(std::string("bad report JSON: ") + e.what());
    }
    std::vector<field_verdict> out;
    for (const auto& jv : arr) {
        field_verdict v;
        v.d = jv.at("D").get<long>();
        v.class_number = jv.at("class_number").get<long>();
        quad_field f = make_field(v.d);
        for (const auto& jc : jv.at("candidates")) {
            const auto& ji = jc.at("ideal");
            frac_ideal I = frac_ideal::from_parts(f, parse_rat(ji.at("scale").get<std::string>()),
                                                  Int(ji.at("a").get<std::string>()),
                                                  Int(ji.at("b").get<std::string>()));
            candidate_report c{I,
                               candidate_subcase(f, I),
                               parse_kind(jc.at("verdict").get<std::string>()),
                               parse_rat(jc.at("covering_radius_sq").get<std::string>()),
                               parse_rat(jc.at("disk_radius_sq").get<std::string>()),
                               jc.at("generates").get<bool>()};
            v.candidates.push_back(c);
        }
        v.conclusion = parse_conclusion(jv.at("conclusion").get<std::string>());
        out.push_back(v);
    }
    return out;
}

std::string decimal12(const Rat& x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    Rat a = neg ? Rat(-x) : x;

    auto pow10 = [](long e) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, (unsigned long)e);
        return p;
    };

    // exponent e with 10^e <= a < 10^{e+1}; digit-count estimate, then fix up
    long e = (long)mpz_sizeinbase(a.get_num_mpz_t(), 10) -
             (long)mpz_sizeinbase(a.get_den_mpz_t(), 10);
    auto cmp_pow10 = [&](long k) {  // sign of a - 10^k
        if (k >= 0) return cmp(a, Rat(pow10(k)));
        return cmp(a, make_rat(1, pow10(-k)));
    };
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;

    const int sig = 12;
    // m = round(a * 10^{sig-1-e}) has sig digits
    long shift = sig - 1 - e;
    Rat scaled = shift >= 0 ? Rat(a * pow10(shift)) : Rat(a / pow10(-shift));
    Int m = rat_round(scaled);
    if (m >= pow10(sig)) {
        m /= 10;
        ++e;
    }
    std::string digits = m.get_str();

    std::string s;
    if (e >= sig - 1)
        s = digits + std::string(e - sig + 1, '0');
    else if (e >= 0)
        s = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    else
        s = "0." + std::string(-e - 1, '0') + digits;
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return neg ? "-" + s : s;
}

// rational approximation of sqrt(x) good to ~10^-30
static Rat sqrt_approx(const Rat& x) {
    if (x < 0) throw invariant_violation("sqrt of negative");
    Int p30;
    mpz_ui_pow_ui(p30.get_mpz_t(), 10, 30);
    Int nd = x.get_num() * x.get_den() * p30 * p30;
    return make_rat(isqrt(nd), Int(x.get_den() * p30));
}

// squared distance from a point to a closed segment, all exact
static Rat point_segment_dist_sq(const quad_field& f, const plane_point& z, const plane_point& s0,
                                 const plane_point& s1) {
    plane_point u = s1 - s0;
    Rat t = dot(f, z - s0, u) / norm_sq(f, u);
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    plane_point proj = s0 + t * u;
    return norm_sq(f, z - proj);
}

std::string render_case_svg_string(long d, const frac_ideal& C) {
    quad_field f = make_field(d);
    if (C.field() != f) throw field_mismatch();

    auto [g1, g2] = C.module_basis();
    plane_point w1 = embed(g1), w2 = embed(g2);
    plane_point corners[4] = {plane_point{Rat(0), Rat(0)}, w1, w1 + w2, w2};
    Rat r_sq = C.norm();

    // lattice points whose open disk meets the parallelogram; enumerate a
    // disk that provably contains them all: (R_P + r)^2 <= 2 R_P^2 + 2 r^2
    plane_point center = make_rat(1, 2) * (w1 + w2);
    Rat rp_sq(0);
    for (const auto& c : corners) {
        Rat d2 = norm_sq(f, c - center);
        if (d2 > rp_sq) rp_sq = d2;
    }
    Rat big = Rat(2 * rp_sq + 2 * r_sq);

    planar_lattice L = lattice_of_ideal(C);
    Rat det = Rat(w1.p * w2.q - w2.p * w1.q);
    auto inside = [&](const plane_point& z) {
        Rat alpha = Rat(z.p * w2.q - z.q * w2.p) / det;
        Rat beta = Rat(w1.p * z.q - w1.q * z.p) / det;
        return alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1;
    };
    auto meets = [&](const plane_point& z) {
        if (inside(z)) return true;
        for (int i = 0; i < 4; ++i)
            if (point_segment_dist_sq(f, z, corners[i], corners[(i + 1) % 4]) < r_sq) return true;
        return false;
    };

    std::vector<plane_point> centers;
    for (const auto& cand : points_in_disk(L, center, big))
        if (meets(cand.pt)) centers.push_back(cand.pt);
    std::sort(centers.begin(), centers.end(), lex_less);

    // complex-plane coordinates: (p, q) -> (p, q*sqrt(d)); svg y flipped
    Rat sd = sqrt_approx(Rat(f.d));
    Rat r = sqrt_approx(r_sq);
    auto X = [&](const plane_point& z) { return z.p; };
    auto Y = [&](const plane_point& z) { return Rat(-(z.q * sd)); };

    Rat xmin, xmax, ymin, ymax;
    bool first = true;
    auto extend = [&](const Rat& x, const Rat& y) {
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
            return;
        }
        if (x < xmin) xmin = x;
        if (x > xmax) xmax = x;
        if (y < ymin) ymin = y;
        if (y > ymax) ymax = y;
    };
    for (const auto& c : corners) extend(X(c), Y(c));
    for (const auto& c : centers) {
        extend(Rat(X(c) - r), Rat(Y(c) - r));
        extend(Rat(X(c) + r), Rat(Y(c) + r));
    }
    Rat pad = Rat((xmax - xmin) / 20);
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;
    Rat width = Rat(xmax - xmin), height = Rat(ymax - ymin);
    Rat stroke = Rat(width / 300);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << decimal12(xmin) << " " << decimal12(ymin) << " " << decimal12(width) << " "
       << decimal12(height) << "\" width=\"700\" height=\""
       << decimal12(Rat(700 * height / width)) << "\">\n";

    os << "  <g fill=\"#4f86c6\" fill-opacity=\"0.30\" stroke=\"none\">\n";
    for (const auto& c : centers)
        os << "    <circle cx=\"" << decimal12(X(c)) << "\" cy=\"" << decimal12(Y(c))
           << "\" r=\"" << decimal12(r) << "\"/>\n";
    os << "  </g>\n";

    os << "  <g fill=\"#17355e\" stroke=\"none\">\n";
    for (const auto& c : centers)
        os << "    <circle cx=\"" << decimal12(X(c)) << "\" cy=\"" << decimal12(Y(c))
           << "\" r=\"" << decimal12(Rat(stroke * 2)) << "\"/>\n";
    os << "  </g>\n";

    os << "  <path d=\"M " << decimal12(X(corners[0])) << " " << decimal12(Y(corners[0]));
    for (int i = 1; i < 4; ++i) os << " L " << decimal12(X(corners[i])) << " " << decimal12(Y(corners[i]));
    os << " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << decimal12(stroke) << "\"/>\n";

    cover_verdict v = covering_verdict(C);
    if (v.kind == cover_kind::open_gap) {
        // translate the deep hole into the drawn parallelogram
        plane_point hole = *v.witness;
        Rat alpha = Rat(hole.p * w2.q - hole.q * w2.p) / det;
        Rat beta = Rat(w1.p * hole.q - w1.q * hole.p) / det;
        plane_point shifted = hole - Rat(rat_floor(alpha)) * w1 - Rat(rat_floor(beta)) * w2;
        os << "  <circle cx=\"" << decimal12(X(shifted)) << "\" cy=\"" << decimal12(Y(shifted))
           << "\" r=\"" << decimal12(Rat(stroke * 3)) << "\" fill=\"#c62f2f\" stroke=\"none\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_case_svg(long d, const frac_ideal& C, const std::filesystem::path& path) {
    std::string svg = render_case_svg_string(d, C);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string());
    out << svg;
    if (!out) throw io_error("write failed: " + path.string());
}

}  // namespace eucideal
