#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eucideal/class_group.hpp"
#include "eucideal/classify.hpp"
#include "eucideal/errors.hpp"
#include "eucideal/motzkin.hpp"
#include "eucideal/report.hpp"

using namespace eucideal;

namespace {

// first degree one prime over p, in normal-form order
frac_ideal degree_one_prime(const quad_field& f, long p) {
    for (const auto& pf : primes_above(f, p))
        if (pf.residue_degree == 1) return pf.ideal;
    throw error("no degree one prime over " + std::to_string(p) + " for d = " +
                std::to_string(f.d));
}

int cmd_classify(long d, long dmax, bool json) {
    std::vector<field_verdict> verdicts;
    if (dmax > 0)
        verdicts = classify_range(dmax);
    else
        verdicts = {classify_field(d)};
    std::cout << (json ? emit_report_json(verdicts) : emit_report_text(verdicts));
    return 0;
}

int cmd_cover(long d, long p) {
    quad_field f = make_field(d);
    frac_ideal C = degree_one_prime(f, p);
    cover_verdict v = covering_verdict(C);
    std::cout << "D=" << d << "  C=" << C.str() << "\n";
    std::cout << cover_kind_name(v.kind) << "  mu^2=" << v.covering_radius_sq.get_str()
              << "  Nm(C)=" << v.disk_radius_sq.get_str() << "\n";
    if (v.witness)
        std::cout << "witness (p, q) = (" << v.witness->p.get_str() << ", "
                  << v.witness->q.get_str() << ")  [the point p + q*sqrt(" << d << ")*i]\n";
    return 0;
}

int cmd_motzkin(long d, long p, long max_levels, long max_norm, const std::string& resume) {
    quad_field f = make_field(d);
    frac_ideal C = degree_one_prime(f, p);

    motzkin_state st = motzkin_begin(f, C);
    if (!resume.empty() && std::filesystem::exists(resume)) {
        std::ifstream in(resume);
        std::stringstream buf;
        buf << in.rdbuf();
        st = parse_state(buf.str());
        if (st.field != f || st.c != C) throw error("state file is for a different run");
        std::cout << "resumed at " << st.levels.size() << " levels, " << st.members.size()
                  << " ideals\n";
    }

    st = run_motzkin_from(std::move(st), max_levels, Int(max_norm));

    size_t running_union = 0;
    for (size_t i = 0; i < st.levels.size(); ++i) {
        running_union += st.levels[i].size();
        std::cout << "level " << i << ": +" << st.levels[i].size() << " ideals, union "
                  << running_union << ", level max Nm(I^-1) = "
                  << st.level_max_inverse_norm[i].get_str() << "\n";
    }

    std::cout << "status: " << motzkin_status_name(st.status) << "\n";
    std::cout << "union: " << st.members.size() << " ideals, max Nm(I^-1) = "
              << st.members.max_integral_norm().get_str() << "\n";
    std::cout << "horizon Nm(I^-1) <= " << max_norm
              << (horizon_absorbed(st, Int(max_norm)) ? ": fully absorbed\n"
                                                      : ": not absorbed\n");
    if (st.status == motzkin_status::stabilized) {
        // ideals inside the final candidate horizon that were never admitted
        Int horizon = Int(f.unit_count) * Int(st.members.size()) + 1;
        std::vector<frac_ideal> excluded;
        for (const auto& I : enumerate_containing_ideals(f, horizon))
            if (!st.contains(I)) excluded.push_back(I);
        if (excluded.empty()) {
            std::cout << "no excluded ideals up to Nm(I^-1) = " << horizon.get_str() << "\n";
        } else {
            std::cout << excluded.size() << " ideals excluded up to Nm(I^-1) = "
                      << horizon.get_str() << " (evidence against a Euclidean ideal), first: "
                      << excluded.front().str() << "\n";
        }
    }
    if (st.law_violations > 0) {
        std::cerr << "lemma invariant violations: " << st.law_violations << "\n";
        return 2;
    }
    if (!resume.empty()) {
        std::ofstream out(resume, std::ios::binary);
        if (!out) throw io_error("cannot write " + resume);
        out << serialize_state(st);
        std::cout << "state saved to " << resume << "\n";
    }
    return 0;
}

int cmd_figure(long d, long p, const std::string& out) {
    quad_field f = make_field(d);
    frac_ideal C = degree_one_prime(f, p);
    render_case_svg(d, C, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_classgroup(long d) {
    quad_field f = make_field(d);
    auto forms = reduced_forms(f);
    std::cout << "D=" << d << "  disc=" << f.disc << "  h=" << forms.size() << "\n";
    for (const auto& form : forms) {
        std::cout << "  " << form.str() << "  order " << class_order(f, form);
        if (form == principal_form(f)) std::cout << "  (principal)";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclidean ideal classes in imaginary quadratic fields"};
    app.require_subcommand(1);

    long d = 0, dmax = 0, p = 2, max_levels = 128, max_norm = 50;
    bool json = false;
    std::string out_path, resume_path;

    auto* classify = app.add_subcommand("classify", "classify one field or a range");
    auto* opt_d = classify->add_option("--d", d, "single squarefree d");
    auto* opt_dmax = classify->add_option("--dmax", dmax, "all squarefree d up to this bound");
    classify->add_flag("--json", json, "machine-readable output");

    auto* cover = app.add_subcommand("cover", "covering verdict for a degree one prime");
    cover->add_option("--d", d, "squarefree d")->required();
    cover->add_option("--prime", p, "2 or 3")->required()->check(CLI::IsMember({2, 3}));

    auto* motzkin = app.add_subcommand("motzkin", "run the level construction");
    motzkin->add_option("--d", d, "squarefree d")->required();
    motzkin->add_option("--prime", p, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    motzkin->add_option("--max-levels", max_levels, "level budget")->capture_default_str();
    motzkin->add_option("--max-norm", max_norm, "candidate Nm(I^-1) horizon")
        ->capture_default_str();
    motzkin->add_option("--resume", resume_path, "state file; loaded if present, updated on exit");

    auto* figure = app.add_subcommand("figure", "draw the disks over a fundamental domain");
    figure->add_option("--d", d, "squarefree d")->required();
    figure->add_option("--prime", p, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    figure->add_option("-o,--output", out_path, "output SVG path")->required();

    auto* classgroup = app.add_subcommand("classgroup", "reduced forms and class orders");
    classgroup->add_option("--d", d, "squarefree d")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (classify->parsed()) {
            if (!*opt_d && !*opt_dmax) {
                std::cerr << "classify needs --d or --dmax\n";
                return 1;
            }
            return cmd_classify(d, dmax, json);
        }
        if (cover->parsed()) return cmd_cover(d, p);
        if (motzkin->parsed()) {
            if (max_levels < 0 || max_norm < 1) {
                std::cerr << "budgets must be positive\n";
                return 1;
            }
            return cmd_motzkin(d, p, max_levels, max_norm, resume_path);
        }
        if (figure->parsed()) return cmd_figure(d, p, out_path);
        if (classgroup->parsed()) return cmd_classgroup(d);
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
