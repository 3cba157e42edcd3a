#include "eucideal/classify.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "eucideal/class_group.hpp"
#include "eucideal/errors.hpp"

namespace eucideal {

bool candidate_report::operator==(const candidate_report& o) const {
    return ideal == o.ideal && subcase == o.subcase && verdict == o.verdict &&
           covering_radius_sq == o.covering_radius_sq && disk_radius_sq == o.disk_radius_sq &&
           generates_class_group == o.generates_class_group;
}

bool field_verdict::operator==(const field_verdict& o) const {
    return d == o.d && class_number == o.class_number && candidates == o.candidates &&
           conclusion == o.conclusion;
}

std::vector<frac_ideal> candidate_classes(const quad_field& f) {
    if (f.d == 1 || f.d == 3) return {frac_ideal::ring(f)};
    std::vector<frac_ideal> out;
    for (long p : {2L, 3L}) {
        auto factors = primes_above(f, p);
        // keep the first degree one prime; its Galois conjugate, if split,
        // carries the same verdict
        for (const auto& pf : factors)
            if (pf.residue_degree == 1) {
                out.push_back(pf.ideal);
                break;
            }
    }
    return out;
}

std::string candidate_subcase(const quad_field& f, const frac_ideal& C) {
    if (f.d == 1 || f.d == 3) return "ring of integers (extra units)";
    long p = C.a().get_si();  // degree one prime of norm p
    bool ramified = f.d % p == 0 || (p == 2 && f.d % 4 == 1);
    if (p == 2) {
        if (f.d % 4 == 1) return "2 ramified, d = 1 (mod 4)";
        if (f.d % 4 == 2) return "2 ramified, d = 2 (mod 4)";
        return "2 split, d = 7 (mod 8)";
    }
    if (f.d % 4 == 3) return ramified ? "3 ramified, d = 3 (mod 12)" : "3 split, d = 11 (mod 12)";
    return ramified ? "3 ramified, d = 6, 9 (mod 12)" : "3 split, d = 2, 5 (mod 12)";
}

field_verdict classify_field(long d) {
    quad_field f = make_field(d);
    field_verdict out;
    out.d = d;
    out.class_number = class_number(f);

    bool any_covered_generating = false;
    bool all_gap_or_nongenerating = true;
    for (const frac_ideal& C : candidate_classes(f)) {
        cover_verdict v = covering_verdict(C);
        bool generates = class_order(f, ideal_class(C)) == out.class_number;
        out.candidates.push_back({C, candidate_subcase(f, C), v.kind, v.covering_radius_sq,
                                  v.disk_radius_sq, generates});
        if (v.kind == cover_kind::covered && generates) any_covered_generating = true;
        if (v.kind != cover_kind::open_gap && generates) all_gap_or_nongenerating = false;
    }
    out.conclusion = any_covered_generating      ? conclusion_kind::has_euclidean_ideal
                     : all_gap_or_nongenerating ? conclusion_kind::no_euclidean_ideal
                                                : conclusion_kind::inconclusive;
    return out;
}

std::vector<long> squarefree_up_to(long d_max) {
    std::vector<long> ds;
    for (long d = 1; d <= d_max; ++d)
        if (is_squarefree(d)) ds.push_back(d);
    return ds;
}

std::vector<field_verdict> classify_range(long d_max, unsigned threads) {
    std::vector<long> ds = squarefree_up_to(d_max);
    std::vector<field_verdict> results(ds.size());
    if (ds.empty()) return results;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads > ds.size()) threads = (unsigned)ds.size();

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        size_t i;
        while ((i = next.fetch_add(1)) < ds.size()) {
            try {
                results[i] = classify_field(ds[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

const char* conclusion_name(conclusion_kind c) {
    switch (c) {
        case conclusion_kind::has_euclidean_ideal: return "HasEuclideanIdeal";
        case conclusion_kind::no_euclidean_ideal: return "NoEuclideanIdeal";
        case conclusion_kind::inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace eucideal
