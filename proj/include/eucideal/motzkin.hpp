#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "eucideal/class_group.hpp"
#include "eucideal/ideal.hpp"

namespace eucideal {

/*
 * Fractional ideals I containing O_K with Nm(I^{-1}) <= max_inverse_norm,
 * i.e. inverses of integral ideals of norm up to the bound, optionally
 * restricted to one ideal class.  Ordered by Nm(I^{-1}) then normal form.
 */
std::vector<frac_ideal> enumerate_containing_ideals(const quad_field& f, const Int& max_inverse_norm,
                                                    const std::optional<quad_form>& class_filter = {});

/* Hash set of ideals keyed by normal form. */
class ideal_set {
  public:
    void insert(const frac_ideal& I);
    bool contains(const frac_ideal& I) const { return keys_.count(I.key()) > 0; }
    size_t size() const { return items_.size(); }
    const std::vector<frac_ideal>& items() const { return items_; }
    // largest Nm(J) over integral J with J^{-1} in the set
    const Int& max_integral_norm() const { return max_integral_norm_; }

  private:
    std::vector<frac_ideal> items_;
    std::unordered_set<std::string> keys_;
    Int max_integral_norm_{1};
};

/*
 * Membership condition for the next level: every nonzero coset x of IC/C
 * admits y in C with (x-y)^{-1} I C in prior.  The target ideal fixes
 * Nm(x-y) = Nm(IC) * Nm(J^{-1}), so all usable y lie in an exact disk
 * around x in the C-lattice; each candidate difference is inverted and
 * looked up in prior by normal form.  Throws does_not_contain_ring if
 * 1 is not in I.
 */
bool member_test(const frac_ideal& I, const frac_ideal& C, const ideal_set& prior);

enum class motzkin_status { running, stabilized, budget_exhausted };

/*
 * Level structure of the construction for a candidate ideal C:
 * levels[0] = {O_K}, and level i holds the ideals first admitted when
 * tested against the union of levels < i.  psi(I) = level index is the
 * minimal Euclidean algorithm when the construction exhausts all ideals
 * containing O_K.
 */
struct motzkin_state {
    quad_field field;
    frac_ideal c;
    std::vector<std::vector<frac_ideal>> levels;
    motzkin_status status = motzkin_status::running;
    ideal_set members;                        // union of levels
    std::vector<Int> level_max_inverse_norm;  // growth profile, 0 for empty levels
    size_t law_violations = 0;              // class-law or norm-law failures

    bool contains(const frac_ideal& I) const { return members.contains(I); }
    // level of I; requires membership
    size_t psi_of(const frac_ideal& I) const;
};

motzkin_state motzkin_begin(const quad_field& f, const frac_ideal& c);

/*
 * Compute the next level.  Candidates are the not-yet-admitted ideals of
 * the forced class with Nm(I^{-1}) <= unit_count * |union| + 1; an empty
 * level means the construction has stabilized for good.  Returns true if
 * the level is nonempty.
 */
bool motzkin_step(motzkin_state& st);

// true once every ideal with Nm(I^{-1}) <= max_inverse_norm is in the union
bool horizon_absorbed(const motzkin_state& st, const Int& max_inverse_norm);

/*
 * Iterate motzkin_step subject to budgets.  max_inverse_norm is the norm
 * horizon the run is asked to decide: stepping stops with budget_exhausted
 * once every ideal within it has been admitted (witnesses beyond the
 * horizon are still searched, per the norm-law bound) or when max_levels
 * trips; stabilization ends the run with status stabilized.  A stabilized
 * state with ideals still missing inside the horizon is evidence against a
 * Euclidean ideal but not a proof; proofs come from covering_verdict.
 * Requires C nonzero integral.
 */
motzkin_state run_motzkin(const quad_field& f, const frac_ideal& c, long max_levels,
                          const Int& max_inverse_norm);
motzkin_state run_motzkin_from(motzkin_state st, long max_levels, const Int& max_inverse_norm);

// line-oriented state file: one ideal normal form + level per line
std::string serialize_state(const motzkin_state& st);
motzkin_state parse_state(const std::string& text);

const char* motzkin_status_name(motzkin_status s);

}  // namespace eucideal
