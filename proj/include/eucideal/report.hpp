#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eucideal/classify.hpp"

namespace eucideal {

/*
 * Text report: the classification summary table (one row per class number,
 * listing the d with a Euclidean ideal) followed by per-field detail lines.
 */
std::string emit_report_text(const std::vector<field_verdict>& verdicts);

/*
 * JSON report: array of {D, class_number, candidates: [{ideal, verdict,
 * covering_radius_sq, disk_radius_sq, generates}], conclusion} with stable
 * key order; rationals rendered as "num/den".
 */
std::string emit_report_json(const std::vector<field_verdict>& verdicts);
std::vector<field_verdict> parse_report_json(const std::string& text);

/*
 * SVG figure for one ideal: the fundamental parallelogram spanned by the
 * normal-form module generators, every open disk of radius sqrt(Nm(C))
 * around a lattice point that meets the parallelogram, and the deep-hole
 * witness when the verdict is open_gap.  Deterministic bytes: geometry is
 * exact and serialized as decimals with 12 significant digits.
 */
void render_case_svg(long d, const frac_ideal& C, const std::filesystem::path& path);
std::string render_case_svg_string(long d, const frac_ideal& C);

// decimal with 12 significant digits, exact rounding, trailing zeros stripped
std::string decimal12(const Rat& x);

}  // namespace eucideal
