#ifndef GON_IO_HPP
#define GON_IO_HPP

#include <string>

#include "gon/harness.hpp"

namespace gon {

/**
 * Line-oriented instance format.  Keys are "key: value" pairs; the lattice
 * and vertices sections are headers followed by one row of whitespace-
 * separated rationals per line.  Rationals are written p, p/q or -p/q.
 *
 *   dimension: 2
 *   symmetric: true          (optional, default false)
 *   seed: 7                  (optional, default 0)
 *   magnitude: 3             (optional generator parameter, default 0)
 *   vertex-count: 4          (optional generator parameter, default 0)
 *   lattice:                 (optional; defaults to the standard basis)
 *   1 0
 *   0 1
 *   vertices:
 *   0 0
 *   2 0
 *   0 3
 *
 * Lattice rows are the basis vectors.  parse_instance_text raises
 * parse_error with a 1-based line number on malformed input, and
 * parse(emit(x)) == x field for field.
 */
Instance parse_instance_text(const std::string& text);

/** Reads and parses an instance file; file errors surface as parse_error. */
Instance load_instance_file(const std::string& path);

std::string emit_instance_text(const Instance& inst);

/**
 * Human- and machine-readable certification report: the instance identity,
 * count, minima with witnesses, one "bound:" row per bound (name, exact or
 * interval value, applicability, satisfied flag) and one "compare:" row per
 * pairwise verdict.  elapsed_seconds is deliberately omitted so equal seeds
 * give byte-identical text.  include_reduced drops the "-reduced" rows when
 * false (the CLI exposes them behind a flag).
 */
std::string emit_report_text(const BoundReport& report, bool include_reduced = true);

/** Key/value campaign summary, one statistic per line. */
std::string emit_campaign_text(const CampaignSummary& summary);

}  // namespace gon

#endif
