#pragma once

#include <string>

namespace lpadic {

// Deterministic reduced-size property sweep across the arithmetic layers:
// combinatorial cross-routes, residue-field and Witt-vector structure, ring
// axioms on random truncated expansions, sigma substitution against the
// concrete tail sums, and Newton-polygon hull validity.  Appends one line per
// suite to `log`; returns true iff every suite passed.
bool run_selftest(std::string& log);

} // namespace lpadic
