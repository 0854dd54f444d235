#pragma once

#include <string>
#include <string_view>

#include "dposet/double_poset.hpp"

namespace dposet {

/// Reads the three-line text form
///
///     dp <n>
///     r1: i<j, i<j, ...
///     r2: ...
///
/// with 0-based indices and free whitespace around tokens. Blank lines are
/// ignored. Relations are closed transitively. Throws ParseError (with line
/// and column), IndexError or CycleError.
DoublePoset parse_double_poset(std::string_view text);

/// Writes the canonical representative with covering pairs only, sorted.
std::string serialize_double_poset(const DoublePoset& d);

/// Writes `d` as labeled, covering pairs only, without canonicalizing.
std::string serialize_labeled(const DoublePoset& d);

}  // namespace dposet
