#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dposet/dposet.hpp"

namespace dposet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
/// `check` ran but a property failed.
inline constexpr int kExitCheckFailed = 1;

/// `<coeff>*<hex key>` per line, sorted by (degree, key); "0" when empty.
std::string format(const DElement& a);
/// `<coeff>*<left key>|<right key>` per line.
std::string format(const DTensor& t);
/// `<coeff>*<permutation>` per line.
std::string format(const SElement& a);
/// `<coeff>*M(c1,...,ck)` per line.
std::string format(const QElement& a);

/// Loads an operand: `key:<hex>` is a canonical key, anything else a path to
/// a file in the text format.
DoublePoset load_operand(const std::string& operand);

/// Comma-separated positive integers ("2,1,1").
std::vector<int> parse_int_list(const std::string& text);

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dposet::cli
