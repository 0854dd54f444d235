#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dposet/composition.hpp"
#include "dposet/double_poset.hpp"
#include "dposet/permutation.hpp"

namespace dposet {

/// Standard Young tableau stored bottom row first: rows()[0] is the longest
/// row. Rows increase to the right and columns increase upward.
class Tableau {
 public:
  Tableau() = default;
  /// Throws PreconditionError unless the rows form a standard tableau.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Every prefix has at least as many i's as (i+1)'s, for every i.
bool is_lattice(std::span<const int> w);

/// Exchanges i and k+1-i where k is the largest letter of w.
Word complement(std::span<const int> w);
Word mirror(std::span<const int> w);
/// Multiplicities of 1, 2, ... up to the largest letter.
/// Throws NotAPartitionError if they are not weakly decreasing (or one is 0).
Partition weight(std::span<const int> w);

/// Whether e -> w[omega(e)] is a d-partition. Throws NotSpecialError or
/// LengthMismatchError.
bool fits_into(std::span<const int> w, const DoublePoset& d);

/// Lattice words of weight nu, lexicographically ordered.
std::vector<Word> lattice_words(const Partition& nu);

/// Position p goes to row j when the p-th letter of w is j.
/// Throws NotLatticeError.
Tableau tableau_from_lattice(std::span<const int> w);
/// Rows concatenated, last (top) row first.
Word read_word(const Tableau& t);
/// Rows concatenated, first (bottom) row first.
Permutation row_word(const Tableau& t);
/// read_word reversed.
Word mirror_read_word(const Tableau& t);

/// Reading-word identities for a lattice word w with tableau T, u its
/// complement and v its mirror image:
///  * st(u)^-1 == read(T) and complement(st(v)^-1) == mirror read(T),
///  * st(w)^-1 == row(T),
///  * for strictly decreasing weights only, st(u) == w0 ∘ gamma ∘ st(w) and
///    st(v) == gamma ∘ st(w) ∘ w0 with gamma the longest element of the Young
///    subgroup; the optionals are empty otherwise.
struct StandardizationReport {
  Permutation st_word;
  Permutation st_complement;
  Permutation st_mirror;
  Permutation row;
  Word read;
  Word mirror_read;
  bool read_is_inverse_st_complement = false;
  bool mirror_read_is_complement_inverse_st_mirror = false;
  bool row_is_inverse_st = false;
  std::optional<bool> complement_identity;
  std::optional<bool> mirror_identity;

  bool all_hold() const;
};

/// Throws NotLatticeError.
StandardizationReport st_identities_check(std::span<const int> w);

/// Longest element of S_{nu_1} x ... x S_{nu_k}.
Permutation young_longest(const Partition& nu);

/// Lattice words of weight nu whose complement fits into d.
std::int64_t lr_count_complement(const DoublePoset& d, const Partition& nu);
/// Lattice words of weight nu whose mirror image fits into tilde(d).
std::int64_t lr_count_mirror(const DoublePoset& d, const Partition& nu);

struct FitsPair {
  bool word;
  bool standardized;
};
/// (w fits into d, st(w) fits into d).
FitsPair fits_standardization_check(std::span<const int> w, const DoublePoset& d);

}  // namespace dposet
