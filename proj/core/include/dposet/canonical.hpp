#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dposet/double_poset.hpp"

namespace dposet {

/// Default largest size accepted by `canonicalize`.
inline constexpr int kCanonicalCap = 10;

struct Canonicalization;

/// Isomorphism-class key of a double poset.
///
/// Byte 0 is n. Then, for k = 1..n-1 and j = 0..k-1, one byte per pair of
/// positions (j, k) packing  a<1b | b<1a<<1 | a<2b<<2 | b<2a<<3  for the elements
/// a, b at those positions. Every prefix covers the leading principal block,
/// so the minimal key can be searched position by position. Since byte 0 is
/// the grade, comparing keys orders first by degree.
class CanonicalForm {
 public:
  /// The empty double poset.
  CanonicalForm() : key_(1, '\0') {}

  /// Throws ParseError on malformed hex; does not re-canonicalize.
  static CanonicalForm from_hex(std::string_view hex);

  int grade() const { return static_cast<unsigned char>(key_[0]); }
  const std::string& bytes() const { return key_; }
  std::string hex() const;
  /// The double poset in canonical labeling.
  DoublePoset decode() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  explicit CanonicalForm(std::string key) : key_(std::move(key)) {}
  std::string key_;
  friend Canonicalization canonicalize(const DoublePoset&, int);
};

struct Canonicalization {
  CanonicalForm form;
  /// relabeling[i] is the canonical index of original element i, so
  /// d.relabeled(relabeling) == form.decode().
  std::vector<int> relabeling;
};

/// Exhaustive search for the minimal key among labelings that list elements by
/// nondecreasing refined color (an isomorphism invariant), with prefix pruning
/// and twin pruning. Throws SizeCapError if d.size() > cap.
Canonicalization canonicalize(const DoublePoset& d, int cap = kCanonicalCap);
CanonicalForm canonical_form(const DoublePoset& d, int cap = kCanonicalCap);

bool isomorphic(const DoublePoset& a, const DoublePoset& b);

}  // namespace dposet
