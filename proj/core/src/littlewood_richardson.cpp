#include "dposet/littlewood_richardson.hpp"

#include <algorithm>
#include <string>

#include "dposet/errors.hpp"

namespace dposet {

namespace {

void require_letters(std::span<const int> w) {
  for (int a : w) {
    if (a < 1) throw PreconditionError("word letters must be positive, got " + std::to_string(a));
  }
}

void lattice_rec(std::vector<int>& remaining, std::vector<int>& used, Word& cur, int n,
                 std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0 || (i > 0 && used[i] >= used[i - 1])) continue;
    --remaining[i];
    ++used[i];
    cur.push_back(static_cast<int>(i) + 1);
    lattice_rec(remaining, used, cur, n, out);
    cur.pop_back();
    --used[i];
    ++remaining[i];
  }
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty() || (i > 0 && r.size() > rows_[i - 1].size()))
      throw PreconditionError("tableau rows do not form a partition shape");
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (r[x] < 1 || r[x] > n || seen[r[x]]) throw PreconditionError("tableau entries are not 1..n");
      seen[r[x]] = true;
      if (x > 0 && r[x] <= r[x - 1]) throw PreconditionError("tableau row is not increasing");
      if (i > 0 && r[x] <= rows_[i - 1][x]) throw PreconditionError("tableau column is not increasing");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const { return shape().weight(); }

bool is_lattice(std::span<const int> w) {
  require_letters(w);
  std::vector<int> count;
  for (int a : w) {
    if (static_cast<int>(count.size()) < a) count.resize(a, 0);
    ++count[a - 1];
    if (a > 1 && count[a - 1] > count[a - 2]) return false;
  }
  return true;
}

Word complement(std::span<const int> w) {
  require_letters(w);
  const int k = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  Word out;
  out.reserve(w.size());
  for (int a : w) out.push_back(k + 1 - a);
  return out;
}

Word mirror(std::span<const int> w) { return Word(w.rbegin(), w.rend()); }

Partition weight(std::span<const int> w) {
  require_letters(w);
  const int k = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  std::vector<int> mult(k, 0);
  for (int a : w) ++mult[a - 1];
  for (int i = 0; i < k; ++i) {
    if (mult[i] == 0 || (i > 0 && mult[i] > mult[i - 1]))
      throw NotAPartitionError("letter multiplicities of '" + to_string(w) + "' are not a partition");
  }
  return Partition(std::move(mult));
}

bool fits_into(std::span<const int> w, const DoublePoset& d) {
  const std::vector<int> omega = labelling(d);
  if (static_cast<int>(w.size()) != d.size())
    throw LengthMismatchError("word of length " + std::to_string(w.size()) + " against " +
                              std::to_string(d.size()) + " elements");
  auto value = [&](int e) { return w[omega[e] - 1]; };
  for (const auto& [e, f] : d.first().pairs()) {
    if (value(e) > value(f)) return false;
    if (value(e) == value(f) && d.second().less(f, e)) return false;
  }
  return true;
}

std::vector<Word> lattice_words(const Partition& nu) {
  std::vector<int> remaining = nu.parts();
  std::vector<int> used(remaining.size(), 0);
  std::vector<Word> out;
  Word cur;
  lattice_rec(remaining, used, cur, nu.weight(), out);
  return out;
}

Tableau tableau_from_lattice(std::span<const int> w) {
  if (!is_lattice(w)) throw NotLatticeError("'" + to_string(w) + "' is not a lattice word");
  std::vector<std::vector<int>> rows;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (static_cast<int>(rows.size()) < w[p]) rows.resize(w[p]);
    rows[w[p] - 1].push_back(static_cast<int>(p) + 1);
  }
  return Tableau(std::move(rows));
}

Word read_word(const Tableau& t) {
  Word out;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

Permutation row_word(const Tableau& t) {
  Word out;
  for (const auto& r : t.rows()) out.insert(out.end(), r.begin(), r.end());
  return Permutation(std::move(out));
}

Word mirror_read_word(const Tableau& t) { return mirror(read_word(t)); }

Permutation young_longest(const Partition& nu) {
  std::vector<int> word;
  int offset = 0;
  for (int part : nu.parts()) {
    for (int v = offset + part; v > offset; --v) word.push_back(v);
    offset += part;
  }
  return Permutation(std::move(word));
}

bool StandardizationReport::all_hold() const {
  return read_is_inverse_st_complement && mirror_read_is_complement_inverse_st_mirror &&
         row_is_inverse_st && complement_identity.value_or(true) && mirror_identity.value_or(true);
}

StandardizationReport st_identities_check(std::span<const int> w) {
  const Tableau t = tableau_from_lattice(w);
  const Partition nu = weight(w);
  StandardizationReport r;
  r.st_word = standardize(w);
  r.st_complement = standardize(complement(w));
  r.st_mirror = standardize(mirror(w));
  r.row = row_word(t);
  r.read = read_word(t);
  r.mirror_read = mirror_read_word(t);
  r.read_is_inverse_st_complement = r.st_complement.inverse().word() == r.read;
  r.mirror_read_is_complement_inverse_st_mirror = complement(r.st_mirror.inverse().word()) == r.mirror_read;
  r.row_is_inverse_st = r.st_word.inverse() == r.row;
  if (nu.is_strict()) {
    const int n = static_cast<int>(w.size());
    const Permutation w0 = Permutation::longest(n);
    const Permutation g = young_longest(nu);
    r.complement_identity = r.st_complement == w0.compose(g).compose(r.st_word);
    r.mirror_identity = r.st_mirror == g.compose(r.st_word).compose(w0);
  }
  return r;
}

namespace {

void check_lr_arguments(const DoublePoset& d, const Partition& nu) {
  if (!is_special(d)) throw NotSpecialError("second order is not total");
  if (nu.weight() != d.size())
    throw SizeMismatchError("partition of " + std::to_string(nu.weight()) + " against " +
                            std::to_string(d.size()) + " elements");
}

}  // namespace

std::int64_t lr_count_complement(const DoublePoset& d, const Partition& nu) {
  check_lr_arguments(d, nu);
  std::int64_t count = 0;
  for (const Word& w : lattice_words(nu)) count += fits_into(complement(w), d);
  return count;
}

std::int64_t lr_count_mirror(const DoublePoset& d, const Partition& nu) {
  check_lr_arguments(d, nu);
  const DoublePoset t = tilde(d);
  std::int64_t count = 0;
  for (const Word& w : lattice_words(nu)) count += fits_into(mirror(w), t);
  return count;
}

FitsPair fits_standardization_check(std::span<const int> w, const DoublePoset& d) {
  return {fits_into(w, d), fits_into(standardize(w).word(), d)};
}

}  // namespace dposet
