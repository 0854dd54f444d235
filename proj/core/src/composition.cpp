#include "dposet/composition.hpp"

#include <algorithm>
#include <numeric>

#include "dposet/errors.hpp"

namespace dposet {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

void compositions_rec(int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    cur.push_back(p);
    compositions_rec(remaining - p, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidCompositionError("composition " + join_parts(parts_) + " has a part < 1");
  }
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw InvalidPartitionError(join_parts(parts_) + " is not a partition");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(n, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace dposet
