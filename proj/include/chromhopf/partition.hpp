#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chromhopf {

/// Subset of {0, ..., 31} as a bitmask. Vertex i of the text format "1..n"
/// is bit i-1.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Set partition of {0, ..., n-1}. Blocks are nonempty, disjoint, cover the
/// ground set, and are stored ordered by their minimal element.
class Partition {
 public:
  Partition() = default;

  /// Validates and canonicalizes; throws std::domain_error when the blocks
  /// do not partition {0, ..., n-1}.
  static Partition from_blocks(int n, std::vector<VertexSet> blocks);
  /// labels[v] names the block of v; any labels work, equal labels share a block.
  static Partition from_labels(const std::vector<int>& labels);
  /// rgs must be a restricted growth string: rgs[0] == 0 and each entry is
  /// at most one more than the maximum before it.
  static Partition from_restricted_growth(const std::vector<int>& rgs);
  static Partition singletons(int n);
  static Partition single_block(int n);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  /// Index of the block containing v.
  int block_of(int v) const;
  /// Block index per vertex.
  std::vector<int> labels() const;

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  /// "[[1,3],[2]]" with 1-based elements.
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
};

/// Visits every set partition of {0, ..., n-1} exactly once, generated as
/// restricted growth strings.
template <class F>
void for_each_set_partition(int n, F&& visit) {
  if (n == 0) {
    visit(Partition());
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(Partition::from_restricted_growth(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> set_partitions(int n);

/// Restriction of p to the subset `subset`, relabeled through the increasing
/// bijection subset -> {0, ..., |subset|-1}; empty blocks are dropped.
Partition restrict_partition(const Partition& p, VertexSet subset);

/// Maps a subset through the increasing bijection of `ambient` onto an initial segment.
VertexSet compress(VertexSet subset, VertexSet ambient);
/// Inverse of compress: sends bit i to the i-th smallest element of `ambient`.
VertexSet expand(VertexSet compressed, VertexSet ambient);

}  // namespace chromhopf
