#include "chromhopf/forests.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chromhopf {

namespace {

using Family = std::vector<VertexSet>;

bool member_order(VertexSet a, VertexSet b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa > pb : a < b;
}

// A forest rooted at `root` is {root} plus, for some admissible partition of
// G|root other than the single block, a forest rooted at each non-singleton
// block. This mirrors the recursion of the antipode.
class ForestEnumerator {
 public:
  explicit ForestEnumerator(const Graph& g) : g_(g) {}

  const std::vector<Family>& rooted(VertexSet root) {
    if (auto it = memo_.find(root); it != memo_.end()) {
      return it->second;
    }
    std::vector<Family> out;
    const Graph local = restrict(g_, root);
    for_each_admissible_partition(local, [&](const Partition& p) {
      if (p.block_count() == 1) {
        return;
      }
      std::vector<Family> partial{Family{root}};
      for (VertexSet block : p.blocks()) {
        if (popcount(block) < 2) {
          continue;
        }
        const auto& inner = rooted(expand(block, root));
        std::vector<Family> next;
        next.reserve(partial.size() * inner.size());
        for (const auto& left : partial) {
          for (const auto& right : inner) {
            Family merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
          }
        }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    });
    if (out.empty()) {
      out.push_back(Family{root});
    }
    return memo_.emplace(root, std::move(out)).first->second;
  }

 private:
  const Graph& g_;
  std::map<VertexSet, std::vector<Family>> memo_;
};

}  // namespace

std::vector<NestedForest> nested_forests(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw std::domain_error("nested forests need a connected, nonempty graph");
  }
  ForestEnumerator enumerator(g);
  std::vector<NestedForest> out;
  for (Family family : enumerator.rooted(g.vertices())) {
    std::sort(family.begin(), family.end(), member_order);
    out.push_back(NestedForest{std::move(family)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> forest_evaluate(const Graph& g, const NestedForest& forest) {
  std::vector<Graph> factors;
  for (VertexSet member : forest.members) {
    std::vector<VertexSet> classes;
    VertexSet covered = 0;
    // Members are sorted by decreasing size, so the first subsets met are maximal.
    for (VertexSet other : forest.members) {
      if (other != member && (other & ~member) == 0 && (other & covered) == 0) {
        classes.push_back(compress(other, member));
        covered |= other;
      }
    }
    for (VertexSet rest = member & ~covered; rest; rest &= rest - 1) {
      classes.push_back(compress(rest & (~rest + 1), member));
    }
    factors.push_back(
        contract(restrict(g, member), Partition::from_blocks(popcount(member), classes)));
  }
  return factors;
}

}  // namespace chromhopf
