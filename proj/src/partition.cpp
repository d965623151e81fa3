#include "chromhopf/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chromhopf {

Partition Partition::from_blocks(int n, std::vector<VertexSet> blocks) {
  if (n < 0 || n > kMaxVertices) {
    throw std::domain_error("partition ground set size out of range");
  }
  VertexSet seen = 0;
  for (VertexSet b : blocks) {
    if (b == 0) {
      throw std::domain_error("partition has an empty block");
    }
    if ((b & ~full_set(n)) != 0) {
      throw std::domain_error("partition block element out of range");
    }
    if ((b & seen) != 0) {
      throw std::domain_error("partition blocks overlap");
    }
    seen |= b;
  }
  if (seen != full_set(n)) {
    throw std::domain_error("partition blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
  Partition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  std::map<int, VertexSet> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    by_label[labels[v]] |= VertexSet{1} << v;
  }
  std::vector<VertexSet> blocks;
  blocks.reserve(by_label.size());
  for (const auto& [label, block] : by_label) {
    blocks.push_back(block);
  }
  return from_blocks(static_cast<int>(labels.size()), std::move(blocks));
}

Partition Partition::from_restricted_growth(const std::vector<int>& rgs) {
  Partition p;
  p.n_ = static_cast<int>(rgs.size());
  for (std::size_t v = 0; v < rgs.size(); ++v) {
    const auto label = static_cast<std::size_t>(rgs[v]);
    if (label > p.blocks_.size()) {
      throw std::domain_error("not a restricted growth string");
    }
    if (label == p.blocks_.size()) {
      p.blocks_.push_back(0);
    }
    p.blocks_[label] |= VertexSet{1} << v;
  }
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<VertexSet> blocks;
  for (int v = 0; v < n; ++v) {
    blocks.push_back(VertexSet{1} << v);
  }
  return from_blocks(n, std::move(blocks));
}

Partition Partition::single_block(int n) {
  if (n == 0) {
    return Partition();
  }
  return from_blocks(n, {full_set(n)});
}

int Partition::block_of(int v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & (VertexSet{1} << v)) {
      return static_cast<int>(i);
    }
  }
  throw std::domain_error("vertex outside partition ground set");
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (VertexSet b = blocks_[i]; b; b &= b - 1) {
      out[static_cast<std::size_t>(lowest(b))] = static_cast<int>(i);
    }
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_) {
    return false;
  }
  for (VertexSet b : blocks_) {
    const bool inside = std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(),
                                    [b](VertexSet c) { return (b & ~c) == 0; });
    if (!inside) {
      return false;
    }
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += "[";
    bool first = true;
    for (VertexSet b = blocks_[i]; b; b &= b - 1) {
      if (!first) {
        out += ",";
      }
      first = false;
      out += std::to_string(lowest(b) + 1);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<Partition> set_partitions(int n) {
  std::vector<Partition> out;
  for_each_set_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

VertexSet compress(VertexSet subset, VertexSet ambient) {
  VertexSet out = 0;
  int i = 0;
  for (VertexSet a = ambient; a; a &= a - 1, ++i) {
    if (subset & (a & (~a + 1))) {
      out |= VertexSet{1} << i;
    }
  }
  return out;
}

VertexSet expand(VertexSet compressed, VertexSet ambient) {
  VertexSet out = 0;
  int i = 0;
  for (VertexSet a = ambient; a; a &= a - 1, ++i) {
    if (compressed & (VertexSet{1} << i)) {
      out |= a & (~a + 1);
    }
  }
  return out;
}

Partition restrict_partition(const Partition& p, VertexSet subset) {
  std::vector<VertexSet> blocks;
  for (VertexSet b : p.blocks()) {
    if (b & subset) {
      blocks.push_back(compress(b & subset, subset));
    }
  }
  return Partition::from_blocks(popcount(subset), std::move(blocks));
}

}  // namespace chromhopf
