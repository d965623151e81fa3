#include "chromhopf/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromhopf {

namespace {

// Iterated neighborhood refinement starting from vertex degrees. Colors are
// ranks of sorted signatures, so the resulting ordered coloring is invariant
// under relabeling.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    color[static_cast<std::size_t>(v)] = vertex_degree(g, v);
  }
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
        around.push_back(color[static_cast<std::size_t>(lowest(nb))]);
      }
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      const auto it = std::lower_bound(distinct.begin(), distinct.end(),
                                       signature[static_cast<std::size_t>(v)]);
      color[static_cast<std::size_t>(v)] = static_cast<int>(it - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) {
      return color;
    }
    classes = now;
  }
}

// Branch and bound over labelings that respect the refined coloring; the
// adjacency bits are read column by column so each placed vertex fixes the
// next block of bits, and the lexicographically largest string wins.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    color_ = refined_colors(g);
    std::vector<int> sorted = color_;
    std::sort(sorted.begin(), sorted.end());
    slot_color_ = sorted;
    perm_.assign(static_cast<std::size_t>(n_), -1);
    bits_.assign(static_cast<std::size_t>(n_ * (n_ - 1) / 2), 0);
  }

  std::vector<char> run() {
    search(0, 0, false);
    return best_;
  }

 private:
  void search(int slot, VertexSet used, bool ahead) {
    if (slot == n_) {
      if (best_.empty() || ahead) {
        best_ = bits_;
      }
      return;
    }
    const std::size_t offset = static_cast<std::size_t>(slot * (slot - 1) / 2);
    for (int v = 0; v < n_; ++v) {
      if ((used & (VertexSet{1} << v)) ||
          color_[static_cast<std::size_t>(v)] != slot_color_[static_cast<std::size_t>(slot)]) {
        continue;
      }
      for (int i = 0; i < slot; ++i) {
        bits_[offset + static_cast<std::size_t>(i)] =
            g_.has_edge(perm_[static_cast<std::size_t>(i)], v) ? 1 : 0;
      }
      bool now_ahead = ahead || best_.empty();
      if (!now_ahead) {
        const auto first = bits_.begin() + static_cast<std::ptrdiff_t>(offset);
        const auto best_first = best_.begin() + static_cast<std::ptrdiff_t>(offset);
        const auto cmp = std::lexicographical_compare_three_way(first, first + slot, best_first,
                                                                best_first + slot);
        if (cmp < 0) {
          continue;
        }
        now_ahead = cmp > 0;
      }
      perm_[static_cast<std::size_t>(slot)] = v;
      search(slot + 1, used | (VertexSet{1} << v), now_ahead);
      // Any leaf below has been compared and best_ now shares this prefix.
      ahead = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<int> perm_;
  std::vector<char> bits_;
  std::vector<char> best_;
};

}  // namespace

int CanonicalKey::order() const {
  return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]);
}

Graph CanonicalKey::representative() const {
  const int n = order();
  Graph g(n);
  std::size_t index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const auto byte = static_cast<unsigned char>(bytes_[1 + index / 8]);
      if (byte & (1u << (7 - index % 8))) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

CanonicalKey canonical_key(const Graph& g) {
  if (!is_connected(g) || g.order() == 0) {
    throw std::domain_error("canonical_key needs a connected, nonempty graph");
  }
  const std::vector<char> bits = Canonizer(g).run();
  std::string bytes(1 + (bits.size() + 7) / 8, '\0');
  bytes[0] = static_cast<char>(g.order());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      bytes[1 + i / 8] = static_cast<char>(static_cast<unsigned char>(bytes[1 + i / 8]) |
                                           (1u << (7 - i % 8)));
    }
  }
  return CanonicalKey(std::move(bytes));
}

Monomial::Monomial(std::vector<CanonicalKey> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

int Monomial::order() const {
  int n = 0;
  for (const auto& f : factors_) {
    n += f.order();
  }
  return n;
}

Monomial Monomial::without_singletons() const {
  std::vector<CanonicalKey> kept;
  for (const auto& f : factors_) {
    if (f.order() != 1) {
      kept.push_back(f);
    }
  }
  return Monomial(std::move(kept));
}

Graph Monomial::graph() const {
  Graph g;
  for (const auto& f : factors_) {
    g = disjoint_union(g, f.representative());
  }
  return g;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<CanonicalKey> merged;
  merged.reserve(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(merged));
  Monomial m;
  m.factors_ = std::move(merged);
  return m;
}

Monomial monomial_key(const Graph& g) {
  std::vector<CanonicalKey> factors;
  for (VertexSet c : connected_components(g)) {
    factors.push_back(canonical_key(restrict(g, c)));
  }
  return Monomial(std::move(factors));
}

bool isomorphic(const Graph& a, const Graph& b) { return monomial_key(a) == monomial_key(b); }

const CanonicalKey& k1_key() {
  static const CanonicalKey key = canonical_key(Graph(1));
  return key;
}

}  // namespace chromhopf
