#include "chromhopf/wsym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chromhopf/chromatic.hpp"

namespace chromhopf {

namespace {

// Calls visit(word) for every packed word of the given length.
template <class F>
void for_each_packed_word(int n, F&& visit) {
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  while (true) {
    if (is_packed(word)) {
      visit(word);
    }
    int i = n - 1;
    while (i >= 0 && word[static_cast<std::size_t>(i)] == n) {
      word[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) {
      return;
    }
    ++word[static_cast<std::size_t>(i)];
  }
}

}  // namespace

PackedWord::PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_packed(letters_)) {
    throw std::domain_error("word is not packed");
  }
}

int PackedWord::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string PackedWord::str() const {
  const bool dotted = max_letter() > 9;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dotted && i > 0) {
      out += '.';
    }
    out += std::to_string(letters_[i]);
  }
  return out;
}

bool is_packed(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

PackedWord pack(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int letter : word) {
    out.push_back(
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), letter) - sorted.begin()) +
        1);
  }
  return PackedWord(std::move(out));
}

Partition partition_of_word(const PackedWord& w) { return Partition::from_labels(w.letters()); }

WordElement expand_W(const Partition& pi) {
  std::vector<int> names(static_cast<std::size_t>(pi.block_count()));
  std::iota(names.begin(), names.end(), 1);
  const std::vector<int> labels = pi.labels();
  WordElement out;
  do {
    std::vector<int> word;
    word.reserve(labels.size());
    for (int b : labels) {
      word.push_back(names[static_cast<std::size_t>(b)]);
    }
    out.add(PackedWord(std::move(word)), Rational(1));
  } while (std::next_permutation(names.begin(), names.end()));
  return out;
}

WordElement expand(const WSymElement& x) {
  return x.apply([](const Partition& pi) { return expand_W(pi); });
}

WSymElement wsym_product(const Partition& pi, const Partition& rho) {
  const int k = pi.ground_size();
  const int l = rho.ground_size();
  const VertexSet left = full_set(k);
  const VertexSet right = full_set(k + l) & ~left;
  WSymElement out;
  for_each_set_partition(k + l, [&](const Partition& omega) {
    if (restrict_partition(omega, left) == pi && restrict_partition(omega, right) == rho) {
      out.add(omega, Rational(1));
    }
  });
  return out;
}

WSymElement wsym_product(const WSymElement& x, const WSymElement& y) {
  return multiply(x, y, [](const Partition& a, const Partition& b) { return wsym_product(a, b); });
}

WSymTensor wsym_coproduct(const Partition& pi) {
  const auto& blocks = pi.blocks();
  const std::size_t k = blocks.size();
  const VertexSet all = full_set(pi.ground_size());
  WSymTensor out;
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << k); ++chosen) {
    VertexSet support = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((chosen >> i) & 1u) {
        support |= blocks[i];
      }
    }
    out.add({restrict_partition(pi, support), restrict_partition(pi, all & ~support)},
            Rational(1));
  }
  return out;
}

WSymTensor wsym_coproduct(const WSymElement& x) {
  return x.apply([](const Partition& pi) { return wsym_coproduct(pi); });
}

WSymElement nc_chromatic(const Graph& g) {
  WSymElement out;
  for (const Partition& pi : independent_partitions(g)) {
    out.add(pi, Rational(1));
  }
  return out;
}

WordElement nc_chromatic_words(const Graph& g) {
  const auto edges = g.edges();
  WordElement out;
  for_each_packed_word(g.order(), [&](const std::vector<int>& f) {
    for (const Edge& e : edges) {
      if (f[static_cast<std::size_t>(e.u)] == f[static_cast<std::size_t>(e.v)]) {
        return;
      }
    }
    out.add(PackedWord(f), Rational(1));
  });
  return out;
}

WordElement phi0_nc(const Graph& g) {
  const int n = g.order();
  WordElement out;
  for_each_packed_word(n, [&](const std::vector<int>& f) {
    std::vector<VertexSet> fibers(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
      fibers[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] |= VertexSet{1} << v;
    }
    std::vector<VertexSet> classes;
    for (VertexSet fiber : fibers) {
      for (VertexSet rest = fiber; rest;) {
        const VertexSet c = component_of(g, lowest(rest), rest);
        classes.push_back(c);
        rest &= ~c;
      }
    }
    const Partition p = Partition::from_blocks(n, std::move(classes));
    std::vector<int> word;
    for (VertexSet block : p.blocks()) {
      word.push_back(f[static_cast<std::size_t>(lowest(block))]);
    }
    out.add(PackedWord(std::move(word)), Rational(1));
  });
  return out;
}

GraphMorphism<WordElement> phi0_nc_morphism() { return GraphMorphism<WordElement>(phi0_nc); }

Polynomial hilbert_projection(const WordElement& x) {
  Polynomial out;
  for (const auto& [w, c] : x) {
    out += hilbert(w.max_letter()) * c;
  }
  return out;
}

Polynomial hilbert_projection(const WSymElement& x) {
  Polynomial out;
  for (const auto& [pi, c] : x) {
    out += falling_factorial(pi.block_count()) * c;
  }
  return out;
}

Graph multipartite_witness(const Partition& pi) {
  const int n = pi.ground_size();
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pi.block_of(u) != pi.block_of(v)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace chromhopf
