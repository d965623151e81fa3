#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "chromhopf/characters.hpp"
#include "chromhopf/graph.hpp"
#include "chromhopf/lincomb.hpp"
#include "chromhopf/partition.hpp"
#include "chromhopf/polynomial.hpp"

namespace chromhopf {

/// Word over positive integers whose letters are exactly {1, ..., max}.
class PackedWord {
 public:
  PackedWord() = default;
  /// Throws std::domain_error unless the letters are packed.
  explicit PackedWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  /// 0 for the empty word.
  int max_letter() const;
  /// "121"; letters above 9 are separated by dots, as in "1.10.2".
  std::string str() const;

  friend auto operator<=>(const PackedWord&, const PackedWord&) = default;

 private:
  std::vector<int> letters_;
};

bool is_packed(const std::vector<int>& word);
/// Order-preserving relabeling of the letters onto {1, ..., m}.
PackedWord pack(const std::vector<int>& word);
/// Fibers {w^-1(1), ..., w^-1(max)} as a set partition of the positions.
Partition partition_of_word(const PackedWord& w);

using WSymElement = LinComb<Partition>;
using WordElement = LinComb<PackedWord>;
using WSymTensor = LinComb<std::pair<Partition, Partition>>;

/// W_π as the sum of the k! packed words with fiber partition π.
WordElement expand_W(const Partition& pi);
WordElement expand(const WSymElement& x);

/// Sum of W over partitions of [k+l] whose packed restrictions to [k] and to
/// its complement are π and π'.
WSymElement wsym_product(const Partition& pi, const Partition& rho);
WSymElement wsym_product(const WSymElement& x, const WSymElement& y);
/// Sum over subsets of blocks, each side packed.
WSymTensor wsym_coproduct(const Partition& pi);
WSymTensor wsym_coproduct(const WSymElement& x);

/// Noncommutative chromatic morphism: Σ over independent partitions of W_π.
WSymElement nc_chromatic(const Graph& g);
/// Direct word sum over packed valid colorings.
WordElement nc_chromatic_words(const Graph& g);

/// Σ over packed colorings f of the word read on G/~_f, where the classes of
/// ~_f are the connected components of the fibers of f.
WordElement phi0_nc(const Graph& g);
GraphMorphism<WordElement> phi0_nc_morphism();

/// Word w -> hilbert(max w). On the W basis this is W_π -> X(X-1)...(X-k+1).
Polynomial hilbert_projection(const WordElement& x);
Polynomial hilbert_projection(const WSymElement& x);

/// Complete multipartite graph whose parts are the blocks of π.
Graph multipartite_witness(const Partition& pi);

}  // namespace chromhopf
