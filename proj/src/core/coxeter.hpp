#ifndef FINLANG_CORE_COXETER_HPP_
#define FINLANG_CORE_COXETER_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lattice.hpp"
#include "rootdata.hpp"

namespace finlang {

// Weyl group of a root datum, acting on X.  Elements are numbered in
// shortlex order of their lexicographically least reduced words, so element 0
// is the identity and lengths are nondecreasing.
class CoxeterGroup {
 public:
  static CoxeterGroup from_datum(RootDatum const& d, std::size_t order_bound = 100000);

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  int rank() const noexcept { return static_cast<int>(gens_.size()); }
  RootDatum const& datum() const noexcept { return datum_; }

  IntMatrix const& matrix(int w) const { return elements_[static_cast<std::size_t>(w)]; }
  std::vector<int> const& word(int w) const { return words_[static_cast<std::size_t>(w)]; }
  std::string name(int w) const;
  int length(int w) const { return lengths_[static_cast<std::size_t>(w)]; }
  int generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * size() + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int longest() const noexcept { return longest_; }
  std::optional<int> find(IntMatrix const& m) const;

  // Permutation of the datum's root indices.
  std::vector<int> const& root_permutation(int w) const { return root_perm_[static_cast<std::size_t>(w)]; }

  bool left_descent(int w, int i) const { return length(mul(generator(i), w)) < length(w); }
  bool right_descent(int w, int i) const { return length(mul(w, generator(i))) < length(w); }
  unsigned left_descents(int w) const;
  unsigned right_descents(int w) const;

  bool bruhat_le(int x, int w) const { return bruhat_[static_cast<std::size_t>(x * size() + w)]; }

 private:
  RootDatum datum_;
  std::vector<IntMatrix> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<int> gens_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> root_perm_;
  std::vector<bool> bruhat_;
  std::unordered_map<IntMatrix, int, IntMatrixHash> index_;
  int longest_ = 0;
};

using Polynomial = std::vector<Int>;  // coefficient of q^i at index i, trimmed

class KLTable {
 public:
  explicit KLTable(CoxeterGroup const& g);

  Polynomial const& P(int x, int w) const { return polys_[static_cast<std::size_t>(x * n_ + w)]; }
  // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} for x < w, else 0.
  Int mu(int x, int w) const { return mu_[static_cast<std::size_t>(x * n_ + w)]; }
  // mu(x, y) or mu(y, x), whichever is defined.
  Int mu_sym(int x, int y) const { return mu(x, y) != 0 ? mu(x, y) : mu(y, x); }
  int size() const noexcept { return n_; }

 private:
  int n_;
  std::vector<Polynomial> polys_;
  std::vector<Int> mu_;
};

struct CellPartition {
  std::vector<std::vector<int>> left_cells;
  std::vector<std::vector<int>> right_cells;
  std::vector<std::vector<int>> two_sided_cells;
  std::vector<int> left_of;
  std::vector<int> right_of;
  std::vector<int> cell_of;  // two-sided cell id

  bool operator==(CellPartition const&) const = default;
};

// Strongly connected components of the mu-preorder graphs.  Cells are
// numbered by their least element; visit_order only changes traversal.
CellPartition cells(CoxeterGroup const& g, KLTable const& t, std::vector<int> const* visit_order = nullptr);

// Element map w -> a w a^-1 for a lattice automorphism a normalizing W.
std::vector<int> conjugation_map(CoxeterGroup const& g, IntMatrix const& a);

// Induced permutation of two-sided cells.  Throws if a does not normalize W
// or does not carry cells to cells.
std::vector<int> cell_action(CoxeterGroup const& g, CellPartition const& c, IntMatrix const& a);

}  // namespace finlang

#endif  // FINLANG_CORE_COXETER_HPP_
