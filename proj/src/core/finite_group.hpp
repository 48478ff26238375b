#ifndef FINLANG_CORE_FINITE_GROUP_HPP_
#define FINLANG_CORE_FINITE_GROUP_HPP_

// Abstract finite groups given by multiplication tables, and the twisted
// conjugation machinery behind every packet count.

#include <functional>
#include <string>
#include <vector>

namespace finlang {

// An automorphism is stored as the image of each element index.
using Automorphism = std::vector<int>;

class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  // Verifies the group axioms; element 0 must be the identity.
  static FiniteGroup from_table(std::vector<int> table, std::vector<std::string> labels);

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const noexcept { return 0; }
  std::string const& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  bool is_abelian() const;
  int element_order(int a) const;

  int class_count() const;

  // Subgroup on the given elements (identity must be present), relabelled
  // 0..k-1 in the given order after moving the identity first.
  FiniteGroup subgroup(std::vector<int> const& elements) const;

  bool operator==(FiniteGroup const&) const = default;

 private:
  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

Automorphism identity_automorphism(FiniteGroup const& g);
bool is_automorphism(FiniteGroup const& g, Automorphism const& f);
Automorphism compose(Automorphism const& f, Automorphism const& g);  // f after g
Automorphism inner_automorphism(FiniteGroup const& g, int h);        // x -> h x h^-1
int automorphism_order(Automorphism const& f);

// Orbits of b . a = b a f(b)^-1, each sorted, ordered by least element.
std::vector<std::vector<int>> twisted_classes(FiniteGroup const& g, Automorphism const& f);

// {b : b x f(b)^-1 = x}.
std::vector<int> twisted_centralizer(FiniteGroup const& g, Automorphism const& f, int x);

// sum over twisted classes of the class count of the twisted centralizer.
int mbar_count(FiniteGroup const& g, Automorphism const& f);

// A group acting on a finite set; returns sum over orbits of the class count
// of the point stabilizer (the number of simple equivariant objects).
int equivariant_simple_count(FiniteGroup const& g, int set_size, std::function<int(int, int)> const& act);

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

// N x| H with h acting on N by action[h] (an automorphism of N).
// Element (n, h) has index n + |N| * h.
FiniteGroup semidirect_product(FiniteGroup const& n, FiniteGroup const& h,
                               std::vector<Automorphism> const& action);

// Isomorphism-invariant description: trivial, Z/n, Z/2xZ/2, S3, or
// "order-n/k-classes".
std::string describe_group(FiniteGroup const& g);

// Brute-force isomorphism test for small groups.
bool is_isomorphic(FiniteGroup const& a, FiniteGroup const& b);

}  // namespace finlang

#endif  // FINLANG_CORE_FINITE_GROUP_HPP_
