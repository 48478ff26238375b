#ifndef FINLANG_CORE_ORACLE_HPP_
#define FINLANG_CORE_ORACLE_HPP_

// Brute-force ground truth: G(F_q) as an explicit finite group and its number
// of conjugacy classes.

#include <cstdint>
#include <string>
#include <vector>

namespace finlang {

// F_q for q <= 64 via Zech-style log tables.  Elements are 0..q-1: the
// base-p digits of a polynomial in the primitive element.
class Fq {
 public:
  explicit Fq(int q);

  int q() const noexcept { return q_; }
  int p() const noexcept { return p_; }
  int degree() const noexcept { return e_; }

  int zero() const noexcept { return 0; }
  int one() const noexcept { return 1; }
  // zeta^k for the fixed primitive element zeta.
  int power_of_generator(int k) const;
  int log(int a) const;  // a != 0

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;

 private:
  int q_, p_, e_;
  std::vector<int> exp_;  // exp_[k] = zeta^k, k < q-1
  std::vector<int> log_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

// Elements are stored as byte strings (matrix entries or permutation images).
struct FiniteMatrixGroup {
  std::string name;
  int q = 0;
  int degree = 0;             // matrix size, or number of permuted points
  bool permutation = false;   // PGL_n as a permutation group
  std::vector<std::string> generators;
  std::vector<std::string> elements;  // BFS order from the identity

  std::size_t order() const noexcept { return elements.size(); }
};

// name in {gl1..gl3, sl2, sl3, pgl2, pgl3, sp4, so5, torus1, o2}.
FiniteMatrixGroup build_group(std::string const& name, int q, std::size_t order_cap = 1000000);

std::size_t class_count(FiniteMatrixGroup const& g);

// Classical order formula for the named group, for cross-checking.
std::uint64_t expected_order(std::string const& name, std::uint64_t q);

std::vector<std::string> oracle_group_names();

}  // namespace finlang

#endif  // FINLANG_CORE_ORACLE_HPP_
