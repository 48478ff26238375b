#ifndef FINLANG_CORE_LATTICE_HPP_
#define FINLANG_CORE_LATTICE_HPP_

// Exact integer linear algebra on free Z-modules: small dense matrices,
// Smith normal form, and torsion points of V = L (x) Q/Z.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace finlang {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using Rational = boost::rational<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(std::vector<IntVector> const& rows);
  // Matrix whose j-th column is cols[j].
  static IntMatrix from_columns(std::vector<IntVector> const& cols, int rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix operator*(IntMatrix const& rhs) const;
  IntVector operator*(IntVector const& v) const;
  IntMatrix operator-(IntMatrix const& rhs) const;
  IntMatrix scaled(Int k) const;
  IntMatrix transpose() const;
  IntVector column(int c) const;

  bool is_identity() const;
  std::vector<Int> const& data() const noexcept { return data_; }

  bool operator==(IntMatrix const&) const = default;
  auto operator<=>(IntMatrix const& rhs) const {
    if (auto c = rows_ <=> rhs.rows_; c != 0) return c;
    if (auto c = cols_ <=> rhs.cols_; c != 0) return c;
    return data_ <=> rhs.data_;
  }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

struct IntMatrixHash {
  std::size_t operator()(IntMatrix const& m) const noexcept;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(IntMatrix const& m);

// Exact inverse over Q; nullopt for singular input.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(IntMatrix const& m);

// Inverse of a unimodular matrix; nullopt if the inverse is not integral.
std::optional<IntMatrix> integral_inverse(IntMatrix const& m);

// Solve m * x = b over Z; nullopt if no integral solution exists (m square, invertible over Q).
std::optional<IntVector> solve_integral(IntMatrix const& m, IntVector const& b);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(IntMatrix const& a);

Int gcd(Int a, Int b);
Int mod(Int a, Int m);

// A point of L (x) Q/Z with coordinates num[i]/den, reduced so that den is the
// exact order of the point.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  explicit TorsionPoint(int rank) : num_(static_cast<std::size_t>(rank), 0) {}
  TorsionPoint(IntVector num, Int den);

  int rank() const noexcept { return static_cast<int>(num_.size()); }
  Int order() const noexcept { return den_; }
  IntVector const& numerators() const noexcept { return num_; }
  Rational coordinate(int i) const { return Rational(num_[static_cast<std::size_t>(i)], den_); }
  bool is_zero() const noexcept { return den_ == 1; }

  // <v, s> mod 1 for an integral dual vector v, as a fraction in [0, 1).
  Rational pair(IntVector const& v) const;
  bool pairs_integrally(IntVector const& v) const { return pair(v).numerator() == 0; }

  TorsionPoint scaled(Int k) const;
  // m * s, for m acting on the lattice coordinates.
  TorsionPoint transformed(IntMatrix const& m) const;

  // "(0,1/2)" style label.
  std::string label() const;

  bool operator==(TorsionPoint const&) const = default;
  // Lexicographic on rational coordinate values.
  std::strong_ordering operator<=>(TorsionPoint const& rhs) const;

 private:
  IntVector num_;
  Int den_ = 1;
};

}  // namespace finlang

#endif  // FINLANG_CORE_LATTICE_HPP_
