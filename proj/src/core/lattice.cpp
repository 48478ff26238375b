#include "lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace finlang {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> const& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  int const c = static_cast<int>(rows.front().size());
  IntMatrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw_config("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::vector<IntVector> const& cols, int rows) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return m;
}

IntMatrix IntMatrix::operator*(IntMatrix const& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      Int const a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntVector IntMatrix::operator*(IntVector const& v) const {
  IntVector out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator-(IntMatrix const& rhs) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::scaled(Int k) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= k;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntVector IntMatrix::column(int c) const {
  IntVector out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, c);
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t IntMatrixHash::operator()(IntMatrix const& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.rows()) * 31u + static_cast<std::size_t>(m.cols());
  for (Int x : m.data()) h = h * 1000003u ^ std::hash<Int>{}(x);
  return h;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int determinant(IntMatrix const& m) {
  int const n = m.rows();
  if (n != m.cols()) throw_internal("determinant of non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(static_cast<std::size_t>(n), std::vector<__int128>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (a[K][K] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[static_cast<std::size_t>(r)][K] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[K], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
        a[I][J] = (a[I][J] * a[K][K] - a[I][K] * a[K][J]) / prev;
      }
    }
    prev = a[K][K];
  }
  auto const last = static_cast<std::size_t>(n - 1);
  return static_cast<Int>(a[last][last]) * sign;
}

std::optional<std::vector<std::vector<Rational>>> rational_inverse(IntMatrix const& m) {
  int const n = m.rows();
  if (n != m.cols()) return std::nullopt;
  auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) a[i][j] = m(static_cast<int>(i), static_cast<int>(j));
    a[i][N + i] = 1;
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    while (pivot < N && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == N) return std::nullopt;
    std::swap(a[pivot], a[col]);
    Rational const inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      Rational const f = a[r][col];
      for (std::size_t j = 0; j < 2 * N; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> out(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = a[i][N + j];
  return out;
}

std::optional<IntMatrix> integral_inverse(IntMatrix const& m) {
  auto inv = rational_inverse(m);
  if (!inv) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      Rational const& x = (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (x.denominator() != 1) return std::nullopt;
      out(i, j) = x.numerator();
    }
  }
  return out;
}

std::optional<IntVector> solve_integral(IntMatrix const& m, IntVector const& b) {
  auto inv = rational_inverse(m);
  if (!inv) return std::nullopt;
  IntVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < b.size(); ++j) acc += (*inv)[i][j] * b[j];
    if (acc.denominator() != 1) return std::nullopt;
    out[i] = acc.numerator();
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] -= k * row[source]
void add_row(IntMatrix& m, int target, int source, Int k) {
  for (int j = 0; j < m.cols(); ++j) m(target, j) -= k * m(source, j);
}

void add_col(IntMatrix& m, int target, int source, Int k) {
  for (int i = 0; i < m.rows(); ++i) m(i, target) -= k * m(i, source);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& a) {
  SmithForm out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& D = out.D;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  int const n = std::min(a.rows(), a.cols());
  for (int t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      for (int i = t; i < D.rows(); ++i) {
        for (int j = t; j < D.cols(); ++j) {
          if (D(i, j) != 0 && (pr < 0 || std::llabs(D(i, j)) < std::llabs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) return out;  // trailing block is zero
      swap_rows(D, t, pr);
      swap_rows(U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(V, t, pc);

      bool clean = true;
      for (int i = t + 1; i < D.rows(); ++i) {
        Int const k = D(i, t) / D(t, t);
        if (k != 0) {
          add_row(D, i, t, k);
          add_row(U, i, t, k);
        }
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < D.cols(); ++j) {
        Int const k = D(t, j) / D(t, t);
        if (k != 0) {
          add_col(D, j, t, k);
          add_col(V, j, t, k);
        }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      int bad_row = -1;
      for (int i = t + 1; i < D.rows() && bad_row < 0; ++i)
        for (int j = t + 1; j < D.cols(); ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      add_row(D, t, bad_row, -1);
      add_row(U, t, bad_row, -1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  int const n = std::min(D.rows(), D.cols());
  for (int i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

TorsionPoint::TorsionPoint(IntVector num, Int den) : num_(std::move(num)), den_(den) {
  if (den_ <= 0) throw_internal("torsion point denominator must be positive");
  Int g = den_;
  for (auto& x : num_) {
    x = mod(x, den_);
    g = gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : num_) x /= g;
    den_ /= g;
  }
}

Rational TorsionPoint::pair(IntVector const& v) const {
  Int acc = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) acc = mod(acc + mod(num_[i] * v[i], den_), den_);
  return Rational(acc, den_);
}

TorsionPoint TorsionPoint::scaled(Int k) const {
  IntVector n = num_;
  for (auto& x : n) x = mod(mod(x, den_) * mod(k, den_), den_);
  return TorsionPoint(std::move(n), den_);
}

TorsionPoint TorsionPoint::transformed(IntMatrix const& m) const {
  IntVector n(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc = mod(acc + m(i, j) * num_[static_cast<std::size_t>(j)], den_);
    n[static_cast<std::size_t>(i)] = acc;
  }
  return TorsionPoint(std::move(n), den_);
}

std::string TorsionPoint::label() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) os << ',';
    Rational const c(num_[i], den_);
    if (c.denominator() == 1) {
      os << c.numerator();
    } else {
      os << c.numerator() << '/' << c.denominator();
    }
  }
  os << ')';
  return os.str();
}

std::strong_ordering TorsionPoint::operator<=>(TorsionPoint const& rhs) const {
  if (auto c = num_.size() <=> rhs.num_.size(); c != 0) return c;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    __int128 const l = static_cast<__int128>(num_[i]) * rhs.den_;
    __int128 const r = static_cast<__int128>(rhs.num_[i]) * den_;
    if (l != r) return l < r ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace finlang
