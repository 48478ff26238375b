#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace finlang {

Fq::Fq(int q) : q_(q) {
  if (q < 2 || q > 64) throw_unsupported("oracle fields are limited to q <= 64");
  p_ = 2;
  while (q % p_ != 0) ++p_;
  e_ = 0;
  for (int r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw_config("q = " + std::to_string(q) + " is not a prime power");
    ++e_;
  }

  auto digits = [&](int a) {
    std::vector<int> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  };
  auto encode = [&](std::vector<int> const& d) {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
    return a;
  };

  add_.resize(static_cast<std::size_t>(q * q));
  neg_.resize(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    auto const da = digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = encode(dn);
    for (int b = 0; b < q; ++b) {
      auto const db = digits(b);
      std::vector<int> ds(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[static_cast<std::size_t>(a * q + b)] = encode(ds);
    }
  }

  // Search monic f(x) = x^e + c(x) until x has multiplicative order q - 1.
  for (int c = 0; c < q; ++c) {
    auto const coeff = digits(c);
    std::vector<int> cur(static_cast<std::size_t>(e_), 0);
    cur[0] = 1;
    std::vector<int> seq;
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    bool ok = true;
    for (int k = 0; k < q - 1; ++k) {
      int const enc = encode(cur);
      if (enc == 0 || seen[static_cast<std::size_t>(enc)]) {
        ok = false;
        break;
      }
      seen[static_cast<std::size_t>(enc)] = true;
      seq.push_back(enc);
      // cur *= x modulo f.
      int const top = cur[static_cast<std::size_t>(e_ - 1)];
      for (int i = e_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      for (int i = 0; i < e_; ++i)
        cur[static_cast<std::size_t>(i)] = ((cur[static_cast<std::size_t>(i)] - top * coeff[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
    }
    if (ok && encode(cur) == 1) {
      exp_ = std::move(seq);
      break;
    }
  }
  FINLANG_CHECK(static_cast<int>(exp_.size()) == q - 1, "no primitive polynomial found");
  log_.assign(static_cast<std::size_t>(q), -1);
  for (int k = 0; k < q - 1; ++k) log_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(k)])] = k;
}

int Fq::power_of_generator(int k) const {
  int const m = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % m) + m) % m)];
}

int Fq::log(int a) const {
  FINLANG_CHECK(a != 0, "log of zero");
  return log_[static_cast<std::size_t>(a)];
}

int Fq::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return power_of_generator(log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)]);
}

int Fq::inv(int a) const {
  FINLANG_CHECK(a != 0, "inverse of zero");
  return power_of_generator(-log_[static_cast<std::size_t>(a)]);
}

namespace {

using Matrix = std::vector<int>;  // row-major n x n
using Mul = std::function<std::string(std::string const&, std::string const&)>;

std::string encode_matrix(Matrix const& m) { return std::string(m.begin(), m.end()); }

Matrix decode_matrix(std::string const& s) { return Matrix(s.begin(), s.end()); }

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

Matrix mat_mul(Fq const& f, Matrix const& a, Matrix const& b, int n) {
  Matrix c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int const x = a[static_cast<std::size_t>(i * n + k)];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i * n + j)] = f.add(c[static_cast<std::size_t>(i * n + j)], f.mul(x, b[static_cast<std::size_t>(k * n + j)]));
    }
  return c;
}

Matrix transpose(Matrix const& a, int n) {
  Matrix t(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j * n + i)] = a[static_cast<std::size_t>(i * n + j)];
  return t;
}

Matrix elementary(Fq const& f, int n, int i, int j, int t) {
  Matrix m = identity_matrix(n);
  m[static_cast<std::size_t>(i * n + j)] = f.add(m[static_cast<std::size_t>(i * n + j)], t);
  return m;
}

std::vector<std::string> closure(std::string const& identity, std::vector<std::string> const& gens, Mul const& mul,
                                 std::size_t cap) {
  std::vector<std::string> elems{identity};
  std::unordered_set<std::string> seen{identity};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : gens) {
      std::string y = mul(elems[i], g);
      if (seen.insert(y).second) {
        elems.push_back(std::move(y));
        if (elems.size() > cap) throw_unsupported("oracle group order exceeds the bound of " + std::to_string(cap));
      }
    }
  }
  return elems;
}

// Transvection generators; diag(zeta, 1, ...) added for GL.
std::vector<Matrix> linear_generators(Fq const& f, int n, bool general) {
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < f.degree(); ++k) gens.push_back(elementary(f, n, i, j, f.power_of_generator(k)));
    }
  if (general) {
    Matrix d = identity_matrix(n);
    d[0] = f.power_of_generator(1);
    gens.push_back(d);
  }
  return gens;
}

// Normalized representatives of P^{n-1}(F_q): first nonzero coordinate 1.
std::vector<std::vector<int>> projective_points(Fq const& f, int n) {
  std::vector<std::vector<int>> pts;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      if (nz != v.end() && *nz == 1) pts.push_back(v);
      return;
    }
    for (int a = 0; a < f.q(); ++a) {
      v[static_cast<std::size_t>(i)] = a;
      walk(i + 1);
    }
  };
  walk(0);
  return pts;
}

std::string encode_perm(std::vector<int> const& p) {
  std::string s;
  for (int x : p) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>(x >> 8));
  }
  return s;
}

int perm_at(std::string const& s, std::size_t i) {
  return static_cast<unsigned char>(s[2 * i]) | (static_cast<unsigned char>(s[2 * i + 1]) << 8);
}

std::string perm_mul(std::string const& a, std::string const& b) {
  std::size_t const n = a.size() / 2;
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = perm_at(a, static_cast<std::size_t>(perm_at(b, i)));
  return encode_perm(c);
}

bool preserves_form(Fq const& f, Matrix const& g, Matrix const& j, int n) {
  return mat_mul(f, mat_mul(f, transpose(g, n), j, n), g, n) == j;
}

}  // namespace

std::uint64_t expected_order(std::string const& name, std::uint64_t q) {
  auto gl = [&](int n) {
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    std::uint64_t out = 1, qi = 1;
    for (int i = 0; i < n; ++i, qi *= q) out *= qn - qi;
    return out;
  };
  if (name == "gl1" || name == "torus1") return q - 1;
  if (name == "gl2") return gl(2);
  if (name == "gl3") return gl(3);
  if (name == "sl2" || name == "pgl2") return gl(2) / (q - 1);
  if (name == "sl3" || name == "pgl3") return gl(3) / (q - 1);
  if (name == "sp4" || name == "so5") return q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
  if (name == "o2") return 2 * (q - 1);
  throw_config("unknown oracle group '" + name + "'");
}

std::vector<std::string> oracle_group_names() {
  return {"gl1", "gl2", "gl3", "sl2", "sl3", "pgl2", "pgl3", "sp4", "so5", "torus1", "o2"};
}

FiniteMatrixGroup build_group(std::string const& name, int q, std::size_t order_cap) {
  auto names = oracle_group_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw_config("unknown oracle group '" + name + "'");
  if (name == "so5" && q % 2 == 0) throw_unsupported("so5 oracle requires odd q");
  Fq const f(q);
  std::uint64_t const target = expected_order(name, static_cast<std::uint64_t>(q));
  if (target > order_cap) throw_unsupported(name + "(F_" + std::to_string(q) + ") has order " + std::to_string(target) + ", above the bound " + std::to_string(order_cap));

  FiniteMatrixGroup g;
  g.name = name;
  g.q = q;

  if (name == "pgl2" || name == "pgl3") {
    int const n = name == "pgl2" ? 2 : 3;
    auto const pts = projective_points(f, n);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    auto act = [&](Matrix const& m) {
      std::vector<int> img(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            w[static_cast<std::size_t>(r)] = f.add(w[static_cast<std::size_t>(r)], f.mul(m[static_cast<std::size_t>(r * n + c)], pts[i][static_cast<std::size_t>(c)]));
        int const lead = *std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
        int const scale = f.inv(lead);
        for (auto& x : w) x = f.mul(x, scale);
        img[i] = index.at(w);
      }
      return encode_perm(img);
    };
    g.permutation = true;
    g.degree = static_cast<int>(pts.size());
    for (auto const& m : linear_generators(f, n, true)) g.generators.push_back(act(m));
    std::vector<int> id(pts.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    g.elements = closure(encode_perm(id), g.generators, perm_mul, order_cap);
  } else {
    int n = 0;
    std::vector<Matrix> gens;
    if (name == "gl1" || name == "torus1") {
      n = 1;
      gens = {{f.power_of_generator(1)}};
    } else if (name == "gl2" || name == "sl2") {
      n = 2;
      gens = linear_generators(f, n, name == "gl2");
    } else if (name == "gl3" || name == "sl3") {
      n = 3;
      gens = linear_generators(f, n, name == "gl3");
    } else if (name == "o2") {
      n = 2;
      int const z = f.power_of_generator(1);
      gens = {{z, 0, 0, f.inv(z)}, {0, 1, 1, 0}};
    } else if (name == "sp4") {
      n = 4;
      Matrix j(16, 0);
      j[0 * 4 + 2] = 1;
      j[1 * 4 + 3] = 1;
      j[2 * 4 + 0] = f.neg(1);
      j[3 * 4 + 1] = f.neg(1);
      for (int k = 0; k < f.degree(); ++k) {
        int const t = f.power_of_generator(k);
        int const mt = f.neg(t);
        // Levi part [[A, 0], [0, A^-T]].
        Matrix a = identity_matrix(4);
        a[0 * 4 + 1] = t;
        a[3 * 4 + 2] = mt;
        gens.push_back(a);
        Matrix b = identity_matrix(4);
        b[1 * 4 + 0] = t;
        b[2 * 4 + 3] = mt;
        gens.push_back(b);
        // Unipotent radicals [[I, B], [0, I]] and transposes, B symmetric.
        for (int which = 0; which < 3; ++which) {
          Matrix u = identity_matrix(4);
          if (which == 0) u[0 * 4 + 2] = t;
          if (which == 1) u[1 * 4 + 3] = t;
          if (which == 2) {
            u[0 * 4 + 3] = t;
            u[1 * 4 + 2] = t;
          }
          gens.push_back(u);
          gens.push_back(transpose(u, 4));
        }
      }
      for (auto const& m : gens) FINLANG_CHECK(preserves_form(f, m, j, 4), "sp4 generator is not symplectic");
    } else if (name == "so5") {
      n = 5;
      Matrix j(25, 0);
      j[0 * 5 + 4] = 1;
      j[4 * 5 + 0] = 1;
      j[1 * 5 + 3] = 1;
      j[3 * 5 + 1] = 1;
      j[2 * 5 + 2] = 2 % f.p();
      auto bform = [&](std::vector<int> const& x, std::vector<int> const& y) {
        int acc = 0;
        for (int r = 0; r < 5; ++r)
          for (int c = 0; c < 5; ++c) acc = f.add(acc, f.mul(x[static_cast<std::size_t>(r)], f.mul(j[static_cast<std::size_t>(r * 5 + c)], y[static_cast<std::size_t>(c)])));
        return acc;
      };
      auto reflection = [&](std::vector<int> const& v) {
        // x -> x - (2 B(x,v) / B(v,v)) v
        int const coef = f.mul(2 % f.p(), f.inv(bform(v, v)));
        Matrix m = identity_matrix(5);
        std::vector<int> jv(5, 0);
        for (int c = 0; c < 5; ++c)
          for (int r = 0; r < 5; ++r) jv[static_cast<std::size_t>(c)] = f.add(jv[static_cast<std::size_t>(c)], f.mul(v[static_cast<std::size_t>(r)], j[static_cast<std::size_t>(r * 5 + c)]));
        for (int r = 0; r < 5; ++r)
          for (int c = 0; c < 5; ++c)
            m[static_cast<std::size_t>(r * 5 + c)] = f.sub(m[static_cast<std::size_t>(r * 5 + c)], f.mul(coef, f.mul(v[static_cast<std::size_t>(r)], jv[static_cast<std::size_t>(c)])));
        return m;
      };
      Matrix const r0 = reflection({0, 0, 1, 0, 0});
      std::vector<std::string> chosen;
      std::unordered_set<std::string> current{encode_matrix(identity_matrix(5))};
      auto mul5 = [&](std::string const& a, std::string const& b) {
        return encode_matrix(mat_mul(f, decode_matrix(a), decode_matrix(b), 5));
      };
      std::vector<int> v(5, 0);
      bool done = false;
      std::function<void(int)> walk = [&](int i) {
        if (done) return;
        if (i == 5) {
          if (bform(v, v) == 0) return;
          Matrix const cand = mat_mul(f, r0, reflection(v), 5);
          std::string const enc = encode_matrix(cand);
          if (current.count(enc)) return;
          chosen.push_back(enc);
          auto elems = closure(encode_matrix(identity_matrix(5)), chosen, mul5, order_cap);
          current = std::unordered_set<std::string>(elems.begin(), elems.end());
          if (current.size() == target) done = true;
          return;
        }
        for (int a = 0; a < f.q() && !done; ++a) {
          v[static_cast<std::size_t>(i)] = a;
          walk(i + 1);
        }
      };
      walk(0);
      for (auto const& s : chosen) gens.push_back(decode_matrix(s));
      for (auto const& m : gens) FINLANG_CHECK(preserves_form(f, m, j, 5), "so5 generator is not orthogonal");
    }
    g.degree = n;
    for (auto const& m : gens) g.generators.push_back(encode_matrix(m));
    auto mul = [&f, n](std::string const& a, std::string const& b) {
      return encode_matrix(mat_mul(f, decode_matrix(a), decode_matrix(b), n));
    };
    g.elements = closure(encode_matrix(identity_matrix(n)), g.generators, mul, order_cap);
  }

  if (g.order() != target) {
    throw_internal("oracle group " + name + "(F_" + std::to_string(q) + ") has order " + std::to_string(g.order()) +
                   ", expected " + std::to_string(target));
  }
  return g;
}

std::size_t class_count(FiniteMatrixGroup const& g) {
  Fq const f(g.q);
  int const n = g.degree;
  Mul mul;
  if (g.permutation) {
    mul = perm_mul;
  } else {
    mul = [&f, n](std::string const& a, std::string const& b) {
      return encode_matrix(mat_mul(f, decode_matrix(a), decode_matrix(b), n));
    };
  }
  std::string const& id = g.elements.front();
  std::vector<std::pair<std::string, std::string>> conj;  // (g, g^-1)
  for (auto const& s : g.generators) {
    std::string prev = s, cur = mul(s, s);
    if (s == id) continue;
    while (cur != id) {
      prev = cur;
      cur = mul(cur, s);
    }
    conj.emplace_back(s, prev);
  }
  std::unordered_map<std::string, int> index;
  index.reserve(g.elements.size() * 2);
  for (std::size_t i = 0; i < g.elements.size(); ++i) index.emplace(g.elements[i], static_cast<int>(i));

  std::vector<bool> seen(g.elements.size(), false);
  std::size_t classes = 0;
  std::size_t covered = 0;
  for (std::size_t start = 0; start < g.elements.size(); ++start) {
    if (seen[start]) continue;
    ++classes;
    std::vector<int> stack{static_cast<int>(start)};
    seen[start] = true;
    while (!stack.empty()) {
      int const x = stack.back();
      stack.pop_back();
      ++covered;
      for (auto const& [s, sinv] : conj) {
        int const y = index.at(mul(mul(s, g.elements[static_cast<std::size_t>(x)]), sinv));
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
  }
  FINLANG_CHECK(covered == g.elements.size(), "class sizes do not sum to the group order");
  return classes;
}

}  // namespace finlang
