#include "rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace finlang {

namespace {

Int dot(IntVector const& a, IntVector const& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntMatrix block_diagonal(IntMatrix const& a, IntMatrix const& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

// Smallest k <= bound with m^k = I, or 0.
int matrix_order(IntMatrix const& m, int bound = 24) {
  IntMatrix acc = m;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return 0;
}

// All products of the generators (a finite matrix group by assumption).
std::vector<IntMatrix> matrix_closure(std::vector<IntMatrix> const& gens, int dim, std::size_t cap = 100000) {
  std::vector<IntMatrix> elems{IntMatrix::identity(dim)};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const& g : gens) {
      IntMatrix next = elems[i] * g;
      if (seen.insert(next).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) throw_unsupported("matrix group exceeds the configured order bound");
      }
    }
  }
  return elems;
}

}  // namespace

std::optional<int> RootDatum::root_index(IntVector const& v) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots[static_cast<std::size_t>(i)] == v) return i;
  return std::nullopt;
}

std::optional<int> RootDatum::coroot_index(IntVector const& v) const {
  for (int i = 0; i < num_roots(); ++i)
    if (coroots[static_cast<std::size_t>(i)] == v) return i;
  return std::nullopt;
}

IntMatrix RootDatum::reflection(int i) const {
  auto const& a = roots[static_cast<std::size_t>(i)];
  auto const& c = coroots[static_cast<std::size_t>(i)];
  IntMatrix m = IntMatrix::identity(rank);
  for (int r = 0; r < rank; ++r)
    for (int col = 0; col < rank; ++col) m(r, col) -= a[static_cast<std::size_t>(r)] * c[static_cast<std::size_t>(col)];
  return m;
}

IntMatrix RootDatum::coreflection(int i) const { return reflection(i).transpose(); }

IntMatrix RootDatum::cartan_matrix() const {
  int const r = semisimple_rank();
  IntMatrix k(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      k(i, j) = dot(roots[static_cast<std::size_t>(simple[static_cast<std::size_t>(i)])],
                    coroots[static_cast<std::size_t>(simple[static_cast<std::size_t>(j)])]);
  return k;
}

std::optional<std::vector<int>> RootDatum::root_permutation(IntMatrix const& m) const {
  auto inv = integral_inverse(m);
  if (!inv) return std::nullopt;
  IntMatrix const dual = inv->transpose();
  std::vector<int> perm(roots.size());
  for (int i = 0; i < num_roots(); ++i) {
    auto j = root_index(m * roots[static_cast<std::size_t>(i)]);
    if (!j) return std::nullopt;
    if (dual * coroots[static_cast<std::size_t>(i)] != coroots[static_cast<std::size_t>(*j)]) return std::nullopt;
    perm[static_cast<std::size_t>(i)] = *j;
  }
  return perm;
}

IntMatrix cartan_of_type(std::string const& type) {
  if (type == "A1") return IntMatrix::from_rows({{2}});
  if (type == "A2") return IntMatrix::from_rows({{2, -1}, {-1, 2}});
  if (type == "B2") return IntMatrix::from_rows({{2, -2}, {-1, 2}});
  if (type == "C2") return IntMatrix::from_rows({{2, -1}, {-2, 2}});
  if (type == "G2") return IntMatrix::from_rows({{2, -1}, {-3, 2}});
  throw_unsupported("unsupported Cartan type '" + type + "' (supported: A1, A2, B2, C2, G2, Tn)");
}

std::string dual_type_label(std::string const& type) {
  if (type == "B2") return "C2";
  if (type == "C2") return "B2";
  return type;
}

std::vector<DatumComponent> components(RootDatum const& d) {
  IntMatrix const k = d.cartan_matrix();
  int const r = d.semisimple_rank();
  std::vector<int> comp(static_cast<std::size_t>(r), -1);
  std::vector<DatumComponent> out;
  for (int start = 0; start < r; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    int const id = static_cast<int>(out.size());
    DatumComponent c;
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      int const i = queue.front();
      queue.pop_front();
      c.simple.push_back(i);
      for (int j = 0; j < r; ++j) {
        if (comp[static_cast<std::size_t>(j)] < 0 && k(i, j) != 0) {
          comp[static_cast<std::size_t>(j)] = id;
          queue.push_back(j);
        }
      }
    }
    std::sort(c.simple.begin(), c.simple.end());
    if (c.simple.size() == 1) {
      c.type = "A1";
    } else if (c.simple.size() == 2) {
      int const a = c.simple[0], b = c.simple[1];
      Int const prod = k(a, b) * k(b, a);
      if (prod == 1) {
        c.type = "A2";
      } else if (prod == 2) {
        c.type = k(a, b) == -2 ? "B2" : "C2";
      } else if (prod == 3) {
        c.type = "G2";
      } else {
        throw_internal("rank-2 Cartan matrix with product " + std::to_string(prod));
      }
    } else {
      throw_unsupported("irreducible component of rank " + std::to_string(c.simple.size()) +
                        " is outside the supported types");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string root_system_label(RootDatum const& d) {
  std::vector<std::string> types;
  for (auto const& c : components(d)) types.push_back(c.type);
  std::sort(types.begin(), types.end());
  std::string out;
  for (auto const& t : types) {
    if (!out.empty()) out += 'x';
    out += t;
  }
  return out;
}

RootDatum build_datum(int rank, std::vector<IntVector> const& simple_roots,
                      std::vector<IntVector> const& simple_coroots, std::string label) {
  int const r = static_cast<int>(simple_roots.size());
  FINLANG_CHECK(static_cast<int>(simple_coroots.size()) == r, "simple root/coroot count mismatch");
  IntMatrix k(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) k(i, j) = dot(simple_roots[static_cast<std::size_t>(i)], simple_coroots[static_cast<std::size_t>(j)]);

  // Coordinates over the simple roots (n) and simple coroots (m).
  using Pair = std::pair<IntVector, IntVector>;
  std::set<Pair> seen;
  std::deque<Pair> queue;
  for (int i = 0; i < r; ++i) {
    IntVector e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (seen.insert({e, e}).second) queue.push_back({e, e});
  }
  while (!queue.empty()) {
    auto [n, m] = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      Int pn = 0, pm = 0;
      for (int i = 0; i < r; ++i) {
        pn += n[static_cast<std::size_t>(i)] * k(i, j);
        pm += m[static_cast<std::size_t>(i)] * k(j, i);
      }
      IntVector n2 = n, m2 = m;
      n2[static_cast<std::size_t>(j)] -= pn;
      m2[static_cast<std::size_t>(j)] -= pm;
      if (seen.insert({n2, m2}).second) {
        queue.push_back({n2, m2});
        if (seen.size() > 1000) throw_unsupported("root system too large");
      }
    }
  }

  std::vector<Pair> positive;
  for (auto const& pr : seen) {
    bool const pos = std::all_of(pr.first.begin(), pr.first.end(), [](Int x) { return x >= 0; });
    bool const neg = std::all_of(pr.first.begin(), pr.first.end(), [](Int x) { return x <= 0; });
    FINLANG_CHECK(pos || neg, "root neither positive nor negative");
    if (pos) positive.push_back(pr);
  }
  FINLANG_CHECK(positive.size() * 2 == seen.size(), "roots not closed under negation");
  auto height = [](IntVector const& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  std::sort(positive.begin(), positive.end(), [&](Pair const& a, Pair const& b) {
    Int const ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });

  RootDatum d;
  d.rank = rank;
  d.cartan_label = std::move(label);
  d.num_positive = static_cast<int>(positive.size());
  auto to_lattice = [&](IntVector const& coeffs, std::vector<IntVector> const& basis) {
    IntVector v(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < r; ++i)
      for (int c = 0; c < rank; ++c) v[static_cast<std::size_t>(c)] += coeffs[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    return v;
  };
  for (auto const& pr : positive) {
    d.roots.push_back(to_lattice(pr.first, simple_roots));
    d.coroots.push_back(to_lattice(pr.second, simple_coroots));
  }
  for (int i = 0; i < d.num_positive; ++i) {
    d.roots.push_back(negated(d.roots[static_cast<std::size_t>(i)]));
    d.coroots.push_back(negated(d.coroots[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < r; ++i) d.simple.push_back(i);

  for (int i = 0; i < d.num_roots(); ++i) {
    FINLANG_CHECK(dot(d.roots[static_cast<std::size_t>(i)], d.coroots[static_cast<std::size_t>(i)]) == 2,
                  "<alpha, alpha^vee> != 2");
  }
  for (int s : d.simple) {
    FINLANG_CHECK(d.root_permutation(d.reflection(s)).has_value(), "simple reflection does not permute roots");
  }
  return d;
}

RootDatum dual_datum(RootDatum const& d) {
  RootDatum out = d;
  std::swap(out.roots, out.coroots);
  std::string label;
  std::string token;
  std::istringstream in(d.cartan_label);
  while (std::getline(in, token, 'x')) {
    if (!label.empty()) label += 'x';
    label += dual_type_label(token);
  }
  out.cartan_label = label;
  return out;
}

SubDatum restrict_datum(RootDatum const& d, std::vector<int> const& root_subset) {
  std::vector<int> pos;
  for (int i : root_subset) {
    if (d.is_positive(i)) pos.push_back(i);
  }
  std::sort(pos.begin(), pos.end());
  FINLANG_CHECK(pos.size() * 2 == root_subset.size(), "root subset not closed under negation");

  SubDatum out;
  RootDatum& sub = out.datum;
  sub.rank = d.rank;
  sub.num_positive = static_cast<int>(pos.size());
  for (int i : pos) out.ambient_index.push_back(i);
  for (int i : pos) out.ambient_index.push_back(d.negative(i));
  for (int i : out.ambient_index) {
    sub.roots.push_back(d.roots[static_cast<std::size_t>(i)]);
    sub.coroots.push_back(d.coroots[static_cast<std::size_t>(i)]);
  }
  // Simple roots: positive roots that are not a sum of two positive roots.
  std::set<IntVector> pos_set;
  for (int i = 0; i < sub.num_positive; ++i) pos_set.insert(sub.roots[static_cast<std::size_t>(i)]);
  for (int i = 0; i < sub.num_positive; ++i) {
    bool decomposable = false;
    for (int j = 0; j < sub.num_positive && !decomposable; ++j) {
      if (j == i) continue;
      IntVector diff = sub.roots[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= sub.roots[static_cast<std::size_t>(j)][c];
      if (pos_set.count(diff)) decomposable = true;
    }
    if (!decomposable) sub.simple.push_back(i);
  }
  sub.cartan_label = sub.num_positive == 0 ? std::string() : root_system_label(sub);
  return out;
}

std::vector<int> integral_coroot_indices(RootDatum const& d, TorsionPoint const& s) {
  std::vector<int> out;
  for (int i = 0; i < d.num_roots(); ++i)
    if (s.pairs_integrally(d.coroots[static_cast<std::size_t>(i)])) out.push_back(i);
  return out;
}

SubDatum centralizer_subdatum(RootDatum const& d, TorsionPoint const& s) {
  if (s.rank() != d.rank) throw_internal("torsion point rank does not match the datum");
  std::vector<int> subset;
  for (int i = 0; i < d.num_roots(); ++i)
    if (s.pairs_integrally(d.roots[static_cast<std::size_t>(i)])) subset.push_back(i);
  return restrict_datum(d, subset);
}

// ---------------------------------------------------------------------------
// Configuration parsing.

namespace {

using nlohmann::json;

[[noreturn]] void field_error(std::string const& field, std::string const& what) {
  throw_config("config: field '" + field + "': " + what);
}

std::string trim(std::string const& s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json parse_value(std::string const& key, std::string const& raw) {
  if (raw.empty()) field_error(key, "missing value");
  json v = json::parse(raw, nullptr, false);
  if (!v.is_discarded()) return v;
  bool const bare = std::all_of(raw.begin(), raw.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
  if (!bare) field_error(key, "cannot parse value '" + raw + "'");
  return json(raw);
}

std::string as_string(json const& v, std::string const& key) {
  if (!v.is_string()) field_error(key, "expected a string");
  return v.get<std::string>();
}

Int as_int(json const& v, std::string const& key) {
  if (!v.is_number_integer()) field_error(key, "expected an integer");
  return v.get<Int>();
}

IntMatrix as_matrix(json const& v, std::string const& key) {
  if (!v.is_array() || v.empty()) field_error(key, "expected a non-empty list of integer rows");
  std::vector<IntVector> rows;
  for (auto const& row : v) {
    if (!row.is_array()) field_error(key, "expected a list of integer rows");
    IntVector r;
    for (auto const& x : row) r.push_back(as_int(x, key));
    rows.push_back(std::move(r));
  }
  for (auto const& r : rows)
    if (r.size() != rows.size()) field_error(key, "expected a square matrix");
  return IntMatrix::from_rows(rows);
}

struct Factor {
  std::string type;  // "A1".. or "T"
  int rank = 0;
};

std::vector<Factor> parse_type(std::string const& text) {
  std::vector<Factor> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, 'x')) {
    if (token.size() < 2) field_error("type", "malformed factor '" + token + "'");
    char const letter = token[0];
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument(token);
    } catch (std::exception const&) {
      field_error("type", "malformed factor '" + token + "'");
    }
    if (n < 1) field_error("type", "factor rank must be positive in '" + token + "'");
    if (letter == 'T') {
      out.push_back({"T", n});
    } else {
      try {
        (void)cartan_of_type(token);
      } catch (Error const& e) {
        throw Error(ErrorCode::kUnsupported, std::string("config: field 'type': ") + e.what());
      }
      out.push_back({token, static_cast<int>(cartan_of_type(token).rows())});
    }
  }
  if (out.empty()) field_error("type", "empty type");
  return out;
}

std::pair<Int, int> prime_power(Int q) {
  if (q < 2) field_error("q", "must be a prime power >= 2");
  if (q > 4096) throw_unsupported("config: field 'q': q > 4096 is outside the supported range");
  Int p = 2;
  while (q % p != 0) ++p;
  Int rest = q;
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) field_error("q", std::to_string(q) + " is not a prime power");
  return {p, e};
}

}  // namespace

GroupSpec parse_group_spec(std::string const& text, Int q_override) {
  static const std::set<std::string> kKeys = {"name", "type", "isogeny", "q", "twist",
                                               "torus_twist", "component_group", "oracle"};
  std::map<std::string, json> fields;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw_config("config: line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string const key = trim(line.substr(0, eq));
    if (!kKeys.count(key)) throw_config("config: line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (fields.count(key)) throw_config("config: line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    fields[key] = parse_value(key, trim(line.substr(eq + 1)));
  }

  GroupSpec g;
  if (!fields.count("type")) field_error("type", "required");
  g.type_label = as_string(fields["type"], "type");
  g.name = fields.count("name") ? as_string(fields["name"], "name") : g.type_label;
  if (fields.count("oracle")) g.oracle = as_string(fields["oracle"], "oracle");

  if (q_override > 0) {
    g.q = q_override;
  } else if (fields.count("q")) {
    g.q = as_int(fields["q"], "q");
  } else {
    field_error("q", "required");
  }
  std::tie(g.p, g.exponent) = prime_power(g.q);

  auto const factors = parse_type(g.type_label);
  std::vector<std::string> ss_types;
  int ss_rank = 0, torus_rank = 0;
  IntMatrix k(0, 0);
  for (auto const& f : factors) {
    if (f.type == "T") {
      torus_rank += f.rank;
    } else {
      ss_types.push_back(f.type);
      ss_rank += f.rank;
      k = block_diagonal(k, cartan_of_type(f.type));
    }
  }

  for (auto const& t : ss_types) {
    if ((t == "B2" || t == "C2") && g.p == 2) field_error("q", "p = 2 is a bad prime for type " + t);
    if (t == "G2" && (g.p == 2 || g.p == 3)) field_error("q", "p = " + std::to_string(g.p) + " is a bad prime for type G2");
  }

  // Simple-root permutation.
  std::vector<int> twist(static_cast<std::size_t>(ss_rank));
  std::iota(twist.begin(), twist.end(), 0);
  if (fields.count("twist")) {
    auto const& v = fields["twist"];
    if (!v.is_array() || static_cast<int>(v.size()) != ss_rank) field_error("twist", "expected a permutation of " + std::to_string(ss_rank) + " simple-root indices");
    for (std::size_t i = 0; i < v.size(); ++i) twist[i] = static_cast<int>(as_int(v[i], "twist"));
    std::vector<int> sorted = twist;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < ss_rank; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) field_error("twist", "not a permutation");
    for (int i = 0; i < ss_rank; ++i)
      for (int j = 0; j < ss_rank; ++j)
        if (k(twist[static_cast<std::size_t>(i)], twist[static_cast<std::size_t>(j)]) != k(i, j))
          field_error("twist", "permutation is not a diagram automorphism");
  }
  g.twist = twist;

  IntMatrix torus_twist = IntMatrix::identity(torus_rank);
  if (fields.count("torus_twist")) {
    if (torus_rank == 0) field_error("torus_twist", "type has no torus factor");
    torus_twist = as_matrix(fields["torus_twist"], "torus_twist");
    if (torus_twist.rows() != torus_rank) field_error("torus_twist", "expected a " + std::to_string(torus_rank) + "x" + std::to_string(torus_rank) + " matrix");
    if (!integral_inverse(torus_twist)) field_error("torus_twist", "matrix is not invertible over Z");
    if (matrix_order(torus_twist) == 0) field_error("torus_twist", "matrix does not have finite order");
  }

  std::string isogeny = "sc";
  IntMatrix custom;
  if (fields.count("isogeny")) {
    auto const& v = fields["isogeny"];
    if (v.is_string()) {
      isogeny = v.get<std::string>();
      if (isogeny != "sc" && isogeny != "ad" && isogeny != "gl") field_error("isogeny", "expected sc, ad, gl or a matrix");
    } else {
      isogeny = "custom";
      custom = as_matrix(v, "isogeny");
      if (custom.rows() != ss_rank) field_error("isogeny", "basis matrix must be " + std::to_string(ss_rank) + "x" + std::to_string(ss_rank));
    }
  }
  g.isogeny = isogeny;

  int const rank = isogeny == "gl" ? ss_rank + 1 : ss_rank + torus_rank;
  std::vector<IntVector> simple_roots, simple_coroots;
  IntMatrix sigma_ss;

  if (isogeny == "gl") {
    if (factors.size() != 1 || factors[0].type[0] != 'A') field_error("isogeny", "gl requires a single type A factor");
    for (int i = 0; i < ss_rank; ++i) {
      IntVector v(static_cast<std::size_t>(rank), 0);
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(i + 1)] = -1;
      simple_roots.push_back(v);
      simple_coroots.push_back(v);
    }
    bool const flip = twist[0] != 0;
    sigma_ss = IntMatrix(rank, rank);
    for (int i = 0; i < rank; ++i) {
      if (flip) {
        sigma_ss(rank - 1 - i, i) = -1;
      } else {
        sigma_ss(i, i) = 1;
      }
    }
    g.datum.rank = rank;
  } else {
    IntMatrix b;
    if (isogeny == "sc") {
      b = IntMatrix::identity(ss_rank);
    } else if (isogeny == "ad") {
      b = k.transpose();
    } else {
      b = custom.transpose();
    }
    if (ss_rank > 0 && determinant(b) == 0) field_error("isogeny", "basis matrix is singular");
    for (int j = 0; j < ss_rank; ++j) {
      IntVector weight(static_cast<std::size_t>(ss_rank));
      for (int c = 0; c < ss_rank; ++c) weight[static_cast<std::size_t>(c)] = k(j, c);
      auto x = solve_integral(b, weight);
      if (!x) field_error("isogeny", "lattice does not contain the root lattice");
      IntVector root(static_cast<std::size_t>(rank), 0), coroot(static_cast<std::size_t>(rank), 0);
      for (int c = 0; c < ss_rank; ++c) {
        root[static_cast<std::size_t>(c)] = (*x)[static_cast<std::size_t>(c)];
        coroot[static_cast<std::size_t>(c)] = b(j, c);
      }
      simple_roots.push_back(root);
      simple_coroots.push_back(coroot);
    }
    IntMatrix perm(ss_rank, ss_rank);
    for (int i = 0; i < ss_rank; ++i) perm(twist[static_cast<std::size_t>(i)], i) = 1;
    if (ss_rank > 0) {
      auto binv = rational_inverse(b);
      FINLANG_CHECK(binv.has_value(), "basis inverse");
      IntMatrix const pb = perm * b;
      sigma_ss = IntMatrix(ss_rank, ss_rank);
      for (int i = 0; i < ss_rank; ++i) {
        for (int j = 0; j < ss_rank; ++j) {
          Rational acc = 0;
          for (int t = 0; t < ss_rank; ++t) acc += (*binv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * pb(t, j);
          if (acc.denominator() != 1) field_error("twist", "diagram automorphism does not preserve the lattice");
          sigma_ss(i, j) = acc.numerator();
        }
      }
    } else {
      sigma_ss = IntMatrix(0, 0);
    }
  }
  g.sigma = isogeny == "gl" ? sigma_ss : block_diagonal(sigma_ss, torus_twist);

  std::string label;
  for (auto const& f : factors) {
    if (!label.empty()) label += 'x';
    label += f.type == "T" ? "T" + std::to_string(f.rank) : f.type;
  }
  g.datum = build_datum(rank, simple_roots, simple_coroots, label);

  auto sigma_perm = g.datum.root_permutation(g.sigma);
  if (!sigma_perm) field_error("twist", "twist does not normalize the root datum");
  for (int i = 0; i < ss_rank; ++i) {
    if ((*sigma_perm)[static_cast<std::size_t>(g.datum.simple[static_cast<std::size_t>(i)])] !=
        g.datum.simple[static_cast<std::size_t>(twist[static_cast<std::size_t>(i)])])
      field_error("twist", "twist does not act as the given simple-root permutation");
  }

  // Component group: must normalize the datum and commute with Frobenius
  // modulo the Weyl group.
  std::vector<IntMatrix> weyl_gens;
  for (int s : g.datum.simple) weyl_gens.push_back(g.datum.reflection(s));
  auto const weyl = matrix_closure(weyl_gens, rank);
  std::unordered_set<IntMatrix, IntMatrixHash> weyl_set(weyl.begin(), weyl.end());
  if (fields.count("component_group")) {
    auto const& v = fields["component_group"];
    if (!v.is_array()) field_error("component_group", "expected a list of matrices");
    for (auto const& m : v) {
      IntMatrix gamma = as_matrix(m, "component_group");
      if (gamma.rows() != rank) field_error("component_group", "matrices must be " + std::to_string(rank) + "x" + std::to_string(rank));
      auto inv = integral_inverse(gamma);
      if (!inv) field_error("component_group", "matrix is not invertible over Z");
      if (matrix_order(gamma) == 0) field_error("component_group", "matrix does not have finite order");
      if (!g.datum.root_permutation(gamma)) field_error("component_group", "matrix does not normalize the root datum");
      IntMatrix const comm = g.sigma * gamma * *integral_inverse(g.sigma) * *inv;
      if (!weyl_set.count(comm)) field_error("component_group", "Frobenius acts nontrivially on the component group");
      g.component_group.push_back(std::move(gamma));
    }
  }
  g.connected = std::all_of(g.component_group.begin(), g.component_group.end(),
                            [&](IntMatrix const& m) { return weyl_set.count(m) > 0; });
  return g;
}

std::optional<std::string> named_group_config(std::string const& name) {
  static const std::map<std::string, std::string> kNamed = {
      {"sl2", "name = sl2\ntype = A1\nisogeny = sc\noracle = sl2\n"},
      {"gl2", "name = gl2\ntype = A1\nisogeny = gl\noracle = gl2\n"},
      {"pgl2", "name = pgl2\ntype = A1\nisogeny = ad\noracle = pgl2\n"},
      {"sl3", "name = sl3\ntype = A2\nisogeny = sc\noracle = sl3\n"},
      {"gl3", "name = gl3\ntype = A2\nisogeny = gl\noracle = gl3\n"},
      {"pgl3", "name = pgl3\ntype = A2\nisogeny = ad\noracle = pgl3\n"},
      {"sp4", "name = sp4\ntype = C2\nisogeny = sc\noracle = sp4\n"},
      {"so5", "name = so5\ntype = B2\nisogeny = ad\noracle = so5\n"},
      {"g2", "name = g2\ntype = G2\nisogeny = sc\n"},
      {"torus1", "name = torus1\ntype = T1\noracle = torus1\n"},
      {"o2", "name = o2\ntype = T1\ncomponent_group = [[[-1]]]\noracle = o2\n"},
  };
  auto it = kNamed.find(name);
  if (it == kNamed.end()) return std::nullopt;
  return it->second;
}

GroupSpec named_group_spec(std::string const& name, Int q) {
  auto text = named_group_config(name);
  if (!text) throw_config("unknown group name '" + name + "'");
  return parse_group_spec(*text, q);
}

Int whittaker_torsor_size(GroupSpec const& g) {
  RootDatum const& d = g.datum;
  int const n = d.rank;
  int const r = d.semisimple_rank();
  if (r == 0) return 1;
  std::vector<IntVector> cols;
  for (int s : d.simple) cols.push_back(d.roots[static_cast<std::size_t>(s)]);
  IntMatrix const simple = IntMatrix::from_columns(cols, n);
  SmithForm const snf = smith_normal_form(simple);
  auto const uinv = integral_inverse(snf.U);
  FINLANG_CHECK(uinv.has_value(), "Smith transform not unimodular");
  IntVector const dvals = snf.invariant_factors();
  for (Int dv : dvals)
    if (dv == 0) throw_unsupported("simple roots are linearly dependent");

  IntMatrix const fm1 = g.frobenius() - IntMatrix::identity(n);
  Int count = 0;
  IntVector c(static_cast<std::size_t>(n), 0);
  // Enumerate the torsion subgroup in Smith coordinates.
  std::function<void(int)> walk = [&](int i) {
    if (i == r) {
      Int order = 1;
      for (int t = 0; t < r; ++t) {
        Int const dt = dvals[static_cast<std::size_t>(t)];
        Int const ord_t = dt / gcd(dt, c[static_cast<std::size_t>(t)]);
        order = std::lcm(order, ord_t);
      }
      if (order % g.p == 0) return;
      IntVector const x = *uinv * c;
      IntVector const y = snf.U * (fm1 * x);
      for (int t = 0; t < n; ++t) {
        Int const yt = y[static_cast<std::size_t>(t)];
        if (t < r ? mod(yt, dvals[static_cast<std::size_t>(t)]) != 0 : yt != 0) return;
      }
      ++count;
      return;
    }
    for (Int v = 0; v < dvals[static_cast<std::size_t>(i)]; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      walk(i + 1);
    }
    c[static_cast<std::size_t>(i)] = 0;
  };
  walk(0);
  return count;
}

}  // namespace finlang
