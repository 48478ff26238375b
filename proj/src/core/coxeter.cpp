#include "coxeter.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "error.hpp"

namespace finlang {

CoxeterGroup CoxeterGroup::from_datum(RootDatum const& d, std::size_t order_bound) {
  CoxeterGroup g;
  g.datum_ = d;
  std::vector<IntMatrix> gen_mats;
  for (int s : d.simple) gen_mats.push_back(d.reflection(s));

  g.elements_.push_back(IntMatrix::identity(d.rank));
  g.words_.push_back({});
  g.lengths_.push_back(0);
  g.index_.emplace(g.elements_.front(), 0);
  // Breadth-first with right multiplication in generator order visits
  // elements in shortlex order of their least reduced words.
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t s = 0; s < gen_mats.size(); ++s) {
      IntMatrix next = g.elements_[i] * gen_mats[s];
      if (g.index_.count(next)) continue;
      g.index_.emplace(next, static_cast<int>(g.elements_.size()));
      auto w = g.words_[i];
      w.push_back(static_cast<int>(s));
      g.words_.push_back(std::move(w));
      g.lengths_.push_back(g.lengths_[i] + 1);
      g.elements_.push_back(std::move(next));
      if (g.elements_.size() > order_bound) throw_unsupported("Weyl group order exceeds the configured bound");
    }
  }
  int const n = g.size();
  for (std::size_t s = 0; s < gen_mats.size(); ++s) g.gens_.push_back(g.index_.at(gen_mats[s]));

  g.table_.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = g.index_.find(g.elements_[static_cast<std::size_t>(a)] * g.elements_[static_cast<std::size_t>(b)]);
      FINLANG_CHECK(it != g.index_.end(), "Weyl group not closed under multiplication");
      g.table_[static_cast<std::size_t>(a * n + b)] = it->second;
    }
  g.inverse_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inverse_[static_cast<std::size_t>(a)] = b;

  for (int w = 0; w < n; ++w) {
    auto perm = d.root_permutation(g.elements_[static_cast<std::size_t>(w)]);
    FINLANG_CHECK(perm.has_value(), "Weyl element does not permute roots");
    int inversions = 0;
    for (int r = 0; r < d.num_positive; ++r)
      if (!d.is_positive((*perm)[static_cast<std::size_t>(r)])) ++inversions;
    FINLANG_CHECK(inversions == g.length(w), "length differs from the number of inverted positive roots");
    g.root_perm_.push_back(std::move(*perm));
  }
  g.longest_ = n - 1;
  FINLANG_CHECK(g.length(g.longest_) == d.num_positive, "longest element has the wrong length");

  // Bruhat order: for s in L(w), x <= w iff min(x, sx) <= sw.
  g.bruhat_.assign(static_cast<std::size_t>(n * n), false);
  g.bruhat_[0] = true;
  for (int w = 1; w < n; ++w) {
    int s = 0;
    while (!g.left_descent(w, s)) ++s;
    int const v = g.mul(g.generator(s), w);
    for (int x = 0; x < n; ++x) {
      int const sx = g.mul(g.generator(s), x);
      int const lo = g.length(sx) < g.length(x) ? sx : x;
      g.bruhat_[static_cast<std::size_t>(x * n + w)] = g.bruhat_le(lo, v);
    }
  }
  return g;
}

std::optional<int> CoxeterGroup::find(IntMatrix const& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string CoxeterGroup::name(int w) const {
  if (w == 0) return "e";
  std::string out;
  for (int s : word(w)) out += "s" + std::to_string(s + 1);
  return out;
}

unsigned CoxeterGroup::left_descents(int w) const {
  unsigned mask = 0;
  for (int i = 0; i < rank(); ++i)
    if (left_descent(w, i)) mask |= 1u << i;
  return mask;
}

unsigned CoxeterGroup::right_descents(int w) const {
  unsigned mask = 0;
  for (int i = 0; i < rank(); ++i)
    if (right_descent(w, i)) mask |= 1u << i;
  return mask;
}

namespace {

void add_shifted(Polynomial& acc, Polynomial const& p, int shift, Int scale) {
  if (p.empty() || scale == 0) return;
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += scale * p[i];
}

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

KLTable::KLTable(CoxeterGroup const& g) : n_(g.size()) {
  polys_.assign(static_cast<std::size_t>(n_ * n_), Polynomial{});
  mu_.assign(static_cast<std::size_t>(n_ * n_), 0);
  auto set_mu = [&](int x, int w) {
    int const d = g.length(w) - g.length(x);
    if (x == w || d % 2 == 0) return;
    auto const& p = P(x, w);
    std::size_t const deg = static_cast<std::size_t>((d - 1) / 2);
    mu_[static_cast<std::size_t>(x * n_ + w)] = deg < p.size() ? p[deg] : 0;
  };

  polys_[0] = {1};
  for (int w = 1; w < n_; ++w) {
    int s = 0;
    while (!g.left_descent(w, s)) ++s;
    int const gs = g.generator(s);
    int const v = g.mul(gs, w);
    for (int x = 0; x < n_; ++x) {
      if (!g.bruhat_le(x, w)) continue;
      int const sx = g.mul(gs, x);
      int const c = g.length(sx) < g.length(x) ? 1 : 0;
      Polynomial acc;
      add_shifted(acc, P(sx, v), 1 - c, 1);
      add_shifted(acc, P(x, v), c, 1);
      for (int z = 0; z < n_; ++z) {
        if (z == v || !g.bruhat_le(x, z) || !g.bruhat_le(z, v)) continue;
        if (g.length(g.mul(gs, z)) > g.length(z)) continue;
        Int const m = mu(z, v);
        if (m == 0) continue;
        add_shifted(acc, P(x, z), (g.length(w) - g.length(z)) / 2, -m);
      }
      trim(acc);
      polys_[static_cast<std::size_t>(x * n_ + w)] = std::move(acc);
    }
    for (int x = 0; x < n_; ++x) set_mu(x, w);
  }

  for (int x = 0; x < n_; ++x) {
    for (int w = 0; w < n_; ++w) {
      auto const& p = P(x, w);
      if (!g.bruhat_le(x, w)) {
        FINLANG_CHECK(p.empty(), "P_{x,w} nonzero off the Bruhat order");
        continue;
      }
      FINLANG_CHECK(!p.empty() && p[0] == 1, "P_{x,w} has constant term other than 1");
      for (Int c : p) FINLANG_CHECK(c >= 0, "negative Kazhdan-Lusztig coefficient");
      if (x != w) {
        FINLANG_CHECK(2 * (static_cast<int>(p.size()) - 1) <= g.length(w) - g.length(x) - 1,
                      "Kazhdan-Lusztig degree bound violated");
      }
    }
  }
}

namespace {

// Tarjan SCC over an adjacency matrix, with a caller-chosen visit order.
std::vector<std::vector<int>> strongly_connected(std::vector<std::vector<int>> const& adj, std::vector<int> const& order) {
  int const n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    auto const V = static_cast<std::size_t>(v);
    index[V] = low[V] = counter++;
    stack.push_back(v);
    on_stack[V] = true;
    for (int u : adj[V]) {
      auto const U = static_cast<std::size_t>(u);
      if (index[U] < 0) {
        visit(u);
        low[V] = std::min(low[V], low[U]);
      } else if (on_stack[U]) {
        low[V] = std::min(low[V], index[U]);
      }
    }
    if (low[V] == index[V]) {
      std::vector<int> comp;
      int u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(u)] = false;
        comp.push_back(u);
      } while (u != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (int v : order)
    if (index[static_cast<std::size_t>(v)] < 0) visit(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> membership(std::vector<std::vector<int>> const& parts, int n) {
  std::vector<int> of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int x : parts[c]) of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  return of;
}

}  // namespace

CellPartition cells(CoxeterGroup const& g, KLTable const& t, std::vector<int> const* visit_order) {
  int const n = g.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (visit_order) {
    FINLANG_CHECK(static_cast<int>(visit_order->size()) == n, "visit order has the wrong size");
    order = *visit_order;
  }
  std::vector<std::vector<int>> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n)),
      both(static_cast<std::size_t>(n));
  for (int xi : order) {
    for (int yi : order) {
      if (xi == yi || t.mu_sym(xi, yi) == 0) continue;
      bool const l = (g.left_descents(xi) & ~g.left_descents(yi)) != 0;
      bool const r = (g.right_descents(xi) & ~g.right_descents(yi)) != 0;
      if (l) left[static_cast<std::size_t>(xi)].push_back(yi);
      if (r) right[static_cast<std::size_t>(xi)].push_back(yi);
      if (l || r) both[static_cast<std::size_t>(xi)].push_back(yi);
    }
  }
  CellPartition c;
  c.left_cells = strongly_connected(left, order);
  c.right_cells = strongly_connected(right, order);
  c.two_sided_cells = strongly_connected(both, order);
  c.left_of = membership(c.left_cells, n);
  c.right_of = membership(c.right_cells, n);
  c.cell_of = membership(c.two_sided_cells, n);
  return c;
}

std::vector<int> conjugation_map(CoxeterGroup const& g, IntMatrix const& a) {
  auto ainv = integral_inverse(a);
  if (!ainv) throw_internal("conjugation by a non-invertible lattice map");
  std::vector<int> out(static_cast<std::size_t>(g.size()));
  for (int w = 0; w < g.size(); ++w) {
    auto img = g.find(a * g.matrix(w) * *ainv);
    if (!img) throw_internal("lattice automorphism does not normalize the Weyl group");
    out[static_cast<std::size_t>(w)] = *img;
  }
  return out;
}

std::vector<int> cell_action(CoxeterGroup const& g, CellPartition const& c, IntMatrix const& a) {
  auto const map = conjugation_map(g, a);
  std::vector<int> perm(c.two_sided_cells.size(), -1);
  for (std::size_t id = 0; id < c.two_sided_cells.size(); ++id) {
    std::vector<int> image;
    for (int w : c.two_sided_cells[id]) image.push_back(map[static_cast<std::size_t>(w)]);
    std::sort(image.begin(), image.end());
    int const target = c.cell_of[static_cast<std::size_t>(image.front())];
    if (c.two_sided_cells[static_cast<std::size_t>(target)] != image) {
      throw_internal("lattice automorphism does not carry two-sided cells to cells");
    }
    perm[id] = target;
  }
  return perm;
}

}  // namespace finlang
