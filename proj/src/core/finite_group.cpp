#include "finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "error.hpp"

namespace finlang {

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inverse_{0}, labels_{"e"} {}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, std::vector<std::string> labels) {
  int const n = static_cast<int>(labels.size());
  FINLANG_CHECK(n >= 1 && table.size() == static_cast<std::size_t>(n * n), "group table has the wrong size");
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  for (int a = 0; a < n; ++a) {
    FINLANG_CHECK(g.mul(0, a) == a && g.mul(a, 0) == a, "element 0 is not the identity");
    std::vector<bool> row(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      int const c = g.mul(a, b);
      FINLANG_CHECK(c >= 0 && c < n && !row[static_cast<std::size_t>(c)], "group table is not a Latin square");
      row[static_cast<std::size_t>(c)] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        FINLANG_CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "group table is not associative");
  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inverse_[static_cast<std::size_t>(a)] = b;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<int> table(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<int> table(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      table[static_cast<std::size_t>(a * 6 + b)] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(table), std::move(labels));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::class_count() const {
  return static_cast<int>(twisted_classes(*this, identity_automorphism(*this)).size());
}

FiniteGroup FiniteGroup::subgroup(std::vector<int> const& elements) const {
  std::vector<int> elems = elements;
  auto it = std::find(elems.begin(), elems.end(), 0);
  FINLANG_CHECK(it != elems.end(), "subgroup lacks the identity");
  std::rotate(elems.begin(), it, it + 1);
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
  int const k = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(k * k));
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) {
    labels.push_back(label(elems[static_cast<std::size_t>(a)]));
    for (int b = 0; b < k; ++b) {
      int const c = pos[static_cast<std::size_t>(mul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]))];
      FINLANG_CHECK(c >= 0, "subset is not closed under multiplication");
      table[static_cast<std::size_t>(a * k + b)] = c;
    }
  }
  return from_table(std::move(table), std::move(labels));
}

Automorphism identity_automorphism(FiniteGroup const& g) {
  Automorphism f(static_cast<std::size_t>(g.order()));
  std::iota(f.begin(), f.end(), 0);
  return f;
}

bool is_automorphism(FiniteGroup const& g, Automorphism const& f) {
  if (static_cast<int>(f.size()) != g.order()) return false;
  std::vector<bool> hit(f.size(), false);
  for (int x : f) {
    if (x < 0 || x >= g.order() || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (f[static_cast<std::size_t>(g.mul(a, b))] != g.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) return false;
  return true;
}

Automorphism compose(Automorphism const& f, Automorphism const& g) {
  Automorphism out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

Automorphism inner_automorphism(FiniteGroup const& g, int h) {
  Automorphism f(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) f[static_cast<std::size_t>(x)] = g.mul(g.mul(h, x), g.inv(h));
  return f;
}

int automorphism_order(Automorphism const& f) {
  Automorphism id(f.size());
  std::iota(id.begin(), id.end(), 0);
  Automorphism acc = f;
  int k = 1;
  while (acc != id) {
    acc = compose(f, acc);
    ++k;
  }
  return k;
}

std::vector<std::vector<int>> twisted_classes(FiniteGroup const& g, Automorphism const& f) {
  if (!is_automorphism(g, f)) throw_internal("twisted_classes: map is not an automorphism");
  int const n = g.order();
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (orbit_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> orbit;
    for (int b = 0; b < n; ++b) {
      int const y = g.mul(g.mul(b, x), g.inv(f[static_cast<std::size_t>(b)]));
      if (orbit_of[static_cast<std::size_t>(y)] < 0) {
        orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> twisted_centralizer(FiniteGroup const& g, Automorphism const& f, int x) {
  std::vector<int> out;
  for (int b = 0; b < g.order(); ++b)
    if (g.mul(g.mul(b, x), g.inv(f[static_cast<std::size_t>(b)])) == x) out.push_back(b);
  return out;
}

int mbar_count(FiniteGroup const& g, Automorphism const& f) {
  int total = 0;
  for (auto const& orbit : twisted_classes(g, f)) {
    total += g.subgroup(twisted_centralizer(g, f, orbit.front())).class_count();
  }
  return total;
}

int equivariant_simple_count(FiniteGroup const& g, int set_size, std::function<int(int, int)> const& act) {
  std::vector<bool> seen(static_cast<std::size_t>(set_size), false);
  int total = 0;
  for (int x = 0; x < set_size; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> stab;
    for (int b = 0; b < g.order(); ++b) {
      int const y = act(b, x);
      FINLANG_CHECK(y >= 0 && y < set_size, "action leaves the set");
      seen[static_cast<std::size_t>(y)] = true;
      if (y == x) stab.push_back(b);
    }
    total += g.subgroup(stab).class_count();
  }
  return total;
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  std::vector<Automorphism> trivial(static_cast<std::size_t>(b.order()), identity_automorphism(a));
  return semidirect_product(a, b, trivial);
}

FiniteGroup semidirect_product(FiniteGroup const& n, FiniteGroup const& h, std::vector<Automorphism> const& action) {
  int const nn = n.order(), nh = h.order(), total = nn * nh;
  FINLANG_CHECK(static_cast<int>(action.size()) == nh, "semidirect product action has the wrong size");
  std::vector<int> table(static_cast<std::size_t>(total * total));
  std::vector<std::string> labels;
  for (int x = 0; x < total; ++x) {
    int const xn = x % nn, xh = x / nn;
    if (nh == 1) {
      labels.push_back(n.label(xn));
    } else if (nn == 1) {
      labels.push_back(h.label(xh));
    } else {
      labels.push_back("(" + n.label(xn) + "," + h.label(xh) + ")");
    }
    for (int y = 0; y < total; ++y) {
      int const yn = y % nn, yh = y / nn;
      int const zn = n.mul(xn, action[static_cast<std::size_t>(xh)][static_cast<std::size_t>(yn)]);
      int const zh = h.mul(xh, yh);
      table[static_cast<std::size_t>(x * total + y)] = zn + nn * zh;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

std::string describe_group(FiniteGroup const& g) {
  int const n = g.order();
  if (n == 1) return "trivial";
  int max_order = 1;
  for (int a = 0; a < n; ++a) max_order = std::max(max_order, g.element_order(a));
  if (max_order == n) return "Z/" + std::to_string(n);
  if (n == 4) return "Z/2xZ/2";
  if (n == 6 && !g.is_abelian()) return "S3";
  return "order-" + std::to_string(n) + "/" + std::to_string(g.class_count()) + "-classes";
}

namespace {

std::vector<bool> closure(FiniteGroup const& g, std::vector<int> const& gens) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  in[0] = true;
  std::vector<int> elems{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int const y = g.mul(elems[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        elems.push_back(y);
      }
    }
  }
  return in;
}

std::vector<int> generating_set(FiniteGroup const& g) {
  std::vector<int> gens;
  std::vector<bool> in = closure(g, gens);
  for (int cand = 1; cand < g.order(); ++cand) {
    if (in[static_cast<std::size_t>(cand)]) continue;
    gens.push_back(cand);
    in = closure(g, gens);
  }
  return gens;
}

// Extends gens -> images to a homomorphism; nullopt-like empty on failure.
std::vector<int> extend_map(FiniteGroup const& a, FiniteGroup const& b, std::vector<int> const& gens,
                            std::vector<int> const& images) {
  std::vector<int> phi(static_cast<std::size_t>(a.order()), -1);
  phi[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int const x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int const y = a.mul(x, gens[i]);
      int const img = b.mul(phi[static_cast<std::size_t>(x)], images[i]);
      if (phi[static_cast<std::size_t>(y)] < 0) {
        phi[static_cast<std::size_t>(y)] = img;
        queue.push_back(y);
      } else if (phi[static_cast<std::size_t>(y)] != img) {
        return {};
      }
    }
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[static_cast<std::size_t>(a.mul(x, y))] != b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) return {};
  return phi;
}

}  // namespace

bool is_isomorphic(FiniteGroup const& a, FiniteGroup const& b) {
  if (a.order() != b.order()) return false;
  if (a.class_count() != b.class_count() || a.is_abelian() != b.is_abelian()) return false;
  std::vector<int> const gens = generating_set(a);
  std::vector<int> images(gens.size(), 0);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      auto phi = extend_map(a, b, gens, images);
      if (phi.empty()) return false;
      std::vector<int> sorted = phi;
      std::sort(sorted.begin(), sorted.end());
      return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    int const ord = a.element_order(gens[i]);
    for (int y = 0; y < b.order(); ++y) {
      if (b.element_order(y) != ord) continue;
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace finlang
