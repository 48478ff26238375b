#include "strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"
#include "spectral.hpp"

namespace finlang {

namespace {

constexpr std::size_t kExtendedWeylCap = 100000;

IntMatrix inverse_of(IntMatrix const& m) {
  auto inv = integral_inverse(m);
  if (!inv) throw_internal("lattice map is not invertible over Z");
  return *inv;
}

bool preserves_positive(RootDatum const& sub, IntMatrix const& a) {
  auto perm = sub.root_permutation(a);
  if (!perm) return false;
  for (int i = 0; i < sub.num_positive; ++i)
    if (!sub.is_positive((*perm)[i])) return false;
  return true;
}

std::set<int> sub_positive(SubDatum const& sub) {
  std::set<int> out;
  for (int i = 0; i < sub.datum.num_positive; ++i) out.insert(sub.ambient_index[i]);
  return out;
}

}  // namespace

int ExtendedWeyl::find(IntMatrix const& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw_internal("matrix outside the extended Weyl group");
  return it->second;
}

ExtendedWeyl extended_weyl(GroupSpec const& g, CoxeterGroup const& w0) {
  std::vector<IntMatrix> gens;
  for (int i = 0; i < w0.rank(); ++i) gens.push_back(w0.matrix(w0.generator(i)));
  for (auto const& c : g.component_group) gens.push_back(c);

  ExtendedWeyl w;
  w.elements.push_back(IntMatrix::identity(g.datum.rank));
  w.index.emplace(w.elements.front(), 0);
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    for (auto const& s : gens) {
      IntMatrix next = w.elements[i] * s;
      if (w.index.count(next)) continue;
      w.index.emplace(next, w.size());
      w.elements.push_back(std::move(next));
      if (w.elements.size() > kExtendedWeylCap) throw_unsupported("extended Weyl group is too large");
    }
  }
  int const n = w.size();
  std::vector<int> table(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    auto in0 = w0.find(w.elements[a]);
    w.in_identity_component.push_back(in0.has_value());
    labels.push_back(in0 ? w0.name(*in0) : "g" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a * n + b] = w.find(w.elements[a] * w.elements[b]);
  }
  w.group = FiniteGroup::from_table(std::move(table), std::move(labels));
  FINLANG_CHECK(n % w0.size() == 0, "Weyl group order does not divide the extended order");
  return w;
}

std::vector<CharacterOrbit> semisimple_parameters(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                                  Chooser& choose) {
  auto const stable = stable_points(g, w0);
  std::set<TorsionPoint> const stable_set(stable.begin(), stable.end());
  std::set<TorsionPoint> seen;
  std::vector<CharacterOrbit> out;
  for (auto const& s : stable) {
    if (seen.count(s)) continue;
    std::set<TorsionPoint> orbit;
    for (auto const& m : w.elements) orbit.insert(s.transformed(m));
    for (auto const& t : orbit) FINLANG_CHECK(stable_set.count(t), "W-orbit leaves the stable characters");
    seen.insert(orbit.begin(), orbit.end());

    CharacterOrbit o;
    o.canonical = *orbit.begin();
    o.orbit_size = static_cast<int>(orbit.size());
    std::vector<TorsionPoint> members(orbit.begin(), orbit.end());
    o.rep = choose.pick_from(members);
    o.phi = integral_coroot_indices(g.datum, o.rep);
    o.levi = restrict_datum(g.datum, o.phi);
    auto const pos = sub_positive(o.levi);
    for (int i = 0; i < w.size(); ++i) {
      if (!(o.rep.transformed(w.elements[i]) == o.rep)) continue;
      o.stabilizer.push_back(i);
      auto perm = g.datum.root_permutation(w.elements[i]);
      FINLANG_CHECK(perm.has_value(), "extended Weyl element does not permute roots");
      if (std::all_of(pos.begin(), pos.end(), [&](int r) { return pos.count((*perm)[r]) > 0; })) o.omega.push_back(i);
    }
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.canonical < b.canonical; });
  return out;
}

std::vector<BetaClass> beta_classes(GroupSpec const& g, CoxeterGroup const& w0, CoxeterGroup const& levi_weyl,
                                    SubDatum const& levi, TorsionPoint const& rep) {
  TorsionPoint const fl = rep.transformed(g.frobenius());
  std::vector<int> coset_of(static_cast<std::size_t>(w0.size()), -1);
  std::vector<BetaClass> out;
  for (int u = 0; u < w0.size(); ++u) {
    if (!(fl.transformed(w0.matrix(u)) == rep) || coset_of[u] >= 0) continue;
    BetaClass b;
    for (int v = 0; v < levi_weyl.size(); ++v) {
      auto x = w0.find(levi_weyl.matrix(v) * w0.matrix(u));
      FINLANG_CHECK(x.has_value(), "integral Weyl group is not inside W");
      b.coset.push_back(*x);
      coset_of[*x] = static_cast<int>(out.size());
      if (preserves_positive(levi.datum, w0.matrix(*x) * g.sigma)) {
        b.rep = *x;
        ++b.distinguished;
      }
    }
    std::sort(b.coset.begin(), b.coset.end());
    FINLANG_CHECK(b.distinguished == 1, "coset without a unique distinguished representative");
    out.push_back(std::move(b));
  }
  return out;
}

OrbitContext orbit_context(GroupSpec const& g, CoxeterGroup const& w0, CharacterOrbit const& orbit, Chooser& choose) {
  OrbitContext ctx;
  ctx.orbit = &orbit;
  ctx.levi_weyl = CoxeterGroup::from_datum(orbit.levi.datum);
  ctx.comps = components(orbit.levi.datum);
  for (auto const& c : ctx.comps) ctx.dual_types.push_back(dual_type_label(c.type));
  KLTable const kl(ctx.levi_weyl);
  std::vector<int> order(static_cast<std::size_t>(ctx.levi_weyl.size()));
  std::iota(order.begin(), order.end(), 0);
  choose.shuffle(order);
  ctx.cells = cells(ctx.levi_weyl, kl, &order);
  ctx.betas = beta_classes(g, w0, ctx.levi_weyl, orbit.levi, orbit.rep);
  ctx.beta_of.assign(static_cast<std::size_t>(w0.size()), -1);
  for (std::size_t b = 0; b < ctx.betas.size(); ++b)
    for (int x : ctx.betas[b].coset) ctx.beta_of[x] = static_cast<int>(b);
  return ctx;
}

IntMatrix beta_twist(GroupSpec const& g, CoxeterGroup const& w0, OrbitContext const& ctx, int beta) {
  return w0.matrix(ctx.betas[beta].rep) * g.sigma;
}

std::vector<int> levi_component_perm(OrbitContext const& ctx, IntMatrix const& a) {
  return component_permutation(ctx.comps, simple_root_permutation(ctx.orbit->levi.datum, a));
}

int twisted_beta_action(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w, OrbitContext const& ctx,
                        int gamma, int beta) {
  IntMatrix const& m = w.elements[gamma];
  IntMatrix const x = m * beta_twist(g, w0, ctx, beta) * inverse_of(m) * inverse_of(g.sigma);
  auto u = w0.find(x);
  FINLANG_CHECK(u.has_value(), "twisted conjugate leaves W");
  int const b = ctx.beta_of[*u];
  FINLANG_CHECK(b >= 0, "twisted conjugate does not stabilize the character");
  return b;
}

std::vector<CellParameter> unipotent_parameters(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                                OrbitContext const& ctx, Chooser& choose) {
  int const ncells = static_cast<int>(ctx.cells.two_sided_cells.size());
  std::vector<std::vector<int>> beta_perm;
  for (std::size_t b = 0; b < ctx.betas.size(); ++b)
    beta_perm.push_back(cell_action(ctx.levi_weyl, ctx.cells, beta_twist(g, w0, ctx, static_cast<int>(b))));
  std::vector<std::vector<int>> omega_perm;
  for (int o : ctx.orbit->omega) omega_perm.push_back(cell_action(ctx.levi_weyl, ctx.cells, w.elements[o]));

  std::vector<CellParameter> out;
  std::vector<bool> seen(static_cast<std::size_t>(ncells), false);
  for (int c = 0; c < ncells; ++c) {
    if (seen[c]) continue;
    std::set<int> orbit;
    for (auto const& p : omega_perm) orbit.insert(p[c]);
    for (int x : orbit) seen[x] = true;
    std::vector<int> members(orbit.begin(), orbit.end());

    CellParameter cp;
    cp.cell = choose.pick_from(members);
    for (std::size_t b = 0; b < beta_perm.size(); ++b)
      if (beta_perm[b][cp.cell] == cp.cell) cp.betas.push_back(static_cast<int>(b));
    if (cp.betas.empty()) continue;
    for (std::size_t i = 0; i < omega_perm.size(); ++i)
      if (omega_perm[i][cp.cell] == cp.cell) cp.omega_c.push_back(ctx.orbit->omega[i]);
    cp.classes = cell_classes(ctx.levi_weyl, ctx.comps, ctx.cells.two_sided_cells[cp.cell].front());
    cp.label = unipotent_label(ctx.dual_types, cp.classes);
    out.push_back(std::move(cp));
  }
  return out;
}

std::vector<StratumInput> beta_orbits(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                      OrbitContext const& ctx, CellParameter const& cell, Chooser& choose) {
  std::set<int> const allowed(cell.betas.begin(), cell.betas.end());
  std::set<int> seen;
  std::vector<StratumInput> out;
  for (int b : cell.betas) {
    if (seen.count(b)) continue;
    std::set<int> orbit;
    for (int gamma : cell.omega_c) orbit.insert(twisted_beta_action(g, w0, w, ctx, gamma, b));
    for (int x : orbit) FINLANG_CHECK(allowed.count(x), "cell stabilizer moves beta off the cell");
    seen.insert(orbit.begin(), orbit.end());
    std::vector<int> members(orbit.begin(), orbit.end());
    StratumInput in;
    in.cell = &cell;
    in.beta = choose.pick_from(members);
    for (int gamma : cell.omega_c)
      if (twisted_beta_action(g, w0, w, ctx, gamma, in.beta) == in.beta) in.omega_cb.push_back(gamma);
    out.push_back(std::move(in));
  }
  return out;
}

StratumGroups stratum_groups(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w, OrbitContext const& ctx,
                             StratumInput const& in) {
  StratumGroups s;
  s.family = product_family(ctx.dual_types, in.cell->classes);
  std::vector<int> omega = in.omega_cb;
  std::sort(omega.begin(), omega.end());
  FiniteGroup const om = w.group.subgroup(omega);
  std::vector<Automorphism> action;
  for (int gamma : omega) action.push_back(induced_automorphism(s.family, levi_component_perm(ctx, w.elements[gamma])));
  s.e = semidirect_product(s.family.group, om, action);

  Automorphism const tau = induced_automorphism(s.family, levi_component_perm(ctx, beta_twist(g, w0, ctx, in.beta)));
  int const nn = s.family.group.order();
  s.f.resize(static_cast<std::size_t>(s.e.order()));
  for (int z = 0; z < s.e.order(); ++z) s.f[z] = tau[z % nn] + nn * (z / nn);
  FINLANG_CHECK(is_automorphism(s.e, s.f), "Frobenius twist does not commute with the stabilizer action");
  return s;
}

int stratum_count(StratumGroups const& s) {
  int const nn = s.family.group.order();
  FiniteGroup const& e = s.e;
  return equivariant_simple_count(e, nn, [&](int b, int x) { return e.mul(e.mul(b, x), e.inv(s.f[b])); });
}

std::string dual_levi_label(RootDatum const& d) {
  std::vector<std::string> types;
  for (auto const& c : components(d)) types.push_back(dual_type_label(c.type));
  if (types.empty()) return "T";
  std::sort(types.begin(), types.end());
  std::string out;
  for (auto const& t : types) out += (out.empty() ? "" : "x") + t;
  return out;
}

StratifiedResult run_stratified(GroupSpec const& g, Chooser& choose) {
  CoxeterGroup const w0 = CoxeterGroup::from_datum(g.datum);
  ExtendedWeyl const w = extended_weyl(g, w0);
  StratifiedResult res;
  res.orbits = semisimple_parameters(g, w0, w, choose);
  for (std::size_t oi = 0; oi < res.orbits.size(); ++oi) {
    auto const& orbit = res.orbits[oi];
    OrbitContext const ctx = orbit_context(g, w0, orbit, choose);
    std::string const levi = dual_levi_label(orbit.levi.datum);
    std::map<std::string, std::vector<StratifiedStratum>> by_label;
    auto const cps = unipotent_parameters(g, w0, w, ctx, choose);
    for (auto const& cp : cps) {
      for (auto const& in : beta_orbits(g, w0, w, ctx, cp, choose)) {
        StratumGroups const sg = stratum_groups(g, w0, w, ctx, in);
        StratifiedStratum st;
        st.orbit = static_cast<int>(oi);
        st.pseudo_levi = levi;
        st.unipotent = cp.label;
        st.cell_size = static_cast<int>(ctx.cells.two_sided_cells[cp.cell].size());
        st.family_group = describe_group(sg.family.group);
        st.omega_order = static_cast<int>(in.omega_cb.size());
        st.count = stratum_count(sg);
        res.total += st.count;
        by_label[cp.label].push_back(std::move(st));
      }
    }
    for (auto& [label, list] : by_label) {
      std::sort(list.begin(), list.end(), [](auto const& a, auto const& b) {
        return std::tie(a.omega_order, a.count, a.cell_size, a.family_group) <
               std::tie(b.omega_order, b.count, b.cell_size, b.family_group);
      });
      for (std::size_t k = 0; k < list.size(); ++k) {
        list[k].beta = "b" + std::to_string(k);
        res.strata.push_back(std::move(list[k]));
      }
    }
  }
  return res;
}

Int stratified_count(GroupSpec const& g) {
  Chooser c;
  return run_stratified(g, c).total;
}

}  // namespace finlang
