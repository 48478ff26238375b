#include "spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace finlang {

namespace {

constexpr Int kPointCap = 1000000;

// Root indices of d (ambient) that are positive roots of the sub-datum.
std::set<int> sub_positive(SubDatum const& sub) {
  std::set<int> out;
  for (int i = 0; i < sub.datum.num_positive; ++i) out.insert(sub.ambient_index[i]);
  return out;
}

bool preserves(std::vector<int> const& perm, std::set<int> const& roots) {
  for (int r : roots)
    if (!roots.count(perm[r])) return false;
  return true;
}

IntMatrix inverse_of(IntMatrix const& m) {
  auto inv = integral_inverse(m);
  if (!inv) throw_internal("lattice map is not invertible over Z");
  return *inv;
}

std::vector<std::string> act_on_tuple(std::vector<std::string> const& c, std::vector<int> const& perm) {
  std::vector<std::string> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[perm[i]] = c[i];
  return out;
}

std::vector<std::vector<std::string>> all_tuples(std::vector<std::string> const& types) {
  std::vector<std::vector<std::string>> out{{}};
  for (auto const& t : types) {
    std::vector<std::vector<std::string>> next;
    for (auto const& prefix : out)
      for (auto const& rec : special_classes(t)) {
        auto v = prefix;
        v.push_back(rec.class_label);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

StableSolve solve_stable_points(GroupSpec const& g, CoxeterGroup const& w, int element) {
  StableSolve out;
  out.w = element;
  int const r = g.datum.rank;
  IntMatrix const a = w.matrix(element) * g.frobenius() - IntMatrix::identity(r);
  out.determinant = determinant(a);
  FINLANG_CHECK(out.determinant != 0, "w F - 1 is singular");
  FINLANG_CHECK(gcd(out.determinant, g.p) == 1, "stable points of order divisible by p");
  Int const count = out.determinant < 0 ? -out.determinant : out.determinant;
  if (count > kPointCap) throw_unsupported("too many Frobenius-stable torsion points (" + std::to_string(count) + ")");

  SmithForm const snf = smith_normal_form(a);
  IntVector const d = snf.invariant_factors();
  Int lcm = 1;
  for (Int di : d) lcm = lcm / gcd(lcm, di) * di;
  // t_i = k_i / d_i, s = V t.
  IntVector k(static_cast<std::size_t>(r), 0);
  while (true) {
    IntVector t(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) t[i] = k[i] * (lcm / d[i]);
    out.points.emplace_back(snf.V * t, lcm);
    int i = 0;
    while (i < r && ++k[i] == d[i]) k[i++] = 0;
    if (i == r) break;
  }
  FINLANG_CHECK(static_cast<Int>(out.points.size()) == count, "stable point count differs from |det(wF - 1)|");
  std::sort(out.points.begin(), out.points.end());
  FINLANG_CHECK(std::adjacent_find(out.points.begin(), out.points.end()) == out.points.end(), "repeated stable point");
  return out;
}

std::vector<TorsionPoint> stable_points(GroupSpec const& g, CoxeterGroup const& w) {
  std::set<TorsionPoint> all;
  for (int e = 0; e < w.size(); ++e) {
    for (auto& s : solve_stable_points(g, w, e).points) all.insert(std::move(s));
    if (static_cast<Int>(all.size()) > kPointCap) throw_unsupported("too many Frobenius-stable torsion points");
  }
  return {all.begin(), all.end()};
}

FiniteGroup weyl_as_group(CoxeterGroup const& w) {
  int const n = w.size();
  std::vector<int> table(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(w.name(a));
    for (int b = 0; b < n; ++b) table[a * n + b] = w.mul(a, b);
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

std::vector<SemisimpleClass> enumerate_ss_classes(GroupSpec const& g, CoxeterGroup const& w, Chooser& choose) {
  IntMatrix const f = g.frobenius();
  std::vector<SemisimpleClass> out;
  std::set<TorsionPoint> seen;
  for (auto const& s : stable_points(g, w)) {
    if (seen.count(s)) continue;
    std::set<TorsionPoint> orbit;
    for (int e = 0; e < w.size(); ++e) orbit.insert(s.transformed(w.matrix(e)));
    seen.insert(orbit.begin(), orbit.end());

    SemisimpleClass c;
    c.canonical = *orbit.begin();
    c.orbit_size = static_cast<int>(orbit.size());
    std::vector<TorsionPoint> members(orbit.begin(), orbit.end());
    c.rep = choose.pick_from(members);

    TorsionPoint const fs = c.rep.transformed(f);
    std::vector<int> witnesses;
    for (int e = 0; e < w.size(); ++e)
      if (fs.transformed(w.matrix(e)) == c.rep) witnesses.push_back(e);
    FINLANG_CHECK(!witnesses.empty(), "orbit member is not Frobenius-stable");
    c.witness = choose.pick_from(witnesses);

    c.phi_s = integral_coroot_indices(g.datum, c.rep);
    c.pseudo_levi = restrict_datum(g.datum, c.phi_s);
    auto const pos = sub_positive(c.pseudo_levi);
    for (int e = 0; e < w.size(); ++e)
      if (c.rep.transformed(w.matrix(e)) == c.rep && preserves(w.root_permutation(e), pos)) c.pi0.push_back(e);
    FINLANG_CHECK(!c.pi0.empty() && c.pi0.front() == 0, "component group lacks the identity");
    FINLANG_CHECK(static_cast<int>(c.pi0.size()) * c.orbit_size * CoxeterGroup::from_datum(c.pseudo_levi.datum).size() == w.size(),
                  "orbit-stabilizer count fails for a semisimple class");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.canonical < b.canonical; });
  return out;
}

ClassContext class_context(GroupSpec const& g, CoxeterGroup const& w, SemisimpleClass const& ss) {
  ClassContext ctx;
  ctx.ss = &ss;
  RootDatum const& sub = ss.pseudo_levi.datum;
  ctx.levi_weyl = CoxeterGroup::from_datum(sub);
  ctx.comps = components(sub);

  IntMatrix const m1 = w.matrix(ss.witness) * g.sigma;
  int found = 0;
  for (int v = 0; v < ctx.levi_weyl.size(); ++v) {
    IntMatrix const cand = ctx.levi_weyl.matrix(v) * m1;
    auto perm = sub.root_permutation(cand);
    FINLANG_CHECK(perm.has_value(), "twisted Frobenius does not normalize the centralizer roots");
    bool ok = true;
    for (int i = 0; i < sub.num_positive && ok; ++i) ok = sub.is_positive((*perm)[i]);
    if (ok) {
      if (found == 0) ctx.tau = cand;
      ++found;
    }
  }
  FINLANG_CHECK(found == 1, "no unique positivity-preserving twist of the Frobenius");

  ctx.pi0 = weyl_as_group(w).subgroup(ss.pi0);
  IntMatrix const tau_inv = inverse_of(ctx.tau);
  std::map<int, int> position;
  for (std::size_t i = 0; i < ss.pi0.size(); ++i) position[ss.pi0[i]] = static_cast<int>(i);
  for (int x : ss.pi0) {
    auto img = w.find(ctx.tau * w.matrix(x) * tau_inv);
    FINLANG_CHECK(img && position.count(*img), "Frobenius does not preserve the component group");
    ctx.f_pi0.push_back(position[*img]);
    ctx.pi0_component_perm.push_back(component_permutation(ctx.comps, simple_root_permutation(sub, w.matrix(x))));
  }
  FINLANG_CHECK(is_automorphism(ctx.pi0, ctx.f_pi0), "Frobenius on the component group is not an automorphism");
  ctx.delta = component_permutation(ctx.comps, simple_root_permutation(sub, ctx.tau));
  return ctx;
}

std::vector<SpecialPair> special_pairs(ClassContext const& ctx, Chooser& choose) {
  std::vector<std::string> types;
  for (auto const& c : ctx.comps) types.push_back(dual_type_label(c.type));
  int const n = ctx.pi0.order();

  std::vector<SpecialPair> out;
  std::set<std::vector<std::string>> seen;
  for (auto const& c : all_tuples(types)) {
    if (seen.count(c)) continue;
    std::set<std::vector<std::string>> orbit;
    for (int x = 0; x < n; ++x) orbit.insert(act_on_tuple(c, ctx.pi0_component_perm[x]));
    seen.insert(orbit.begin(), orbit.end());
    std::vector<std::vector<std::string>> members(orbit.begin(), orbit.end());
    if (!orbit.count(act_on_tuple(c, ctx.delta))) continue;  // not Frobenius-stable

    SpecialPair p;
    p.types = types;
    p.classes = choose.pick_from(members);
    p.label = unipotent_label(types, members.front());
    std::vector<int> gammas;
    auto const fc = act_on_tuple(p.classes, ctx.delta);
    for (int x = 0; x < n; ++x) {
      auto const& perm = ctx.pi0_component_perm[x];
      if (act_on_tuple(p.classes, perm) == p.classes) p.stab.push_back(x);
      if (act_on_tuple(fc, perm) == p.classes) gammas.push_back(x);
    }
    FINLANG_CHECK(!gammas.empty(), "stable orbit without a normalizing element");
    p.gamma = choose.pick_from(gammas);
    out.push_back(std::move(p));
  }
  return out;
}

ExtendedComponentGroup extended_group(ClassContext const& ctx, SpecialPair const& pair, Chooser& choose) {
  ProductFamily const pf = product_family(pair.types, pair.classes);
  FiniteGroup const stab = ctx.pi0.subgroup(pair.stab);
  std::map<int, int> stab_pos;
  for (std::size_t j = 0; j < pair.stab.size(); ++j) stab_pos[pair.stab[j]] = static_cast<int>(j);

  std::vector<Automorphism> action;
  for (int x : pair.stab) action.push_back(induced_automorphism(pf, ctx.pi0_component_perm[x]));

  ExtendedComponentGroup e;
  e.abar = semidirect_product(pf.group, stab, action);
  e.connected_order = pf.group.order();
  e.stab_order = stab.order();

  // F_C(x) = gamma f(x) gamma^-1 on the stabilizer.
  FiniteGroup const& p0 = ctx.pi0;
  int const gamma = pair.gamma;
  std::vector<int> fc;
  for (int x : pair.stab) {
    int const y = p0.mul(p0.mul(gamma, ctx.f_pi0[x]), p0.inv(gamma));
    FINLANG_CHECK(stab_pos.count(y), "twisted Frobenius leaves the stabilizer");
    fc.push_back(stab_pos[y]);
  }
  // Component permutation of gamma tau: first delta, then gamma.
  std::vector<int> perm(ctx.delta.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = ctx.pi0_component_perm[gamma][ctx.delta[i]];
  Automorphism const alpha = induced_automorphism(pf, perm);

  int const nn = pf.group.order();
  Automorphism f(static_cast<std::size_t>(e.abar.order()));
  for (int z = 0; z < e.abar.order(); ++z) f[z] = alpha[z % nn] + nn * fc[z / nn];
  FINLANG_CHECK(is_automorphism(e.abar, f), "Frobenius on the extended component group is not an automorphism");

  // Translating by an element of the group changes nothing up to isomorphism.
  int const h = static_cast<int>(choose.pick(static_cast<std::size_t>(e.abar.order())));
  e.f_action = h == 0 ? f : compose(inner_automorphism(e.abar, h), f);
  e.n = automorphism_order(e.f_action);
  return e;
}

std::vector<MbarElement> mbar(ExtendedComponentGroup const& e) {
  std::vector<MbarElement> out;
  for (auto const& orbit : twisted_classes(e.abar, e.f_action)) {
    MbarElement m;
    m.x = orbit.front();
    m.x_class_size = static_cast<int>(orbit.size());
    m.centralizer = twisted_centralizer(e.abar, e.f_action, m.x);
    m.irr_count = e.abar.subgroup(m.centralizer).class_count();
    out.push_back(std::move(m));
  }
  return out;
}

SpectralResult run_spectral(GroupSpec const& g, Chooser& choose) {
  if (!g.connected) throw_unsupported("the spectral pipeline handles connected groups only; use the stratified pipeline");
  CoxeterGroup const w = CoxeterGroup::from_datum(g.datum);
  SpectralResult res;
  res.classes = enumerate_ss_classes(g, w, choose);
  for (std::size_t si = 0; si < res.classes.size(); ++si) {
    auto const& ss = res.classes[si];
    ClassContext const ctx = class_context(g, w, ss);
    for (auto& pair : special_pairs(ctx, choose)) {
      SpectralStratum st;
      st.ss = static_cast<int>(si);
      st.ext = extended_group(ctx, pair, choose);
      st.mbar = mbar(st.ext);
      st.pair = std::move(pair);
      for (auto const& m : st.mbar) {
        st.count += m.irr_count;
        FiniteLParameter lp;
        lp.ss_label = ss.label();
        lp.unipotent = st.pair.label;
        lp.frob = m;
        lp.packet_group = st.ext.abar.subgroup(m.centralizer);
        res.parameters.push_back(std::move(lp));
      }
      FINLANG_CHECK(st.count == mbar_count(st.ext.abar, st.ext.f_action), "packet sizes do not add up");
      res.total += st.count;
      res.strata.push_back(std::move(st));
    }
  }
  return res;
}

std::vector<FiniteLParameter> parameters(GroupSpec const& g) {
  Chooser c;
  return run_spectral(g, c).parameters;
}

FiniteLParameter sl2_wd_convert(FiniteLParameter const& p) {
  FiniteLParameter out = p;
  out.normal_form = p.normal_form == NormalForm::kSL2 ? NormalForm::kWD : NormalForm::kSL2;
  return out;
}

Int total_count(GroupSpec const& g) {
  Chooser c;
  return run_spectral(g, c).total;
}

}  // namespace finlang
