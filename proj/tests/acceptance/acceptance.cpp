// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "error.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "springer_tables.hpp"
#include "strata.hpp"

using namespace finlang;

namespace {

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, std::string const& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(A const& got, B const& want, std::string const& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

struct Case {
  char const* name;
  Int q;
  Int expected;
};

std::vector<Case> const kOracleCases = {{"sl2", 2, 3},    {"sl2", 3, 7},    {"sl2", 5, 9},    {"gl2", 2, 3},
                                        {"gl2", 3, 8},    {"pgl2", 3, 5},   {"gl3", 2, 6},    {"torus1", 2, 1},
                                        {"torus1", 3, 2}, {"torus1", 4, 3}, {"torus1", 5, 4}};

std::string case_name(char const* name, Int q) { return std::string(name) + "/F" + std::to_string(q); }

using Blocks = std::map<std::pair<std::string, std::string>, Int>;

Blocks spectral_blocks(GroupSpec const& g) {
  Chooser choose;
  SpectralResult const r = run_spectral(g, choose);
  Blocks out;
  for (auto const& st : r.strata) out[{r.classes[st.ss].label(), st.pair.label}] += st.count;
  return out;
}

Blocks stratified_blocks(GroupSpec const& g) {
  Chooser choose;
  StratifiedResult const r = run_stratified(g, choose);
  Blocks out;
  for (auto const& st : r.strata) out[{r.orbits[st.orbit].label(), st.unipotent}] += st.count;
  return out;
}

Int block_sum(Blocks const& b, std::string const& ss) {
  Int total = 0;
  for (auto const& [key, n] : b)
    if (key.first == ss) total += n;
  return total;
}

void oracle_equality(Check& c) {
  auto const start = std::chrono::steady_clock::now();
  for (auto const& k : kOracleCases) {
    CountReport const r = compare_report(named_group_spec(k.name, k.q), Pipeline::kAuto, std::nullopt);
    std::string const n = case_name(k.name, k.q);
    c.expect(r.has_match && r.match, n + ": compare did not match");
    c.equal(r.total, k.expected, n + " total");
    c.equal(r.doc.at("oracle_total").get<Int>(), k.expected, n + " oracle");
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
}

void sl2_breakdown(Check& c) {
  Chooser choose;
  SpectralResult const r = run_spectral(named_group_spec("sl2", 3), choose);
  std::map<std::string, Int> got;
  for (auto const& st : r.strata) got[r.classes[st.ss].label() + " " + st.pair.label] += st.count;
  std::map<std::string, Int> const want = {{"(0) A1:1", 1}, {"(0) A1:reg", 1}, {"(1/2) 1", 4}, {"(1/4) 1", 1}};
  c.expect(got == want, "strata differ");
  c.equal(r.total, 7, "total");
}

void cross_pipeline(Check& c) {
  for (auto const& k : kOracleCases) {
    GroupSpec const g = named_group_spec(k.name, k.q);
    std::string const n = case_name(k.name, k.q);
    c.equal(total_count(g), stratified_count(g), n + " totals");
    c.expect(spectral_blocks(g) == stratified_blocks(g), n + ": block breakdown differs");
  }
}

void unipotent_blocks(Check& c) {
  for (auto const& [name, q, want] : {Case{"sp4", 3, 6}, Case{"so5", 3, 6}, Case{"g2", 5, 10}}) {
    GroupSpec const g = named_group_spec(name, q);
    std::string const n = case_name(name, q);
    c.equal(block_sum(spectral_blocks(g), "(0,0)"), want, n + " spectral");
    c.equal(block_sum(stratified_blocks(g), "(0,0)"), want, n + " stratified");
  }
  c.equal(mbar_count(FiniteGroup::cyclic(2), identity_automorphism(FiniteGroup::cyclic(2))), 4, "|M(Z/2)|");
  c.equal(mbar_count(FiniteGroup::symmetric3(), identity_automorphism(FiniteGroup::symmetric3())), 8, "|M(S3)|");
}

void disconnected(Check& c) {
  CountReport const r = compare_report(named_group_spec("o2", 3), Pipeline::kAuto, std::nullopt);
  c.equal(r.total, 4, "total");
  c.equal(r.doc.at("oracle_total").get<Int>(), 4, "oracle");
  c.expect(r.has_match && r.match, "compare did not match");
  c.equal(r.doc.at("pipeline").get<std::string>(), "stratified", "pipeline");
}

void structural(Check& c) {
  for (char const* type : {"A1", "A2", "B2", "C2", "G2"}) {
    std::string const t = type;
    std::string const dual = dual_type_label(t);
    for (auto const& rec : special_classes(t))
      c.equal(special_class(dual, rec.dual_class).dual_class, rec.class_label, t + " duality");
    CoxeterGroup const w = standard_weyl(t);
    KLTable const kl(w);
    CellPartition const cp = cells(w, kl);
    c.equal(cp.two_sided_cells.size(), special_classes(t).size(), t + " cells vs classes");
    for (int cell = 0; cell < static_cast<int>(cp.two_sided_cells.size()); ++cell) {
      FamilyGroupRecord const fam = family_group(t, cell);
      c.expect(is_isomorphic(fam.group, special_class(dual, fam.class_label).abar_of_u), t + " family group");
      c.expect(!fam.is_exceptional, t + " exceptional cell");
    }
    for (int x = 0; x < w.size(); ++x)
      for (int y = 0; y < w.size(); ++y) {
        auto const& p = kl.P(x, y);
        if (!w.bruhat_le(x, y)) {
          c.expect(p.empty(), t + " P outside Bruhat order");
          continue;
        }
        bool ok = !p.empty() && p[0] == 1;
        for (Int coef : p) ok = ok && coef >= 0;
        if (x != y) ok = ok && 2 * (static_cast<int>(p.size()) - 1) < w.length(y) - w.length(x);
        c.expect(ok, t + " KL positivity or degree bound at " + w.name(x) + ", " + w.name(y));
      }
  }

  std::vector<GroupSpec> groups;
  for (auto const& k : kOracleCases) groups.push_back(named_group_spec(k.name, k.q));
  groups.push_back(named_group_spec("sp4", 3));
  groups.push_back(named_group_spec("g2", 5));
  groups.push_back(named_group_spec("o2", 3));
  for (auto const& g : groups) {
    std::string const n = case_name(g.name.c_str(), g.q);
    CoxeterGroup const w0 = CoxeterGroup::from_datum(g.datum);
    ExtendedWeyl const w = extended_weyl(g, w0);
    Chooser choose;
    for (auto const& orbit : semisimple_parameters(g, w0, w, choose)) {
      OrbitContext const ctx = orbit_context(g, w0, orbit, choose);
      for (auto const& b : ctx.betas) {
        int distinguished = 0;
        for (int x : b.coset) {
          bool positive = true;
          for (int i = 0; i < orbit.levi.datum.num_positive; ++i)
            positive = positive && g.datum.is_positive(w0.root_permutation(x)[orbit.levi.ambient_index[i]]);
          if (positive) ++distinguished;
        }
        c.equal(distinguished, 1, n + " distinguished representatives in a coset");
      }
    }
    for (int x = 0; x < w0.size(); ++x) {
      StableSolve const s = solve_stable_points(g, w0, x);
      Int const det = s.determinant < 0 ? -s.determinant : s.determinant;
      c.equal(static_cast<Int>(s.points.size()), det, n + " Smith-form count");
      c.equal(std::gcd(det, g.p), Int{1}, n + " determinant coprime to p");
    }
  }
}

void choice_independence(Check& c) {
  for (char const* name : {"sl2", "gl2", "o2"}) {
    GroupSpec const g = named_group_spec(name, 3);
    std::string const base = count_report(g, Pipeline::kAuto, std::nullopt).text();
    std::string const both = g.connected ? count_report(g, Pipeline::kBoth, std::nullopt).text() : "";
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      c.expect(count_report(g, Pipeline::kAuto, seed).text() == base, std::string(name) + " seed " + std::to_string(seed));
      if (g.connected)
        c.expect(count_report(g, Pipeline::kBoth, seed).text() == both,
                 std::string(name) + " both pipelines, seed " + std::to_string(seed));
    }
  }
}

void sl2_wd(Check& c) {
  std::vector<GroupSpec> groups;
  for (auto const& k : kOracleCases) groups.push_back(named_group_spec(k.name, k.q));
  groups.push_back(named_group_spec("sp4", 3));
  groups.push_back(named_group_spec("so5", 3));
  groups.push_back(named_group_spec("g2", 5));
  int seen = 0;
  for (auto const& g : groups)
    for (auto const& p : parameters(g)) {
      ++seen;
      FiniteLParameter const wd = sl2_wd_convert(p);
      FiniteLParameter const back = sl2_wd_convert(wd);
      std::string const n = case_name(g.name.c_str(), g.q);
      c.expect(wd.normal_form != p.normal_form, n + " form not toggled");
      c.expect(wd.packet_group == p.packet_group, n + " packet group changed");
      c.expect(back.normal_form == p.normal_form && back.packet_group == p.packet_group && back.ss_label == p.ss_label &&
                   back.unipotent == p.unipotent && back.frob.x == p.frob.x,
               n + " not an involution");
    }
  c.expect(seen > 0, "no parameters");
}

void whittaker(Check& c) {
  c.equal(whittaker_torsor_size(named_group_spec("gl2", 3)), 1, "GL2/F3");
  c.equal(whittaker_torsor_size(named_group_spec("gl2", 2)), 1, "GL2/F2");
  c.equal(whittaker_torsor_size(named_group_spec("sl2", 3)), 2, "SL2/F3");
  c.equal(whittaker_torsor_size(named_group_spec("sl2", 4)), 1, "SL2/F4");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Check&)>>> const criteria = {
      {"oracle equality", oracle_equality},
      {"SL2/F3 stratum breakdown", sl2_breakdown},
      {"spectral and stratified pipelines agree", cross_pipeline},
      {"unipotent blocks B2 = 6, G2 = 10", unipotent_blocks},
      {"O2/F3 stratified total", disconnected},
      {"structural invariants", structural},
      {"choice independence over 100 seeds", choice_independence},
      {"SL2/WD conversion", sl2_wd},
      {"Whittaker torsor sizes", whittaker},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (std::exception const& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool const ok = c.failures.empty();
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "    " << c.failures[k] << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
