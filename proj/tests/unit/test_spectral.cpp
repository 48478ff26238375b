#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "error.hpp"
#include "spectral.hpp"

using namespace finlang;

namespace {

struct Setup {
  GroupSpec g;
  CoxeterGroup w;
  explicit Setup(char const* name, Int q) : g(named_group_spec(name, q)), w(CoxeterGroup::from_datum(g.datum)) {}
};

SemisimpleClass const& find_class(std::vector<SemisimpleClass> const& cs, std::string const& label) {
  for (auto const& c : cs)
    if (c.label() == label) return c;
  FAIL("no class " << label);
  return cs.front();
}

SpecialPair const& find_pair(std::vector<SpecialPair> const& ps, std::string const& cls) {
  for (auto const& p : ps)
    if (p.classes.size() == 1 && p.classes[0] == cls) return p;
  FAIL("no pair " << cls);
  return ps.front();
}

Int coprime_part(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b); }

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("centralizer sub-data") {
    GroupSpec const pgl2 = named_group_spec("pgl2", 3);
    CHECK(centralizer_subdatum(pgl2.datum, TorsionPoint({0}, 1)).datum.num_roots() == 2);
    CHECK(centralizer_subdatum(pgl2.datum, TorsionPoint({1}, 2)).datum.num_roots() == 0);

    // Some point of order 2 in SO5 has centralizer A1xA1.
    GroupSpec const so5 = named_group_spec("so5", 3);
    std::set<std::string> labels;
    for (Int a = 0; a < 2; ++a)
      for (Int b = 0; b < 2; ++b) labels.insert(root_system_label(centralizer_subdatum(so5.datum, TorsionPoint({a, b}, 2)).datum));
    CHECK(labels.count("A1xA1") == 1);
  }

  TEST_CASE("semisimple classes") {
    Chooser choose;
    Setup const sl2("sl2", 3);
    auto const cs = enumerate_ss_classes(sl2.g, sl2.w, choose);
    CHECK(cs.size() == 3);
    CHECK(find_class(cs, "(0)").pi0.size() == 1);
    CHECK(find_class(cs, "(1/2)").pi0.size() == 2);
    CHECK(find_class(cs, "(1/4)").pi0.size() == 1);
    CHECK(find_class(cs, "(1/4)").orbit_size == 2);

    Setup const torus("torus1", 5);
    CHECK(enumerate_ss_classes(torus.g, torus.w, choose).size() == 4);
    Setup const gl2("gl2", 2);
    CHECK(enumerate_ss_classes(gl2.g, gl2.w, choose).size() == 2);
  }

  TEST_CASE("classes are stable with a valid witness and coprime order") {
    for (auto const& [name, q] : {std::pair<char const*, Int>{"sl2", 5}, {"gl2", 3}, {"sl3", 4}, {"sp4", 3}, {"g2", 5}}) {
      CAPTURE(name);
      Setup const s(name, q);
      Chooser choose(17);
      auto const cs = enumerate_ss_classes(s.g, s.w, choose);
      int total_orbit = 0;
      for (auto const& c : cs) {
        CHECK(c.rep.transformed(s.w.matrix(c.witness) * s.g.frobenius()) == c.rep);
        CHECK(coprime_part(c.rep.order(), s.g.p) == 1);
        total_orbit += c.orbit_size;
      }
      CHECK(total_orbit == static_cast<int>(stable_points(s.g, s.w).size()));
    }
  }

  TEST_CASE("Smith-form solution counts equal the determinant") {
    for (auto const& [name, q] : {std::pair<char const*, Int>{"sl2", 3}, {"gl3", 2}, {"sp4", 3}, {"g2", 5}}) {
      CAPTURE(name);
      Setup const s(name, q);
      for (int w = 0; w < s.w.size(); ++w) {
        StableSolve const sol = solve_stable_points(s.g, s.w, w);
        Int const det = sol.determinant < 0 ? -sol.determinant : sol.determinant;
        CHECK(static_cast<Int>(sol.points.size()) == det);
        CHECK(coprime_part(det, s.g.p) == 1);
        IntMatrix const a = s.w.matrix(w) * s.g.frobenius();
        for (auto const& pt : sol.points) CHECK(pt.transformed(a) == pt);
      }
    }
  }

  TEST_CASE("special pairs and extended groups") {
    Chooser choose;
    Setup const sl2("sl2", 3);
    auto const cs = enumerate_ss_classes(sl2.g, sl2.w, choose);

    ClassContext const c0 = class_context(sl2.g, sl2.w, find_class(cs, "(0)"));
    auto const p0 = special_pairs(c0, choose);
    CHECK(p0.size() == 2);
    ExtendedComponentGroup const reg = extended_group(c0, find_pair(p0, "reg"), choose);
    CHECK(reg.abar.order() == 1);

    ClassContext const ch = class_context(sl2.g, sl2.w, find_class(cs, "(1/2)"));
    auto const ph = special_pairs(ch, choose);
    REQUIRE(ph.size() == 1);
    ExtendedComponentGroup const half = extended_group(ch, ph[0], choose);
    CHECK(describe_group(half.abar) == "Z/2");
    CHECK(half.f_action == identity_automorphism(half.abar));
    CHECK(mbar(half).size() == 2);

    Setup const so5("so5", 3);
    auto const so5_classes = enumerate_ss_classes(so5.g, so5.w, choose);
    CHECK(special_pairs(class_context(so5.g, so5.w, find_class(so5_classes, "(0,0)")), choose).size() == 3);

    Setup const g2("g2", 5);
    auto const g2_classes = enumerate_ss_classes(g2.g, g2.w, choose);
    ClassContext const g0 = class_context(g2.g, g2.w, find_class(g2_classes, "(0,0)"));
    ExtendedComponentGroup const sub = extended_group(g0, find_pair(special_pairs(g0, choose), "G2(a1)"), choose);
    CHECK(describe_group(sub.abar) == "S3");
    CHECK(sub.n == 1);
    int count = 0;
    for (auto const& m : mbar(sub)) count += m.irr_count;
    CHECK(count == 8);
  }

  TEST_CASE("M-bar structure") {
    for (auto const& [name, q] : {std::pair<char const*, Int>{"sl2", 3}, {"sp4", 3}, {"g2", 5}, {"sl3", 4}}) {
      CAPTURE(name);
      Chooser choose;
      SpectralResult const r = run_spectral(named_group_spec(name, q), choose);
      Int total = 0;
      for (auto const& st : r.strata) {
        int classes = 0, count = 0;
        for (auto const& m : st.mbar) {
          classes += m.x_class_size;
          count += m.irr_count;
          CHECK(twisted_centralizer(st.ext.abar, st.ext.f_action, m.x) == m.centralizer);
          CHECK(m.centralizer.size() * static_cast<std::size_t>(m.x_class_size) == static_cast<std::size_t>(st.ext.abar.order()));
        }
        CHECK(classes == st.ext.abar.order());
        CHECK(count == st.count);
        CHECK(st.ext.abar.order() == st.ext.connected_order * st.ext.stab_order);
        if (st.ext.abar.is_abelian() && st.ext.n == 1) CHECK(st.count == st.ext.abar.order() * st.ext.abar.order());
        total += st.count;
      }
      CHECK(total == r.total);
    }
  }

  TEST_CASE("parameters and packets") {
    GroupSpec const sl2 = named_group_spec("sl2", 3);
    auto const ps = parameters(sl2);
    CHECK(ps.size() == 5);
    int enhanced = 0;
    for (auto const& p : ps) {
      enhanced += p.packet_size();
      CHECK(p.normal_form == NormalForm::kSL2);
    }
    CHECK(enhanced == 7);

    auto const torus = parameters(named_group_spec("torus1", 5));
    CHECK(torus.size() == 4);
    for (auto const& p : torus) CHECK(p.packet_size() == 1);

    int gl2 = 0;
    for (auto const& p : parameters(named_group_spec("gl2", 2))) gl2 += p.packet_size();
    CHECK(gl2 == 3);
  }

  TEST_CASE("SL2 and WD normal forms") {
    for (auto const& p : parameters(named_group_spec("g2", 5))) {
      FiniteLParameter const wd = sl2_wd_convert(p);
      CHECK(wd.normal_form == NormalForm::kWD);
      CHECK(wd.packet_group == p.packet_group);
      CHECK(wd.ss_label == p.ss_label);
      CHECK(wd.unipotent == p.unipotent);
      FiniteLParameter const back = sl2_wd_convert(wd);
      CHECK(back.normal_form == NormalForm::kSL2);
      CHECK(back.packet_group == p.packet_group);
      CHECK(back.frob.x == p.frob.x);
    }
  }

  TEST_CASE("total counts") {
    CHECK(total_count(named_group_spec("sl2", 3)) == 7);
    CHECK(total_count(named_group_spec("pgl2", 3)) == 5);
    CHECK(total_count(named_group_spec("gl2", 3)) == 8);
    CHECK(total_count(named_group_spec("torus1", 5)) == 4);
    CHECK(total_count(named_group_spec("sl2", 4)) == 5);
  }

  TEST_CASE("disconnected groups are refused") {
    try {
      total_count(named_group_spec("o2", 3));
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kUnsupported);
    }
  }

  TEST_CASE("choices change representatives, not counts") {
    GroupSpec const g = named_group_spec("sl3", 4);
    Chooser plain;
    SpectralResult const base = run_spectral(g, plain);
    bool moved = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Chooser choose(seed);
      SpectralResult const r = run_spectral(g, choose);
      CHECK(r.total == base.total);
      REQUIRE(r.classes.size() == base.classes.size());
      std::map<std::string, int> a, b;
      for (auto const& st : r.strata) a[r.classes[st.ss].label() + st.pair.label] += st.count;
      for (auto const& st : base.strata) b[base.classes[st.ss].label() + st.pair.label] += st.count;
      CHECK(a == b);
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        CHECK(r.classes[i].canonical == base.classes[i].canonical);
        if (!(r.classes[i].rep == r.classes[i].canonical)) moved = true;
      }
    }
    CHECK(moved);
  }
}
