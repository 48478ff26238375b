#include "doctest.h"
#include "error.hpp"
#include "rootdata.hpp"

using namespace finlang;

namespace {

ErrorCode parse_error(std::string const& text, Int q = 0) {
  try {
    parse_group_spec(text, q);
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::kMismatch;  // no error at all
}

}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("root system sizes and labels") {
    struct Row {
      char const* name;
      Int q;
      int roots;
      char const* label;
    };
    for (auto const& r : {Row{"sl2", 3, 2, "A1"}, Row{"gl2", 3, 2, "A1"}, Row{"sl3", 4, 6, "A2"}, Row{"sp4", 3, 8, "C2"},
                          Row{"so5", 3, 8, "B2"}, Row{"g2", 5, 12, "G2"}, Row{"torus1", 5, 0, ""}}) {
      CAPTURE(r.name);
      GroupSpec const g = named_group_spec(r.name, r.q);
      CHECK(g.datum.num_roots() == r.roots);
      CHECK(root_system_label(g.datum) == r.label);
      CHECK(g.connected);
    }
    CHECK(dual_type_label("B2") == "C2");
    CHECK(dual_type_label("C2") == "B2");
    CHECK(dual_type_label("G2") == "G2");
    CHECK(dual_type_label("A2") == "A2");
  }

  TEST_CASE("roots pair with their coroots to 2 and reflections are involutions") {
    for (auto const& [name, q] : {std::pair<char const*, Int>{"sl3", 4}, {"sp4", 3}, {"so5", 3}, {"g2", 5}, {"gl3", 2}}) {
      GroupSpec const g = named_group_spec(name, q);
      RootDatum const& d = g.datum;
      for (int i = 0; i < d.num_roots(); ++i) {
        Int dot = 0;
        for (int k = 0; k < d.rank; ++k) dot += d.roots[i][k] * d.coroots[i][k];
        CHECK(dot == 2);
        CHECK((d.reflection(i) * d.reflection(i)).is_identity());
        CHECK(d.root_permutation(d.reflection(i)).has_value());
        CHECK(d.negative(d.negative(i)) == i);
      }
    }
  }

  TEST_CASE("isogeny changes the lattice, not the roots") {
    GroupSpec const sc = named_group_spec("sl2", 3), ad = named_group_spec("pgl2", 3), gl = named_group_spec("gl2", 3);
    CHECK(sc.datum.roots[0] == IntVector{2});
    CHECK(ad.datum.roots[0] == IntVector{1});
    CHECK(gl.datum.rank == 2);
    CHECK(gl.datum.roots[0] == IntVector{1, -1});
  }

  TEST_CASE("components of the centralizer of a torsion point") {
    GroupSpec const g = named_group_spec("sp4", 3);
    auto const c0 = components(restrict_datum(g.datum, integral_coroot_indices(g.datum, TorsionPoint({0, 0}, 1))).datum);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].type == "C2");
    auto const half = integral_coroot_indices(g.datum, TorsionPoint({1, 1}, 2));
    auto const sub = restrict_datum(g.datum, half).datum;
    CHECK(sub.num_roots() > 0);
    CHECK(sub.num_roots() < g.datum.num_roots());
  }

  TEST_CASE("config parsing") {
    GroupSpec const g = parse_group_spec("# comment\nname = mine\ntype = A1xT1\nisogeny = sc\nq = 9\n");
    CHECK(g.q == 9);
    CHECK(g.p == 3);
    CHECK(g.datum.rank == 2);
    CHECK(parse_group_spec("type = A1\nq = 5\n", 7).q == 7);

    GroupSpec const tw = parse_group_spec("type = A2\nisogeny = sc\ntwist = [1, 0]\nq = 2\n");
    CHECK_FALSE(tw.sigma.is_identity());
    CHECK(tw.twist == std::vector<int>{1, 0});

    CHECK(parse_error("type = A1\nq = 6\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A1\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A1\nq = 3\ncolour = red\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A1\nq = 3\nq = 5\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = G2\nq = 3\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = B2\nq = 4\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A1\nq = 3\ntwist = [1]\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A2\nq = 3\nisogeny = [[1, 0], [0, 0]]\n") == ErrorCode::kConfig);
    CHECK(parse_error("type = A3\nq = 3\n") == ErrorCode::kUnsupported);
    CHECK(parse_error("type = T1\nq = 3\ncomponent_group = [[[2]]]\n") == ErrorCode::kConfig);
    CHECK_THROWS_AS(named_group_spec("nonsense", 3), Error);
  }

  TEST_CASE("component group data") {
    GroupSpec const o2 = named_group_spec("o2", 3);
    CHECK_FALSE(o2.connected);
    REQUIRE(o2.component_group.size() == 1);
    CHECK(o2.component_group[0] == IntMatrix::from_rows({{-1}}));
  }

  TEST_CASE("Whittaker torsor sizes") {
    CHECK(whittaker_torsor_size(named_group_spec("gl2", 3)) == 1);
    CHECK(whittaker_torsor_size(named_group_spec("gl3", 2)) == 1);
    CHECK(whittaker_torsor_size(named_group_spec("pgl2", 3)) == 1);
    CHECK(whittaker_torsor_size(named_group_spec("sl2", 3)) == 2);
    CHECK(whittaker_torsor_size(named_group_spec("sl2", 5)) == 2);
    CHECK(whittaker_torsor_size(named_group_spec("sl2", 4)) == 1);
    CHECK(whittaker_torsor_size(named_group_spec("sl3", 4)) == 3);
    CHECK(whittaker_torsor_size(named_group_spec("sl3", 2)) == 1);
    CHECK(whittaker_torsor_size(named_group_spec("sp4", 3)) == 2);
    CHECK(whittaker_torsor_size(named_group_spec("torus1", 5)) == 1);
  }
}
