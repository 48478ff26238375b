#include <set>

#include "doctest.h"
#include "springer_tables.hpp"

using namespace finlang;

namespace {

char const* const kTypes[] = {"A1", "A2", "B2", "C2", "G2"};

bool is_surjective_hom(FiniteGroup const& a, FiniteGroup const& b, std::vector<int> const& map) {
  if (static_cast<int>(map.size()) != a.order()) return false;
  std::set<int> image;
  for (int x = 0; x < a.order(); ++x) {
    image.insert(map[x]);
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  }
  return static_cast<int>(image.size()) == b.order();
}

}  // namespace

TEST_SUITE("springer_tables") {
  TEST_CASE("duality is an involution on special classes") {
    for (char const* type : kTypes) {
      CAPTURE(type);
      std::string const dual = dual_type_label(type);
      for (auto const& rec : special_classes(type)) {
        SpecialClassRecord const& d = special_class(dual, rec.dual_class);
        CHECK(d.dual_class == rec.class_label);
      }
    }
  }

  TEST_CASE("one special class per two-sided cell") {
    for (char const* type : kTypes) {
      CAPTURE(type);
      CoxeterGroup const g = standard_weyl(type);
      CellPartition const c = cells(g, KLTable(g));
      auto const& classes = special_classes(type);
      CHECK(classes.size() == c.two_sided_cells.size());
      std::set<int> ids;
      for (auto const& rec : classes) ids.insert(rec.cell_id);
      CHECK(ids.size() == classes.size());
    }
  }

  TEST_CASE("family group matches the canonical quotient of the dual class") {
    for (char const* type : kTypes) {
      CAPTURE(type);
      CoxeterGroup const g = standard_weyl(type);
      CellPartition const c = cells(g, KLTable(g));
      std::string const dual = dual_type_label(type);
      for (int cell = 0; cell < static_cast<int>(c.two_sided_cells.size()); ++cell) {
        FamilyGroupRecord const fam = family_group(type, cell);
        CHECK_FALSE(fam.is_exceptional);
        SpecialClassRecord const& rec = special_class(dual, fam.class_label);
        CHECK(is_isomorphic(fam.group, rec.abar_of_u));
      }
      for (auto const& rec : special_classes(type)) CHECK(is_surjective_hom(rec.a_of_u, rec.abar_of_u, rec.abar_map));
    }
  }

  TEST_CASE("family groups of the middle cells") {
    auto middle = [](std::string const& type) {
      CoxeterGroup const g = standard_weyl(type);
      CellPartition const c = cells(g, KLTable(g));
      int const mid = c.cell_of[static_cast<std::size_t>(g.generator(0))];
      return family_group(type, mid).group;
    };
    CHECK(middle("A2").order() == 1);
    CHECK(describe_group(middle("B2")) == "Z/2");
    CHECK(describe_group(middle("G2")) == "S3");
    CHECK(family_group("A1", 0).group.order() == 1);
  }

  TEST_CASE("special class tables") {
    CHECK(special_classes("A1").size() == 2);
    SpecialClassRecord const& g2 = special_class("G2", "G2(a1)");
    CHECK(describe_group(g2.a_of_u) == "S3");
    CHECK(special_class("B2", "subreg").a_of_u.order() == 2);
    CHECK(special_class("A1", "reg").a_of_u.order() == 1);
    CHECK_THROWS(special_classes("F4"));
    CHECK(positive_root_count("G2") == 6);
  }

  TEST_CASE("cell classes of a product") {
    // Dual-side class of the cell of each element: identity is in the cell of
    // the regular class, w0 in the cell of the trivial class.
    CoxeterGroup const g = standard_weyl("G2");
    std::vector<DatumComponent> comps = components(g.datum());
    auto const top = cell_classes(g, comps, 0);
    auto const bottom = cell_classes(g, comps, g.longest());
    REQUIRE(top.size() == 1);
    CHECK(top != bottom);
    std::set<std::string> seen;
    for (int w = 0; w < g.size(); ++w) seen.insert(cell_classes(g, comps, w)[0]);
    CHECK(seen.size() == 3);
  }

  TEST_CASE("induced automorphisms") {
    ProductFamily const trivial = product_family({"A1", "A1"}, {"reg", "reg"});
    CHECK(trivial.group.order() == 1);
    CHECK(induced_automorphism(trivial, {1, 0}) == identity_automorphism(trivial.group));
    // A swap that moves the class tuple is not an automorphism of this family.
    CHECK_THROWS(induced_automorphism(product_family({"A1", "A1"}, {"1", "reg"}), {1, 0}));

    ProductFamily const two = product_family({"B2", "B2"}, {"subreg", "subreg"});
    CHECK(two.group.order() == 4);
    CHECK(induced_automorphism(two, {0, 1}) == identity_automorphism(two.group));
    Automorphism const swap = induced_automorphism(two, {1, 0});
    CHECK(is_automorphism(two.group, swap));
    CHECK(automorphism_order(swap) == 2);

    ProductFamily const g2 = product_family({"G2"}, {"G2(a1)"});
    CHECK(induced_automorphism(g2, {0}) == identity_automorphism(g2.group));
  }

  TEST_CASE("unipotent labels") {
    CHECK(unipotent_label({}, {}) == "1");
    CHECK(unipotent_label({"A1"}, {"reg"}) == "A1:reg");
    CHECK(unipotent_label({"B2", "A1"}, {"subreg", "1"}) == unipotent_label({"A1", "B2"}, {"1", "subreg"}));
  }
}
