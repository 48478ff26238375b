#include "springer_tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace finlang {

namespace {

struct RawClass {
  char const* label;
  int dim;
  char const* a_of_u;  // "1", "Z/2", "S3"
  char const* dual;
};

// Special classes of the group whose Weyl group has the given type.  A(u) is
// pi_0 of the centralizer modulo the center; the canonical quotient is the
// identity for every supported type.
std::vector<RawClass> raw_table(std::string const& type) {
  if (type == "A1") return {{"1", 0, "1", "reg"}, {"reg", 2, "1", "1"}};
  if (type == "A2") return {{"1", 0, "1", "reg"}, {"subreg", 4, "1", "subreg"}, {"reg", 6, "1", "1"}};
  if (type == "B2" || type == "C2") return {{"1", 0, "1", "reg"}, {"subreg", 6, "Z/2", "subreg"}, {"reg", 8, "1", "1"}};
  if (type == "G2") return {{"1", 0, "1", "reg"}, {"G2(a1)", 10, "S3", "G2(a1)"}, {"reg", 12, "1", "1"}};
  throw_unsupported("no special-class table for type '" + type + "'");
}

FiniteGroup group_from_name(std::string const& name) {
  if (name == "1") return FiniteGroup();
  if (name == "Z/2") return FiniteGroup::cyclic(2);
  if (name == "S3") return FiniteGroup::symmetric3();
  throw_internal("unknown table group " + name);
}

std::string middle_class(std::string const& type) {
  if (type == "A2" || type == "B2" || type == "C2") return "subreg";
  if (type == "G2") return "G2(a1)";
  return {};
}

bool is_surjective_hom(FiniteGroup const& a, FiniteGroup const& b, std::vector<int> const& map) {
  if (static_cast<int>(map.size()) != a.order()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(b.order()), false);
  for (int x = 0; x < a.order(); ++x) {
    hit[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = true;
    for (int y = 0; y < a.order(); ++y)
      if (map[static_cast<std::size_t>(a.mul(x, y))] != b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)])) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

SpecialClassRecord const& special_class_lookup_guard(std::vector<SpecialClassRecord> const& recs, std::string const& label) {
  for (auto const& r : recs)
    if (r.class_label == label) return r;
  throw_internal("table refers to a missing class '" + label + "'");
}

struct Tables {
  std::map<std::string, std::vector<SpecialClassRecord>> classes;
  std::map<std::string, std::vector<FamilyGroupRecord>> families;
};

Tables build_tables() {
  Tables t;
  for (std::string const type : {"A1", "A2", "B2", "C2", "G2"}) {
    CoxeterGroup const w = standard_weyl(type);
    KLTable const kl(w);
    CellPartition const cp = cells(w, kl);
    std::vector<SpecialClassRecord> recs;
    for (auto const& raw : raw_table(type)) {
      SpecialClassRecord r;
      r.type_label = type;
      r.class_label = raw.label;
      r.dim = raw.dim;
      r.a_of_u = group_from_name(raw.a_of_u);
      r.abar_of_u = r.a_of_u;
      r.abar_map.resize(static_cast<std::size_t>(r.a_of_u.order()));
      std::iota(r.abar_map.begin(), r.abar_map.end(), 0);
      r.dual_class = raw.dual;
      if (r.class_label == "1") {
        r.cell_id = cp.cell_of[static_cast<std::size_t>(w.longest())];
      } else if (r.class_label == "reg") {
        r.cell_id = cp.cell_of[0];
      } else {
        r.cell_id = cp.cell_of[static_cast<std::size_t>(w.generator(0))];
      }
      recs.push_back(std::move(r));
    }

    // Validation.
    FINLANG_CHECK(recs.size() == cp.two_sided_cells.size(),
                  "special class count differs from the two-sided cell count for " + type);
    std::vector<bool> cell_used(cp.two_sided_cells.size(), false);
    for (auto const& r : recs) {
      auto const& d = special_class_lookup_guard(recs, r.dual_class);
      FINLANG_CHECK(d.dual_class == r.class_label, "duality is not an involution on " + type);
      FINLANG_CHECK(is_surjective_hom(r.a_of_u, r.abar_of_u, r.abar_map), "canonical quotient map is not a surjective homomorphism");
      FINLANG_CHECK(!cell_used[static_cast<std::size_t>(r.cell_id)], "two classes matched to one cell for " + type);
      cell_used[static_cast<std::size_t>(r.cell_id)] = true;
      if (r.class_label == "1") FINLANG_CHECK(r.a_of_u.order() == 1 && r.dim == 0, "trivial class must have trivial A(u)");
    }
    FINLANG_CHECK(std::any_of(recs.begin(), recs.end(), [](auto const& r) { return r.class_label == "reg"; }),
                  "regular class missing");

    std::vector<FamilyGroupRecord> fams(cp.two_sided_cells.size());
    for (auto const& r : recs) {
      FamilyGroupRecord f;
      f.type_label = type;
      f.cell_id = r.cell_id;
      f.class_label = r.class_label;
      f.group = r.abar_of_u;
      f.is_exceptional = false;
      auto const& dual = special_class_lookup_guard(recs, r.dual_class);
      FINLANG_CHECK(is_isomorphic(f.group, dual.abar_of_u), "family group differs from Abar of the dual class");
      fams[static_cast<std::size_t>(r.cell_id)] = std::move(f);
    }
    t.classes[type] = std::move(recs);
    t.families[type] = std::move(fams);
  }
  return t;
}

Tables const& tables() {
  static Tables const t = build_tables();
  return t;
}

}  // namespace

CoxeterGroup standard_weyl(std::string const& type) {
  IntMatrix const k = cartan_of_type(type);
  int const r = k.rows();
  std::vector<IntVector> roots, coroots;
  for (int j = 0; j < r; ++j) {
    IntVector a(static_cast<std::size_t>(r)), c(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = k(j, i);
    c[static_cast<std::size_t>(j)] = 1;
    roots.push_back(a);
    coroots.push_back(c);
  }
  return CoxeterGroup::from_datum(build_datum(r, roots, coroots, type));
}

std::string const& table_version() {
  static std::string const v = "finlang-tables-1 (A1 A2 B2 C2 G2; A(u) modulo center; Abar = A)";
  return v;
}

int positive_root_count(std::string const& type) {
  if (type == "A1") return 1;
  if (type == "A2") return 3;
  if (type == "B2" || type == "C2") return 4;
  if (type == "G2") return 6;
  throw_unsupported("unsupported type '" + type + "'");
}

std::vector<SpecialClassRecord> const& special_classes(std::string const& type) {
  auto const& t = tables();
  auto it = t.classes.find(type);
  if (it == t.classes.end()) throw_unsupported("no special-class table for type '" + type + "'");
  return it->second;
}

SpecialClassRecord const& special_class(std::string const& type, std::string const& class_label) {
  for (auto const& r : special_classes(type))
    if (r.class_label == class_label) return r;
  throw_internal("unknown special class '" + class_label + "' of type " + type);
}

FamilyGroupRecord family_group(std::string const& type, int cell_id) {
  auto const& t = tables();
  auto it = t.families.find(type);
  if (it == t.families.end()) throw_unsupported("no family-group table for type '" + type + "'");
  if (cell_id < 0 || cell_id >= static_cast<int>(it->second.size())) throw_internal("unknown cell id for type " + type);
  return it->second[static_cast<std::size_t>(cell_id)];
}

std::vector<std::string> cell_classes(CoxeterGroup const& g, std::vector<DatumComponent> const& comps, int w) {
  std::vector<std::string> out;
  for (auto const& c : comps) {
    int len = 0;
    for (int s : g.word(w))
      if (std::find(c.simple.begin(), c.simple.end(), s) != c.simple.end()) ++len;
    if (len == 0) {
      out.push_back("reg");
    } else if (len == positive_root_count(c.type)) {
      out.push_back("1");
    } else {
      out.push_back(middle_class(c.type));
    }
  }
  return out;
}

ProductFamily product_family(std::vector<std::string> const& types, std::vector<std::string> const& classes) {
  FINLANG_CHECK(types.size() == classes.size(), "type/class count mismatch");
  ProductFamily f;
  f.types = types;
  f.classes = classes;
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto const& rec = special_class(types[i], classes[i]);
    FINLANG_CHECK(!family_group(types[i], rec.cell_id).is_exceptional, "exceptional cell in a supported type");
    f.group = direct_product(f.group, rec.abar_of_u);
    f.factor_orders.push_back(rec.abar_of_u.order());
  }
  return f;
}

Automorphism induced_automorphism(ProductFamily const& f, std::vector<int> const& perm) {
  std::size_t const k = f.factor_orders.size();
  FINLANG_CHECK(perm.size() == k, "component permutation has the wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    auto const j = static_cast<std::size_t>(perm[i]);
    if (f.types[i] != f.types[j] || f.classes[i] != f.classes[j])
      throw_internal("automorphism moves the cell: component permutation does not preserve classes");
  }
  Automorphism out(static_cast<std::size_t>(f.group.order()));
  for (int x = 0; x < f.group.order(); ++x) {
    std::vector<int> digits(k);
    int rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = rest % f.factor_orders[i];
      rest /= f.factor_orders[i];
    }
    std::vector<int> moved(k);
    for (std::size_t i = 0; i < k; ++i) moved[static_cast<std::size_t>(perm[i])] = digits[i];
    int y = 0;
    for (std::size_t i = k; i-- > 0;) y = y * f.factor_orders[i] + moved[i];
    out[static_cast<std::size_t>(x)] = y;
  }
  FINLANG_CHECK(is_automorphism(f.group, out), "factor permutation is not an automorphism");
  return out;
}

std::string unipotent_label(std::vector<std::string> const& types, std::vector<std::string> const& classes) {
  if (types.empty()) return "1";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < types.size(); ++i) parts.push_back(types[i] + ":" + classes[i]);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto const& p : parts) {
    if (!out.empty()) out += ',';
    out += p;
  }
  return out;
}

std::vector<int> simple_root_permutation(RootDatum const& d, IntMatrix const& a) {
  auto perm = d.root_permutation(a);
  if (!perm) throw_internal("lattice map does not normalize the root subsystem");
  std::vector<int> out;
  for (int s : d.simple) {
    int const img = (*perm)[static_cast<std::size_t>(s)];
    auto it = std::find(d.simple.begin(), d.simple.end(), img);
    if (it == d.simple.end()) throw_internal("lattice map does not preserve the simple roots");
    out.push_back(static_cast<int>(it - d.simple.begin()));
  }
  return out;
}

std::vector<int> component_permutation(std::vector<DatumComponent> const& comps, std::vector<int> const& simple_perm) {
  std::vector<int> out;
  for (auto const& c : comps) {
    int const img = simple_perm[static_cast<std::size_t>(c.simple.front())];
    int target = -1;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (std::find(comps[j].simple.begin(), comps[j].simple.end(), img) != comps[j].simple.end()) target = static_cast<int>(j);
    FINLANG_CHECK(target >= 0, "simple root outside all components");
    out.push_back(target);
  }
  return out;
}

}  // namespace finlang
