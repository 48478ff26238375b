#ifndef FINLANG_CORE_SPRINGER_TABLES_HPP_
#define FINLANG_CORE_SPRINGER_TABLES_HPP_

// Special unipotent classes, their component groups A(u) (taken modulo the
// center), canonical quotients, duality, and the family group of each
// two-sided cell.  Embedded data, validated on first use.

#include <string>
#include <vector>

#include "coxeter.hpp"
#include "finite_group.hpp"

namespace finlang {

struct SpecialClassRecord {
  std::string type_label;
  std::string class_label;
  int dim = 0;
  FiniteGroup a_of_u;
  FiniteGroup abar_of_u;
  std::vector<int> abar_map;  // A(u) -> Abar(u)
  std::string dual_class;
  int cell_id = -1;           // two-sided cell of W(type)
};

struct FamilyGroupRecord {
  std::string type_label;
  int cell_id = -1;
  std::string class_label;
  FiniteGroup group;
  bool is_exceptional = false;
};

std::string const& table_version();

// Weyl group of a supported irreducible type in simple-root coordinates.
CoxeterGroup standard_weyl(std::string const& type);

// Supported irreducible types: A1, A2, B2, C2 (same table as B2), G2.
std::vector<SpecialClassRecord> const& special_classes(std::string const& type);
SpecialClassRecord const& special_class(std::string const& type, std::string const& class_label);
FamilyGroupRecord family_group(std::string const& type, int cell_id);

// Number of positive roots of an irreducible supported type.
int positive_root_count(std::string const& type);

// Per-component special class of the cell containing w, for a Weyl group
// whose components are given (types on the same side as g's roots).  Class
// labels are those of the dual side, where the cell is matched.
std::vector<std::string> cell_classes(CoxeterGroup const& g, std::vector<DatumComponent> const& comps, int w);

// Family group of a product: Abar of each component class, in order.
struct ProductFamily {
  std::vector<std::string> types;
  std::vector<std::string> classes;
  FiniteGroup group;
  std::vector<int> factor_orders;
};

ProductFamily product_family(std::vector<std::string> const& types, std::vector<std::string> const& classes);

// Automorphism of the product induced by a component permutation
// (component i goes to perm[i]); within a component the induced outer
// automorphism is trivial for all supported types.
Automorphism induced_automorphism(ProductFamily const& f, std::vector<int> const& perm);

// "A1:reg,B2:subreg" style label, sorted; "1" when there are no components.
std::string unipotent_label(std::vector<std::string> const& types, std::vector<std::string> const& classes);

// Permutation of simple-root positions induced by a (positivity preserving)
// lattice map, and the induced permutation of components.
std::vector<int> simple_root_permutation(RootDatum const& d, IntMatrix const& a);
std::vector<int> component_permutation(std::vector<DatumComponent> const& comps, std::vector<int> const& simple_perm);

}  // namespace finlang

#endif  // FINLANG_CORE_SPRINGER_TABLES_HPP_
