#ifndef FINLANG_CORE_ROOTDATA_HPP_
#define FINLANG_CORE_ROOTDATA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace finlang {

// A root datum (X, Phi, Y, Phi^vee) in explicit coordinates.  X and Y carry
// dual bases, so the pairing is the dot product.  Positive roots come first;
// root i + N is the negative of root i.
struct RootDatum {
  int rank = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  int num_positive = 0;
  std::vector<int> simple;
  std::string cartan_label;

  int num_roots() const noexcept { return static_cast<int>(roots.size()); }
  int semisimple_rank() const noexcept { return static_cast<int>(simple.size()); }
  bool is_positive(int i) const noexcept { return i < num_positive; }
  int negative(int i) const noexcept { return i < num_positive ? i + num_positive : i - num_positive; }

  std::optional<int> root_index(IntVector const& v) const;
  std::optional<int> coroot_index(IntVector const& v) const;

  // Reflection s_alpha on X, and on Y.
  IntMatrix reflection(int i) const;
  IntMatrix coreflection(int i) const;

  // K[i][j] = <simple_i, simple_j^vee>.
  IntMatrix cartan_matrix() const;

  // Permutation of root indices induced by m acting on X, checking that the
  // inverse transpose carries coroots along.  nullopt if m does not normalize.
  std::optional<std::vector<int>> root_permutation(IntMatrix const& m) const;
};

struct DatumComponent {
  std::string type;          // A1, A2, B2, C2, G2
  std::vector<int> simple;   // positions into RootDatum::simple
};

// Irreducible components of the root system, typed from the Cartan matrix.
// Throws Unsupported for irreducible pieces outside the supported list.
std::vector<DatumComponent> components(RootDatum const& d);

// Sorted component types joined by 'x' ("A1xA1", "" for a torus).
std::string root_system_label(RootDatum const& d);

std::string dual_type_label(std::string const& type);

// Closure of the simple data under simple reflections.
RootDatum build_datum(int rank, std::vector<IntVector> const& simple_roots,
                      std::vector<IntVector> const& simple_coroots, std::string label);

RootDatum dual_datum(RootDatum const& d);

// Sub-datum on a negation-closed subset of roots, with inherited positivity.
struct SubDatum {
  RootDatum datum;
  std::vector<int> ambient_index;  // datum root i is ambient root ambient_index[i]
};

SubDatum restrict_datum(RootDatum const& d, std::vector<int> const& root_subset);

// Roots alpha of d with <alpha, s> integral, s a torsion point of Y (x) Q/Z.
SubDatum centralizer_subdatum(RootDatum const& d, TorsionPoint const& s);

// Indices of roots whose coroot pairs integrally with s in X (x) Q/Z.
std::vector<int> integral_coroot_indices(RootDatum const& d, TorsionPoint const& s);

struct GroupSpec {
  std::string name;
  std::string type_label;
  std::string isogeny;
  RootDatum datum;
  std::vector<int> twist;           // simple-root permutation
  IntMatrix sigma;                  // pinned diagram automorphism on X
  Int q = 0;
  Int p = 0;
  int exponent = 0;
  std::vector<IntMatrix> component_group;  // generators, acting on X
  std::string oracle;               // oracle menu name, empty if none
  bool connected = true;

  // F = q * sigma on X.
  IntMatrix frobenius() const { return sigma.scaled(q); }
};

// Parses "key = value" text.  q_override > 0 replaces (or supplies) q.
GroupSpec parse_group_spec(std::string const& text, Int q_override = 0);

// Shortcut names (sl2, gl2, pgl2, sl3, gl3, pgl3, sp4, so5, g2, torus1, o2).
std::optional<std::string> named_group_config(std::string const& name);
GroupSpec named_group_spec(std::string const& name, Int q);

// |G^ad(F_q) / image of G(F_q)|, via Frobenius-fixed points on the prime-to-p
// torsion of X / Z Phi.
Int whittaker_torsor_size(GroupSpec const& g);

// Cartan matrix of a supported irreducible type.
IntMatrix cartan_of_type(std::string const& type);

}  // namespace finlang

#endif  // FINLANG_CORE_ROOTDATA_HPP_
