#ifndef FINLANG_CORE_STRATA_HPP_
#define FINLANG_CORE_STRATA_HPP_

// Group-side counting: W-orbits of Frobenius-stable characters of the torus,
// two-sided cells of the integral Weyl group, and the equivariant count of
// each stratum.  Handles disconnected groups through the full extended Weyl
// group W = W0 . Gamma.

#include <string>
#include <unordered_map>
#include <vector>

#include "choice.hpp"
#include "coxeter.hpp"
#include "finite_group.hpp"
#include "rootdata.hpp"
#include "springer_tables.hpp"

namespace finlang {

// Closure of the reflections and the component-group generators, acting on X.
struct ExtendedWeyl {
  std::vector<IntMatrix> elements;  // identity first
  std::unordered_map<IntMatrix, int, IntMatrixHash> index;
  FiniteGroup group;
  std::vector<bool> in_identity_component;

  int size() const noexcept { return static_cast<int>(elements.size()); }
  int find(IntMatrix const& m) const;
};

ExtendedWeyl extended_weyl(GroupSpec const& g, CoxeterGroup const& w0);

// One W-orbit of stable characters, with the chosen representative L.
struct CharacterOrbit {
  TorsionPoint canonical;
  TorsionPoint rep;
  int orbit_size = 0;
  std::vector<int> phi;           // integral coroots at rep
  SubDatum levi;
  std::vector<int> stabilizer;    // W_L, as extended-Weyl indices
  std::vector<int> omega;         // elements of W_L preserving Phi_L^+

  std::string label() const { return canonical.label(); }
};

std::vector<CharacterOrbit> semisimple_parameters(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                                  Chooser& choose);

// Coset W_L0 . w of elements w in W0 with w F L = L.
struct BetaClass {
  int rep = 0;                    // W0 index of the distinguished element
  std::vector<int> coset;         // W0 indices
  int distinguished = 0;          // how many coset members are distinguished
};

struct OrbitContext {
  CharacterOrbit const* orbit = nullptr;
  CoxeterGroup levi_weyl;
  std::vector<DatumComponent> comps;
  std::vector<std::string> dual_types;
  CellPartition cells;
  std::vector<BetaClass> betas;
  std::vector<int> beta_of;       // W0 index -> beta, -1 outside
};

OrbitContext orbit_context(GroupSpec const& g, CoxeterGroup const& w0, CharacterOrbit const& orbit, Chooser& choose);

std::vector<BetaClass> beta_classes(GroupSpec const& g, CoxeterGroup const& w0, CoxeterGroup const& levi_weyl,
                                    SubDatum const& levi, TorsionPoint const& rep);

// M_{w^beta} sigma, and the component permutations of lattice maps
// preserving Phi_L^+.
IntMatrix beta_twist(GroupSpec const& g, CoxeterGroup const& w0, OrbitContext const& ctx, int beta);
std::vector<int> levi_component_perm(OrbitContext const& ctx, IntMatrix const& a);

// beta -> Ad_sigma(gamma) beta for gamma in W_L.
int twisted_beta_action(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w, OrbitContext const& ctx,
                        int gamma, int beta);

// A cell c of W_L0 (up to Omega_L) with the set of beta fixing it.
struct CellParameter {
  int cell = 0;
  std::vector<std::string> classes;  // dual-side class per component
  std::string label;
  std::vector<int> betas;            // beta with w^beta sigma . c = c
  std::vector<int> omega_c;          // stabilizer of c in Omega_L
};

std::vector<CellParameter> unipotent_parameters(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                                OrbitContext const& ctx, Chooser& choose);

struct StratumInput {
  CellParameter const* cell = nullptr;
  int beta = 0;
  std::vector<int> omega_cb;        // stabilizer of beta in Omega_c
};

// Orbits of Omega_c on the beta set of the cell; one input per orbit.
std::vector<StratumInput> beta_orbits(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w,
                                      OrbitContext const& ctx, CellParameter const& cell, Chooser& choose);

struct StratumGroups {
  ProductFamily family;
  FiniteGroup e;                    // family x| Omega_{c,beta}
  Automorphism f;                   // (a, gamma) -> (tau_beta(a), gamma)
};

StratumGroups stratum_groups(GroupSpec const& g, CoxeterGroup const& w0, ExtendedWeyl const& w, OrbitContext const& ctx,
                             StratumInput const& in);

int stratum_count(StratumGroups const& s);

struct StratifiedStratum {
  int orbit = -1;
  std::string pseudo_levi;
  std::string unipotent;
  int cell_size = 0;
  std::string family_group;
  int omega_order = 0;
  std::string beta;
  int count = 0;
};

struct StratifiedResult {
  std::vector<CharacterOrbit> orbits;
  std::vector<StratifiedStratum> strata;
  Int total = 0;
};

StratifiedResult run_stratified(GroupSpec const& g, Chooser& choose);
Int stratified_count(GroupSpec const& g);

// Sorted dual-side component types joined by 'x', "T" for a torus.
std::string dual_levi_label(RootDatum const& d);

}  // namespace finlang

#endif  // FINLANG_CORE_STRATA_HPP_
