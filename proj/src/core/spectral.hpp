#ifndef FINLANG_CORE_SPECTRAL_HPP_
#define FINLANG_CORE_SPECTRAL_HPP_

// Dual-side counting: Frobenius-stable semisimple classes s of G*, special
// unipotent classes of Z(s), the extended component groups with their
// Frobenius action, and the resulting M-bar sets and L-parameters.

#include <string>
#include <vector>

#include "choice.hpp"
#include "coxeter.hpp"
#include "finite_group.hpp"
#include "rootdata.hpp"
#include "springer_tables.hpp"

namespace finlang {

// Solutions of (M_w F - 1) s = 0 in X (x) Q/Z for one Weyl element w.
struct StableSolve {
  int w = 0;
  Int determinant = 0;
  std::vector<TorsionPoint> points;
};

StableSolve solve_stable_points(GroupSpec const& g, CoxeterGroup const& w, int element);

// Union over w of the solutions: torsion points s with w F s = s for some w.
std::vector<TorsionPoint> stable_points(GroupSpec const& g, CoxeterGroup const& w);

FiniteGroup weyl_as_group(CoxeterGroup const& w);

struct SemisimpleClass {
  TorsionPoint canonical;     // lexicographically least point of the orbit
  TorsionPoint rep;           // working representative
  int orbit_size = 0;
  int witness = 0;            // w with w F(rep) = rep
  std::vector<int> phi_s;     // root indices with <rep, coroot> integral
  SubDatum pseudo_levi;       // roots of G indexed by phi_s
  std::vector<int> pi0;       // {w : w rep = rep, w Phi_s^+ = Phi_s^+}, sorted

  std::string label() const { return canonical.label(); }
};

std::vector<SemisimpleClass> enumerate_ss_classes(GroupSpec const& g, CoxeterGroup const& w, Chooser& choose);

struct ExtendedComponentGroup {
  FiniteGroup abar;           // Abar_{H0}(u) x| Stab
  Automorphism f_action;
  int n = 1;                  // order of f_action
  int connected_order = 1;    // |Abar_{H0}(u)|
  int stab_order = 1;
};

struct MbarElement {
  int x = 0;                  // element a of the coset abar . F
  int x_class_size = 0;
  std::vector<int> centralizer;
  int irr_count = 0;
};

enum class NormalForm { kSL2, kWD };

struct FiniteLParameter {
  std::string ss_label;
  std::string unipotent;      // invariant special-class label
  MbarElement frob;
  FiniteGroup packet_group;
  NormalForm normal_form = NormalForm::kSL2;

  int packet_size() const { return packet_group.class_count(); }
};

// A special class of the pseudo-Levi (up to pi_0) whose total class is
// Frobenius-stable.
struct SpecialPair {
  std::vector<std::string> types;    // dual-side component types
  std::vector<std::string> classes;  // chosen tuple C
  std::vector<int> stab;             // Stab_{pi_0}(C), as pi_0 positions
  int gamma = 0;                     // pi_0 position with gamma . delta(C) = C
  std::string label;
};

struct SpectralStratum {
  int ss = -1;                       // index into the class list
  SpecialPair pair;
  ExtendedComponentGroup ext;
  std::vector<MbarElement> mbar;
  int count = 0;
};

// Everything needed to work with one semisimple class.
struct ClassContext {
  SemisimpleClass const* ss = nullptr;
  CoxeterGroup levi_weyl;
  std::vector<DatumComponent> comps;
  IntMatrix tau;                    // v w_1 sigma, preserving Phi_s^+
  FiniteGroup pi0;
  Automorphism f_pi0;               // x -> tau x tau^-1
  std::vector<std::vector<int>> pi0_component_perm;
  std::vector<int> delta;           // component permutation of tau
};

ClassContext class_context(GroupSpec const& g, CoxeterGroup const& w, SemisimpleClass const& ss);

std::vector<SpecialPair> special_pairs(ClassContext const& ctx, Chooser& choose);

ExtendedComponentGroup extended_group(ClassContext const& ctx, SpecialPair const& pair, Chooser& choose);

std::vector<MbarElement> mbar(ExtendedComponentGroup const& e);

struct SpectralResult {
  std::vector<SemisimpleClass> classes;
  std::vector<SpectralStratum> strata;
  std::vector<FiniteLParameter> parameters;
  Int total = 0;
};

// Connected groups only.
SpectralResult run_spectral(GroupSpec const& g, Chooser& choose);

std::vector<FiniteLParameter> parameters(GroupSpec const& g);
FiniteLParameter sl2_wd_convert(FiniteLParameter const& p);
Int total_count(GroupSpec const& g);

}  // namespace finlang

#endif  // FINLANG_CORE_SPECTRAL_HPP_
