#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/primdec.hpp"

namespace flatcheck {

/// R = Q[y]/q together with its Krull dimension.
struct BaseRing {
  RingPtr ambient;
  Ideal q;
  int n = 0;

  /// Computes n = dim q. Throws InvalidInput for the unit ideal.
  static BaseRing make(Ideal q);
};

/// Cyclic module F = Q[y,x]/I. Only cyclic presentations are supported.
struct ModuleSpec {
  RingPtr ambient;
  Ideal I;
  /// True when some generator of q had to be added to I.
  bool added_base_relations = false;

  /// Checks that every base variable occurs (VariableClash otherwise) and
  /// adds the generators of q that I does not already contain.
  static ModuleSpec make(const BaseRing& base, Ideal I);

  std::vector<std::string> fibre_variables(const BaseRing& base) const;
};

/// S = Q[y,u]/L, a regular, n-dimensional, dominant R-algebra.
struct RegularCover {
  RingPtr ambient;
  Ideal L;

  static RegularCover make(const BaseRing& base, Ideal L);

  std::vector<std::string> cover_variables(const BaseRing& base) const;
};

struct FlatnessProblem {
  BaseRing base;
  ModuleSpec module;
  std::optional<RegularCover> cover;
  /// Overrides n = dim R; flagged in the verdict.
  std::optional<int> power;
  /// User assertions: "analytically_irreducible", "source_regular".
  std::set<std::string> assertions;
  /// Hypotheses whose failure is tolerated.
  std::set<std::string> waivers;
  /// Regular-source mode: verify regularity of A by the Jacobian criterion
  /// instead of trusting the assertion.
  bool verify_source_regularity = false;
  DecompositionOptions decomposition;
};

enum class HypothesisStatus {
  passed,
  failed,
  waived,
  user_asserted,
  implied,
  not_asserted,
  not_applicable,
};

std::string to_string(HypothesisStatus status);

struct HypothesisCheck {
  std::string name;
  HypothesisStatus status = HypothesisStatus::not_applicable;
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;
  /// How the cover was chosen: "supplied", "identity", "none" or "source".
  std::string cover_mode;

  const HypothesisCheck* find(const std::string& name) const;
  /// Failed checks that were not waived.
  std::vector<const HypothesisCheck*> violations() const;
  /// True when every hypothesis needed for a FLAT conclusion holds.
  bool conclusive() const;
};

/// Ideal of the n-fold fibred power tensored with the cover.
struct FibredPower {
  Ideal J;
  /// Variable of the module or cover -> its name in J's ring, per copy
  /// ("x" -> "x__1", "u" -> "u_u").
  std::vector<std::pair<std::string, std::string>> renaming;
  /// Renamings forced by a collision with an existing name.
  std::vector<std::string> collisions;
};

/// q + sum of the n relabelled copies of I + L, in
/// Q[x__1..., x__n..., u_..., y]. Throws InvalidInput for n < 1.
FibredPower build_fibred_power(const BaseRing& base, const ModuleSpec& module, int n,
                               const RegularCover* cover);

/// An associated prime P of J whose contraction c to the base strictly
/// contains q, with `separator` a generator of c outside q and
/// `torsion_element` an m outside J with separator * m in J.
struct Witness {
  Ideal prime;
  Ideal contraction;
  Polynomial separator;
  Polynomial torsion_element;
};

struct TorsionAnalysis {
  std::vector<Ideal> associated_primes;
  std::vector<Ideal> contractions;
  std::vector<Witness> witnesses;
  DecompositionStats stats;
};

/// Associated primes of J and their contractions. Throws InvalidInput
/// unless q is contained in J.
TorsionAnalysis torsion_analysis(const Ideal& J, const BaseRing& base,
                                 const DecompositionOptions& options = {});
std::vector<Witness> torsion_witnesses(const Ideal& J, const BaseRing& base,
                                       const DecompositionOptions& options = {});

/// J ⊆ P, q ⊆ c ⊆ P, separator ∈ c \ q and separator * m ∈ J with m ∉ J,
/// checked without the decomposition.
bool witness_is_sound(const Witness& w, const Ideal& J, const BaseRing& base);

enum class VerdictKind { flat, non_flat, torsion_free_inconclusive };

std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind result = VerdictKind::flat;
  std::vector<Witness> witnesses;
  HypothesisReport hypotheses;
  int power = 0;
  bool power_overridden = false;
  FibredPower fibred;
  std::vector<Ideal> associated_primes;
  std::vector<Ideal> contractions;
  std::vector<std::string> notes;
  DecompositionStats stats;
  std::map<std::string, double> timings;
};

/// Hypotheses of the criterion (cover mode) as a report; never throws for
/// a failing hypothesis.
HypothesisReport verify_hypotheses(const FlatnessProblem& problem);
/// Hypotheses of the regular-source variant.
HypothesisReport verify_source_hypotheses(const FlatnessProblem& problem);

/// Torsion test on the n-fold fibred power tensored with the cover.
/// Throws HypothesisViolation for failed, non-waived hypotheses.
Verdict check_flatness(const FlatnessProblem& problem);

/// Torsion test on the (n+1)-fold fibred power of a regular source, no cover.
Verdict check_flatness_regular_source(const FlatnessProblem& problem);

/// Jacobian criterion: the c x c minors of the generators' Jacobian, c the
/// codimension, together with the ideal generate (1), and every associated
/// prime has the top dimension.
struct SmoothnessResult {
  bool smooth = false;
  std::string detail;
};
SmoothnessResult jacobian_smooth(const Ideal& ideal);

}  // namespace flatcheck
