#pragma once

#include "qwb/hierarchy.hpp"
#include "qwb/syntax.hpp"
#include "qwb/verdict.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace qwb {

struct FoProof;  // fo_proofs.hpp

// A presentation of a theory: a finite axiom list, a total deterministic
// axiom enumerator, or a defining formula over sentence codes. The declared
// hierarchy class is the class of the presentation (Sigma_1 for finite
// lists and enumerators).
struct TheorySpec {
  enum class Kind { FiniteList, Enumerator, DefiningFormula };

  std::string name;
  Kind kind = Kind::FiniteList;
  std::vector<FormulaPtr> axioms;                  // FiniteList
  std::function<FormulaPtr(size_t)> enumerator;    // Enumerator
  FormulaPtr defining;                             // DefiningFormula, free x0
  HierarchyClass declared_class = HierarchyClass::sigma(1);

  // i-th axiom where the presentation provides one (FiniteList beyond the
  // end yields nullopt; DefiningFormula has no index view).
  std::optional<FormulaPtr> axiom(size_t i) const;

  TheoryRef ref() const;

  static std::shared_ptr<const TheorySpec> finite(std::string name,
                                                  std::vector<FormulaPtr> axioms);
  static std::shared_ptr<const TheorySpec> enumerated(
      std::string name, std::function<FormulaPtr(size_t)> gen);
  static std::shared_ptr<const TheorySpec> defined_by(std::string name,
                                                      FormulaPtr phi,
                                                      HierarchyClass cls);
};

using TheoryPtr = std::shared_ptr<const TheorySpec>;

// Name -> theory map used to resolve Named references. standard() carries
// q, pa and qprime; FiniteAxioms references resolve without any registry.
class TheoryRegistry {
 public:
  void add(TheoryPtr t);
  TheoryPtr lookup(const std::string& name) const;
  TheoryPtr resolve(const TheoryRef& ref) const;
  static const TheoryRegistry& standard();

 private:
  std::map<std::string, TheoryPtr> by_name_;
};

// Robinson's Q over {0,S,+,*,<=}: the eight axioms of PA minus induction
// plus the totality axiom forall x. exists y. (x = 0 \/ x = S(y)), with the
// <= definition included since <= is primitive. Nine axioms total.
TheoryPtr q_theory();

// Conjunction of Q's axioms, right associated.
FormulaPtr q_conjunction();

struct ArityError : std::runtime_error {
  explicit ArityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Induction instance for phi over the designated variable x0:
//   (phi(0) /\ forall x0. (phi -> phi[S(x0)/x0])) -> forall x0. phi
FormulaPtr pa_schema(const FormulaPtr& phi);

// Q plus induction instances, enumerated deterministically.
TheoryPtr pa_theory();

// The paper's theory Q': Q, then K-schema instances
//   Pr_U(phi -> psi) -> (Pr_U(phi) -> Pr_U(psi))
// over an enumeration of (U, phi, psi), then formalized Sigma_1-completeness
// instances sigma -> Pr_U(sigma) whose guard "Q is contained in U" is
// certified by a found proof of /\Q in U, everything dovetailed by stages.
TheoryPtr q_prime();

struct QPrimeAxiom {
  FormulaPtr axiom;
  int family = 0;  // 0: Q axiom, 1: K schema, 2: sigma -> Pr_U(sigma)
  std::optional<TheoryRef> theory;          // families 1, 2
  std::shared_ptr<const FoProof> guard_proof;  // family 2: proof of /\Q in U
};

// Provenance of the i-th Q' axiom; family-2 entries carry the guard proof
// for auditing.
QPrimeAxiom q_prime_axiom_info(size_t i);

// Consistency sentence Con(T) = ~Pr_T(code of bot).
FormulaPtr con_sentence(const TheorySpec& t);

struct Pi1DecidingEntry {
  FormulaPtr sentence;
  enum class Outcome { Proved, Refuted, Undecided } outcome;
};
struct Pi1DecidingReport {
  std::vector<Pi1DecidingEntry> entries;
  size_t undecided_count() const;
};

// For each Pi_1 sentence in the corpus, searches for a proof of it and of
// its negation in T within fuel and reports the undecided residue.
Pi1DecidingReport pi1_deciding_check(const TheorySpec& t,
                                     const std::vector<FormulaPtr>& corpus,
                                     const Fuel& fuel);

struct TheoryFacts {
  Verdict contains_q;  // via proof search for /\Q
  std::vector<std::pair<FormulaPtr, Verdict>> sound_sample;
};

TheoryFacts theory_facts(const TheorySpec& t, const Fuel& fuel,
                         size_t sample_axioms = 8);

}  // namespace qwb
