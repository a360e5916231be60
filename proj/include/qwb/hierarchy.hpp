#pragma once

#include "qwb/syntax.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qwb {

// Arithmetical hierarchy classification. Purely syntactic: the least class
// containing the formula under the inductive definition (Sigma_0 = Pi_0 =
// bounded formulas; Sigma_{n+1} contains the closure of Pi_n under exists
// and is closed under and/or/exists/bounded-forall; dually for Pi_{n+1}).
// Delta is only ever reported at level 0.

struct HierarchyClass {
  enum class Kind { Sigma, Pi, Delta };
  Kind kind = Kind::Delta;
  unsigned level = 0;

  static HierarchyClass sigma(unsigned n) { return {Kind::Sigma, n}; }
  static HierarchyClass pi(unsigned n) { return {Kind::Pi, n}; }
  static HierarchyClass delta0() { return {Kind::Delta, 0}; }

  bool operator==(const HierarchyClass& o) const {
    return kind == o.kind && level == o.level;
  }
  bool operator!=(const HierarchyClass& o) const { return !(*this == o); }
  std::string str() const;
};

// Guarded-quantifier test: every universal quantifier has the shape
// forall x. (x <= t -> ...) and every existential the shape
// exists x. (x <= t /\ ...), with x not occurring in the guard term t.
bool is_bounded(const FormulaPtr& f);

// Recognizes the two guard shapes at a single node; returns the guard term
// when the node is a guarded quantifier over its bound variable.
std::optional<TermPtr> bounded_guard(const FormulaPtr& f);

// Least syntactic class. Iff is expanded into a conjunction of
// implications and Not is pushed to negation normal form first. When a
// formula lies in both Sigma_n and Pi_n for the minimal n >= 1, the kind
// is oriented by the first unbounded quantifier in leftmost-outermost
// order (exists -> Sigma, forall -> Pi), which keeps negation duality
// exact; a formula with no unbounded quantifier is bounded, i.e. Delta 0.
HierarchyClass classify(const FormulaPtr& f);

// Membership test against the inductive class (cumulative reading).
bool in_class(const FormulaPtr& f, const HierarchyClass& c);

struct NotAttainable : std::runtime_error {
  explicit NotAttainable(const std::string& msg) : std::runtime_error(msg) {}
};

// Result of coerce_to: an equivalent formula reaching the target class,
// plus a first-order proof certificate of the equivalence (fo_proofs text
// format; checkable with theory q and no hypotheses).
struct CoerceResult {
  FormulaPtr formula;
  std::string certificate_text;
};

// Classical prenex/NNF transformations with recorded certificates. As a
// declared extension, a closed diagonal block exists z. (Sub(m,m,z) /\ ...)
// is resolved through its substitution certificate; that certificate
// contains computation steps for the Sub lemmas rather than pure logic.
CoerceResult coerce_to(const FormulaPtr& f, const HierarchyClass& target);

}  // namespace qwb
