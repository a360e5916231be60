#pragma once

#include "qwb/bignat.hpp"

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwb {

// ---------------------------------------------------------------------------
// Terms of the language {0, S, +, *, <=, =}.
//
// Successor towers over 0 are kept in a canonical compressed form: the
// Numeral node carries the tower height as a bignum, so numeral(n) is O(1)
// in memory for any n. mk_succ(Numeral k) yields Numeral k+1; Zero is
// Numeral 0. Succ nodes therefore only ever wrap non-numeral terms.
// ---------------------------------------------------------------------------

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  enum class Kind { Numeral, Var, Succ, Add, Mul };

  Kind kind() const { return kind_; }
  const BigNat& value() const { return value_; }        // Numeral
  const std::string& name() const { return name_; }     // Var
  const TermPtr& child() const { return a_; }           // Succ
  const TermPtr& lhs() const { return a_; }             // Add, Mul
  const TermPtr& rhs() const { return b_; }             // Add, Mul

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Number of abstract syntax nodes, counting a Numeral n as the S-tower
  // it abbreviates (n + 1 nodes).
  BigNat size() const;

  friend TermPtr mk_num(BigNat n);
  friend TermPtr mk_var(const std::string& name);
  friend TermPtr mk_succ(TermPtr t);
  friend TermPtr mk_add(TermPtr l, TermPtr r);
  friend TermPtr mk_mul(TermPtr l, TermPtr r);

 private:
  Term() = default;
  Kind kind_ = Kind::Numeral;
  BigNat value_;
  std::string name_;
  TermPtr a_, b_;
};

TermPtr mk_num(BigNat n);
TermPtr mk_zero();
TermPtr mk_var(const std::string& name);
TermPtr mk_succ(TermPtr t);
TermPtr mk_add(TermPtr l, TermPtr r);
TermPtr mk_mul(TermPtr l, TermPtr r);

// The numeral term for n: S...S(0) with n applications, in canonical form.
TermPtr numeral(const BigNat& n);

// ---------------------------------------------------------------------------
// Theory references. Formulas may embed a reference to a theory (inside
// provability atoms); a reference is either a registry name or a
// self-contained finite list of axiom codes.
// ---------------------------------------------------------------------------

struct TheoryRef {
  enum class Kind { Named, FiniteAxioms };
  Kind kind = Kind::Named;
  std::string name;                  // Named
  std::vector<BigNat> axiom_codes;   // FiniteAxioms

  static TheoryRef named(std::string n);
  static TheoryRef finite(std::vector<BigNat> codes);
  bool operator==(const TheoryRef& o) const;
  bool operator!=(const TheoryRef& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Formulas.
//
// Marked atoms are the declared reflective nodes of the workbench: their
// truth at concrete arguments is decided by running the named computation
// (proof checking, code-level substitution) instead of by arithmetic
// evaluation. Everything above them is ordinary syntax.
//
//   ProofOf[T](x, y)   "y is the code of a T-proof of the formula coded x"
//   SubCert(x, y, z, w) "code-level substitution of the literal y for the
//                        diagonal variable in the formula coded x halts
//                        within w work units with output z"
//   ProofSkel(x, y)    ProofOf minus theory-axiom checks (steps flagged)
//   AxUse(y, u)        "u is used as a theory-axiom code in the proof y"
// ---------------------------------------------------------------------------

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class MarkKind { ProofOf, SubCert, ProofSkel, AxUse };

class Formula {
 public:
  enum class Kind { Eq, Le, Bot, Not, And, Or, Imp, Iff, ForAll, Exists, Marked };

  Kind kind() const { return kind_; }
  const TermPtr& t1() const { return t1_; }
  const TermPtr& t2() const { return t2_; }
  const FormulaPtr& f1() const { return f1_; }
  const FormulaPtr& f2() const { return f2_; }
  const std::string& var() const { return var_; }                // quantifiers
  MarkKind mark() const { return mark_; }                        // Marked
  const std::optional<TheoryRef>& theory() const { return theory_; }
  const std::vector<TermPtr>& args() const { return args_; }     // Marked

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  friend FormulaPtr mk_eq(TermPtr a, TermPtr b);
  friend FormulaPtr mk_le(TermPtr a, TermPtr b);
  friend FormulaPtr mk_bot();
  friend FormulaPtr mk_not(FormulaPtr f);
  friend FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
  friend FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
  friend FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
  friend FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
  friend FormulaPtr mk_forall(const std::string& v, FormulaPtr f);
  friend FormulaPtr mk_exists(const std::string& v, FormulaPtr f);
  friend FormulaPtr mk_marked(MarkKind k, std::optional<TheoryRef> th,
                              std::vector<TermPtr> args);

 private:
  Formula() = default;
  Kind kind_ = Kind::Bot;
  TermPtr t1_, t2_;
  FormulaPtr f1_, f2_;
  std::string var_;
  MarkKind mark_ = MarkKind::ProofOf;
  std::optional<TheoryRef> theory_;
  std::vector<TermPtr> args_;
};

FormulaPtr mk_eq(TermPtr a, TermPtr b);
FormulaPtr mk_le(TermPtr a, TermPtr b);
FormulaPtr mk_bot();
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(const std::string& v, FormulaPtr f);
FormulaPtr mk_exists(const std::string& v, FormulaPtr f);
FormulaPtr mk_marked(MarkKind k, std::optional<TheoryRef> th,
                     std::vector<TermPtr> args);

// Provability atom Pr_T(t) in its genuine Sigma_1 shape:
//   exists y. proofof[T](t, y)
// with y chosen fresh for t by the least-suffix scheme.
FormulaPtr mk_pr(const TheoryRef& theory, TermPtr t);

// The designated diagonal variable.
inline const std::string kDiagonalVar = "x0";

// ---------------------------------------------------------------------------
// Variable bookkeeping and substitution.
// ---------------------------------------------------------------------------

std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> free_vars(const FormulaPtr& f);
std::set<std::string> all_vars(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

// Least-suffix freshening: base, base1, base2, ... first name not in used.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& repl);
// Capture-avoiding; bound variables renamed by fresh_name when needed.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& repl);

// True when substituting repl for free v in f captures no variable of repl
// (i.e. the textbook "repl is free for v in f" side condition).
bool free_for(const TermPtr& repl, const std::string& v, const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Printing and parsing. print_full is the canonical fully parenthesized
// interchange form; print_pretty drops parentheses by precedence. Both
// round-trip through parse. Grammar: docs/grammar.md.
// ---------------------------------------------------------------------------

std::string print_term(const TermPtr& t);
std::string print_full(const FormulaPtr& f);
std::string print_pretty(const FormulaPtr& f);
std::string print_theory_ref(const TheoryRef& ref);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t column);
  size_t column;  // 1-based
};

FormulaPtr parse_formula(const std::string& text);
TermPtr parse_term(const std::string& text);

}  // namespace qwb
