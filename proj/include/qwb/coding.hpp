#pragma once

#include "qwb/syntax.hpp"
#include "qwb/theories.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qwb {

// ---------------------------------------------------------------------------
// Goedel numbering. Fixed symbol table (docs/coding.md), Cantor pairing
// throughout. Tags:
//   0  sequence          pair(0, pair(length, right-fold of elements))
//   1  numeral literal   pair(1, n)        (Zero is the literal 0)
//   2  Var               pair(2, strcode)
//   3  Succ              pair(3, child)    (child never a numeral literal)
//   4  Add   5 Mul       pair(tag, pair(lhs, rhs))
//   6  Eq    7 Le        pair(tag, pair(lhs, rhs))
//   8  Bot               pair(8, 0)
//   9  Not               pair(9, child)
//   10 And  11 Or  12 Imp  13 Iff   pair(tag, pair(lhs, rhs))
//   14 ForAll  15 Exists pair(tag, pair(strcode(var), body))
//   16 ProofOf           pair(16, pair(theory, pair(y, x)))
//   17 SubCert           pair(17, pair(w, pair(z, pair(y, x))))
//   18 ProofSkel         pair(18, pair(y, x))
//   19 AxUse             pair(19, pair(u, y))
// Marked-atom argument folds run back-to-front so that the potentially
// enormous first argument sits at minimal pairing depth.
// Identifiers are base-38 folds of a-z -> 1..26, 0-9 -> 27..36, _ -> 37.
// Theory references: Named pair(0, strcode), FiniteAxioms pair(1, seq).
// ---------------------------------------------------------------------------

struct GoedelNumber {
  BigNat value;
  bool operator==(const GoedelNumber& o) const { return value == o.value; }
  bool operator<(const GoedelNumber& o) const { return value < o.value; }
};

struct NotACode : std::runtime_error {
  explicit NotACode(const std::string& msg) : std::runtime_error(msg) {}
};

BigNat string_code(const std::string& s);
std::string decode_string(const BigNat& code);

GoedelNumber encode(const TermPtr& t);
GoedelNumber encode(const FormulaPtr& f);
GoedelNumber encode_seq(const std::vector<GoedelNumber>& items);
BigNat encode_theory_ref(const TheoryRef& ref);

using Decoded = std::variant<TermPtr, FormulaPtr, std::vector<GoedelNumber>>;

// Inverse of encode; throws NotACode when g codes nothing.
Decoded decode(const GoedelNumber& g);
TermPtr decode_term(const GoedelNumber& g);
FormulaPtr decode_formula(const GoedelNumber& g);
std::vector<GoedelNumber> decode_seq(const GoedelNumber& g);
TheoryRef decode_theory_ref(const BigNat& code);

// Sequence-code concatenation (the w = u ^ v ^ code(psi) device for the
// second derivability condition), operating on codes directly.
GoedelNumber concat_seq_codes(const GoedelNumber& u, const GoedelNumber& v);
GoedelNumber append_seq_code(const GoedelNumber& u, const GoedelNumber& item);

// ---------------------------------------------------------------------------
// Code-level substitution: the computation behind the SubCert atom. Works
// on numbers alone (unpair/pair), never through the syntax tree, so it is
// an independent route from substitute + encode. Replaces the free
// occurrences of the diagonal variable x0 in the formula coded by `code`
// with the numeral literal `n`. Returns the output code and the number of
// work units (nodes visited); throws NotACode on garbage input.
// ---------------------------------------------------------------------------
struct SubRun {
  BigNat output;
  BigNat steps;
};
SubRun run_code_substitution(const BigNat& code, const BigNat& n);

// Decidable core of SubCert(x, y, z, w): the run on (x, y) halts within w
// steps with output z. False (not an error) on non-codes.
bool sub_cert_holds(const BigNat& x, const BigNat& y, const BigNat& z,
                    const BigNat& w);

// ---------------------------------------------------------------------------
// The substitution formula bundle used by the Diagonal Lemma.
//   sub(x, y, z) = exists w. subcert(x, y, z, w)
// classifies as Sigma_1; its certificate hooks name the two computation
// step shapes that proofs about it may use (instance and functionality).
// ---------------------------------------------------------------------------
struct SubFormulaBundle {
  FormulaPtr sub;  // free variables var_x, var_y, var_z
  std::string var_x, var_y, var_z;
  std::vector<std::string> certificate_hooks;

  // sub with the three variables replaced by concrete terms.
  FormulaPtr applied(const TermPtr& x, const TermPtr& y, const TermPtr& z) const;
};

SubFormulaBundle build_sub_formula();

struct UnknownClass : std::runtime_error {
  explicit UnknownClass(const std::string& msg) : std::runtime_error(msg) {}
};

// Provability formula Pr_T with free variable x0, quantifier skeleton
// genuine so classification is meaningful:
//   finite / enumerator presentations:  exists y. proofof[T](x0, y)
//   defining-formula presentations:     exists y. (proofskel(x0, y)
//        /\ forall u. (u <= y -> (axuse(y, u) -> theta(u))))
FormulaPtr build_pr_formula(const TheorySpec& t);

// Pr_T applied to a concrete code: the closed provability sentence.
FormulaPtr pr_sentence(const TheorySpec& t, const GoedelNumber& code);

}  // namespace qwb
