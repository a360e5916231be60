#pragma once

#include "qwb/bignat.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qwb {

// Explicit resource bound for semi-decision procedures: witness searches
// range over 0..quantifier_bound, proof searches and other reflective
// computations are charged against step_budget.
struct Fuel {
  BigNat quantifier_bound;
  BigNat step_budget;

  Fuel(BigNat bound, BigNat steps)
      : quantifier_bound(std::move(bound)), step_budget(std::move(steps)) {
    if (quantifier_bound <= 0 || step_budget <= 0)
      throw std::invalid_argument("fuel components must be positive");
  }
};

// Three-valued evaluation result. Unknown is an honest value, not an
// error: it reports that the allotted fuel decided nothing.
struct Verdict {
  enum class State { True, False, Unknown };
  State state = State::Unknown;
  std::string reason;              // set for Unknown
  std::optional<BigNat> witness;   // set when True came from a found witness

  static Verdict yes() { return {State::True, "", std::nullopt}; }
  static Verdict yes_with(BigNat w) { return {State::True, "", std::move(w)}; }
  static Verdict no() { return {State::False, "", std::nullopt}; }
  static Verdict unknown(std::string why) {
    return {State::Unknown, std::move(why), std::nullopt};
  }

  bool is_true() const { return state == State::True; }
  bool is_false() const { return state == State::False; }
  bool decided() const { return state != State::Unknown; }
  std::string str() const;
};

}  // namespace qwb
