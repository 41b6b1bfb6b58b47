#ifndef MOLTYPE_REACTIONS_HPP
#define MOLTYPE_REACTIONS_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "moltype/mol_core.hpp"

namespace moltype {

// ============================================================================
// Types
// ============================================================================

struct TempCondition {
  double kelvin = 0.0;

  bool operator==(const TempCondition&) const = default;
};

struct PressureCondition {
  double atm = 0.0;

  bool operator==(const PressureCondition&) const = default;
};

using Condition = std::variant<TempCondition, PressureCondition>;

struct TimeWindow {
  double start = 0.0;
  double end = 0.0;

  bool operator==(const TimeWindow&) const = default;
};

// Stoichiometric coefficient attached to a species.
struct ReactionTerm {
  double coefficient = 1.0;
  Molecule molecule;

  bool operator==(const ReactionTerm&) const = default;
};

struct Reaction {
  std::vector<ReactionTerm> reactants;
  std::vector<ReactionTerm> products;
  std::vector<Condition> conditions;
  std::optional<TimeWindow> window;
  double rate = 0.0;  // uninterpreted, non-negative

  bool operator==(const Reaction&) const = default;
};

// ============================================================================
// Operations
// ============================================================================

// Validates: both sides non-empty, coefficients positive, rate non-negative,
// temperatures and pressures non-negative.
Reaction make_reaction(std::vector<ReactionTerm> reactants,
                       std::vector<ReactionTerm> products,
                       std::vector<Condition> conditions, double rate,
                       std::optional<TimeWindow> window = std::nullopt);

// Per-element atom surplus of products over reactants, coefficient-weighted.
// All-zero means balanced. Coefficients must be integral within 1e-9.
std::map<AtomicSymbol, long long> balance_check(const Reaction& reaction);

bool is_balanced(const Reaction& reaction);

}  // namespace moltype

#endif
