#include "moltype/reactions.hpp"

#include <cmath>

#include "moltype/errors.hpp"

namespace moltype {

namespace {

void check_side(const std::vector<ReactionTerm>& side, const char* name) {
  if (side.empty())
    throw Error(Errc::empty_side, std::string(name) + " side is empty");
  for (const ReactionTerm& term : side)
    if (!(term.coefficient > 0.0))
      throw Error(Errc::nonpositive_coefficient,
                  std::string(name) + " coefficient must be positive");
}

void accumulate(std::map<AtomicSymbol, long long>& totals,
                const std::vector<ReactionTerm>& side, long long sign) {
  for (const ReactionTerm& term : side) {
    const double rounded = std::round(term.coefficient);
    if (std::abs(term.coefficient - rounded) > 1e-9)
      throw Error(Errc::rational_coefficients,
                  "balance_check needs integral coefficients");
    const auto coeff = static_cast<long long>(rounded);
    for (const Atom& atom : term.molecule.atoms)
      totals[atom.attributes.symbol] += sign * coeff;
  }
}

}  // namespace

Reaction make_reaction(std::vector<ReactionTerm> reactants,
                       std::vector<ReactionTerm> products,
                       std::vector<Condition> conditions, double rate,
                       std::optional<TimeWindow> window) {
  check_side(reactants, "reactant");
  check_side(products, "product");
  if (!(rate >= 0.0))
    throw Error(Errc::negative_rate, "rate must be non-negative");
  for (const Condition& condition : conditions) {
    if (const auto* t = std::get_if<TempCondition>(&condition); t && !(t->kelvin >= 0.0))
      throw Error(Errc::invalid_condition, "temperature must be non-negative");
    if (const auto* p = std::get_if<PressureCondition>(&condition); p && !(p->atm >= 0.0))
      throw Error(Errc::invalid_condition, "pressure must be non-negative");
  }
  if (window && !(window->start <= window->end))
    throw Error(Errc::invalid_condition, "time window must not be reversed");
  return Reaction{std::move(reactants), std::move(products), std::move(conditions),
                  window, rate};
}

std::map<AtomicSymbol, long long> balance_check(const Reaction& reaction) {
  std::map<AtomicSymbol, long long> totals;
  accumulate(totals, reaction.products, +1);
  accumulate(totals, reaction.reactants, -1);
  return totals;
}

bool is_balanced(const Reaction& reaction) {
  for (const auto& [symbol, surplus] : balance_check(reaction))
    if (surplus != 0) return false;
  return true;
}

}  // namespace moltype
