#ifndef MOLTYPE_ELEMENTS_HPP
#define MOLTYPE_ELEMENTS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace moltype {

// Closed element set. Symbols outside this enumeration are rejected at parse
// time rather than carried as free-form strings.
enum class AtomicSymbol { O, H, N, C, B, Fe, F, Cl, S, Br, P, I };

inline constexpr AtomicSymbol kAllSymbols[] = {
    AtomicSymbol::O,  AtomicSymbol::H, AtomicSymbol::N,  AtomicSymbol::C,
    AtomicSymbol::B,  AtomicSymbol::Fe, AtomicSymbol::F, AtomicSymbol::Cl,
    AtomicSymbol::S,  AtomicSymbol::Br, AtomicSymbol::P, AtomicSymbol::I};

struct ElementAttributes {
  AtomicSymbol symbol;
  int atomic_number;
  double atomic_weight;  // standard atomic weight, u

  bool operator==(const ElementAttributes&) const = default;
};

ElementAttributes element_attributes(AtomicSymbol symbol);

std::string to_string(AtomicSymbol symbol);

// Returns nullopt for tokens outside the supported set.
std::optional<AtomicSymbol> symbol_from_string(std::string_view token);

// Electron count of the largest noble-gas core at or below z (He/Ne/Ar/Kr).
int noble_core_electrons(int z);

}  // namespace moltype

#endif
