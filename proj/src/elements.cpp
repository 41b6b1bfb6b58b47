#include "moltype/elements.hpp"

#include <array>

#include "moltype/errors.hpp"

namespace moltype {

namespace {

struct Entry {
  AtomicSymbol symbol;
  const char* name;
  int z;
  double weight;
};

constexpr std::array<Entry, 12> kTable = {{
    {AtomicSymbol::O, "O", 8, 15.999},
    {AtomicSymbol::H, "H", 1, 1.008},
    {AtomicSymbol::N, "N", 7, 14.007},
    {AtomicSymbol::C, "C", 6, 12.011},
    {AtomicSymbol::B, "B", 5, 10.81},
    {AtomicSymbol::Fe, "Fe", 26, 55.845},
    {AtomicSymbol::F, "F", 9, 18.998},
    {AtomicSymbol::Cl, "Cl", 17, 35.45},
    {AtomicSymbol::S, "S", 16, 32.06},
    {AtomicSymbol::Br, "Br", 35, 79.904},
    {AtomicSymbol::P, "P", 15, 30.974},
    {AtomicSymbol::I, "I", 53, 126.904},
}};

const Entry& entry(AtomicSymbol symbol) {
  for (const auto& e : kTable)
    if (e.symbol == symbol) return e;
  throw Error(Errc::unsupported_symbol, "unknown atomic symbol");
}

}  // namespace

ElementAttributes element_attributes(AtomicSymbol symbol) {
  const Entry& e = entry(symbol);
  return ElementAttributes{e.symbol, e.z, e.weight};
}

std::string to_string(AtomicSymbol symbol) { return entry(symbol).name; }

std::optional<AtomicSymbol> symbol_from_string(std::string_view token) {
  for (const auto& e : kTable)
    if (token == e.name) return e.symbol;
  return std::nullopt;
}

int noble_core_electrons(int z) {
  int core = 0;
  for (int noble : {2, 10, 18, 36})
    if (noble < z) core = noble;
  return core;
}

}  // namespace moltype
