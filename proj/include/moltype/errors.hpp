#ifndef MOLTYPE_ERRORS_HPP
#define MOLTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moltype {

enum class Errc {
  // molecule construction
  bad_atom_id,
  duplicate_atom_id,
  self_loop,
  duplicate_edge,
  empty_system,
  nonpositive_electrons,
  dangling_edge,
  nonfinite_coordinate,
  // lookups and relabeling
  unknown_atom,
  not_a_bijection,
  domain_mismatch,
  // orbitals
  unsupported_z,
  // geometry
  empty_molecule,
  degenerate_geometry,
  bad_axis,
  // inference
  empty_options,
  bad_sigma,
  score_of_negative,
  zero_initial_weight,
  // io
  syntax_error,
  semantic_error,
  malformed_counts_line,
  unsupported_symbol,
  unsupported_bond_type,
  conversion_unsupported,
  // reactions
  nonpositive_coefficient,
  negative_rate,
  empty_side,
  invalid_condition,
  rational_coefficients,
  // ring construction
  too_few_atoms,
  duplicate_ids,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the canonical-format and SDF parsers; carries source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(Errc::syntax_error, "line " + std::to_string(line) + ", col " +
                                      std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace moltype

#endif
