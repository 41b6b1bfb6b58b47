#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moltype/geometry.hpp"
#include "moltype/inference.hpp"
#include "moltype/mol_io.hpp"
#include "moltype/reactions.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace moltype;

PYBIND11_MODULE(_moltype, m) {
  m.doc() = "typed molecular structures with exact bond orders and trace-based sampling";

  py::register_exception<Error>(m, "MoltypeError");

  py::enum_<AtomicSymbol>(m, "AtomicSymbol")
      .value("O", AtomicSymbol::O)
      .value("H", AtomicSymbol::H)
      .value("N", AtomicSymbol::N)
      .value("C", AtomicSymbol::C)
      .value("B", AtomicSymbol::B)
      .value("Fe", AtomicSymbol::Fe)
      .value("F", AtomicSymbol::F)
      .value("Cl", AtomicSymbol::Cl)
      .value("S", AtomicSymbol::S)
      .value("Br", AtomicSymbol::Br)
      .value("P", AtomicSymbol::P)
      .value("I", AtomicSymbol::I);

  py::class_<ElementAttributes>(m, "ElementAttributes")
      .def_readonly("symbol", &ElementAttributes::symbol)
      .def_readonly("atomic_number", &ElementAttributes::atomic_number)
      .def_readonly("atomic_weight", &ElementAttributes::atomic_weight);

  py::class_<Coordinate>(m, "Coordinate")
      .def(py::init<double, double, double>(), "x"_a = 0.0, "y"_a = 0.0, "z"_a = 0.0)
      .def_readwrite("x", &Coordinate::x)
      .def_readwrite("y", &Coordinate::y)
      .def_readwrite("z", &Coordinate::z)
      .def("__eq__", [](const Coordinate& a, const Coordinate& b) { return a == b; })
      .def("__repr__", [](const Coordinate& c) {
        return "Coordinate(" + format_double(c.x) + ", " + format_double(c.y) + ", " +
               format_double(c.z) + ")";
      });

  py::enum_<OrbitalLabel>(m, "OrbitalLabel")
      .value("S", OrbitalLabel::S)
      .value("Px", OrbitalLabel::Px)
      .value("Py", OrbitalLabel::Py)
      .value("Pz", OrbitalLabel::Pz)
      .value("Dxy", OrbitalLabel::Dxy)
      .value("Dyz", OrbitalLabel::Dyz)
      .value("Dxz", OrbitalLabel::Dxz)
      .value("Dx2y2", OrbitalLabel::Dx2y2)
      .value("Dz2", OrbitalLabel::Dz2)
      .value("Fxxx", OrbitalLabel::Fxxx)
      .value("Fxxy", OrbitalLabel::Fxxy)
      .value("Fxxz", OrbitalLabel::Fxxz)
      .value("Fxyy", OrbitalLabel::Fxyy)
      .value("Fxyz", OrbitalLabel::Fxyz)
      .value("Fxzz", OrbitalLabel::Fxzz)
      .value("Fzzz", OrbitalLabel::Fzzz);

  py::class_<HybridComponent>(m, "HybridComponent")
      .def(py::init<double, OrbitalLabel>(), "weight"_a, "label"_a)
      .def_readwrite("weight", &HybridComponent::weight)
      .def_readwrite("label", &HybridComponent::label)
      .def("__eq__", [](const HybridComponent& a, const HybridComponent& b) { return a == b; });

  py::class_<Orbital>(m, "Orbital")
      .def(py::init<OrbitalLabel, int, std::optional<Coordinate>,
                    std::optional<std::vector<HybridComponent>>>(),
           "label"_a, "electron_count"_a, "orientation"_a = std::nullopt,
           "hybrid_components"_a = std::nullopt)
      .def_readwrite("label", &Orbital::label)
      .def_readwrite("electron_count", &Orbital::electron_count)
      .def_readwrite("orientation", &Orbital::orientation)
      .def_readwrite("hybrid_components", &Orbital::hybrid_components)
      .def("__eq__", [](const Orbital& a, const Orbital& b) { return a == b; });

  py::class_<SubShell>(m, "SubShell")
      .def(py::init<std::vector<Orbital>>(), "orbitals"_a)
      .def_readwrite("orbitals", &SubShell::orbitals)
      .def("__eq__", [](const SubShell& a, const SubShell& b) { return a == b; });

  py::class_<Shell>(m, "Shell")
      .def(py::init<int, std::optional<SubShell>, std::optional<SubShell>,
                    std::optional<SubShell>, std::optional<SubShell>>(),
           "n"_a, "s"_a = std::nullopt, "p"_a = std::nullopt, "d"_a = std::nullopt,
           "f"_a = std::nullopt)
      .def_readwrite("n", &Shell::n)
      .def_readwrite("s", &Shell::s)
      .def_readwrite("p", &Shell::p)
      .def_readwrite("d", &Shell::d)
      .def_readwrite("f", &Shell::f)
      .def("__eq__", [](const Shell& a, const Shell& b) { return a == b; });

  py::class_<Atom>(m, "Atom")
      .def(py::init([](AtomId id, AtomicSymbol symbol, const Coordinate& at,
                       std::optional<Shells> shells) {
             return Atom{id, element_attributes(symbol), at,
                         shells.value_or(Shells{})};
           }),
           "atom_id"_a, "symbol"_a, "coordinate"_a = Coordinate{},
           "shells"_a = std::nullopt)
      .def_readonly("atom_id", &Atom::atom_id)
      .def_readonly("attributes", &Atom::attributes)
      .def_readonly("coordinate", &Atom::coordinate)
      .def_readonly("shells", &Atom::shells)
      .def("__eq__", [](const Atom& a, const Atom& b) { return a == b; });

  py::class_<Edge>(m, "Edge")
      .def(py::init<AtomId, AtomId>(), "i"_a, "j"_a)
      .def_readonly("a", &Edge::a)
      .def_readonly("b", &Edge::b)
      .def("__eq__", [](const Edge& a, const Edge& b) { return a == b; })
      .def("__repr__", [](const Edge& e) { return to_string(e); });

  py::class_<BondingSystem>(m, "BondingSystem")
      .def(py::init<int, std::vector<Edge>>(), "electrons"_a, "edges"_a)
      .def_readonly("electrons", &BondingSystem::electrons)
      .def_readonly("edges", &BondingSystem::edges)
      .def("delocalized", &BondingSystem::delocalized)
      .def("__eq__", [](const BondingSystem& a, const BondingSystem& b) { return a == b; });

  py::class_<Molecule>(m, "Molecule")
      .def_readonly("atoms", &Molecule::atoms)
      .def_readonly("systems", &Molecule::systems)
      .def("__eq__", [](const Molecule& a, const Molecule& b) { return a == b; })
      .def("__repr__", [](const Molecule& m_) {
        return "<Molecule atoms=" + std::to_string(m_.atoms.size()) +
               " systems=" + std::to_string(m_.systems.size()) + ">";
      });

  m.def("element_attributes", &element_attributes, "symbol"_a);
  m.def("build_molecule", &build_molecule, "atoms"_a, "systems"_a);
  m.def("neighbors", &neighbors, "molecule"_a, "atom_id"_a);
  m.def("update_coordinate", &update_coordinate, "molecule"_a, "atom_id"_a, "position"_a);
  m.def("relabel_atoms", &relabel_atoms, "molecule"_a, "mapping"_a);
  m.def("net_charge", &net_charge, "molecule"_a);
  m.def(
      "bond_order",
      [](const Molecule& molecule, AtomId i, AtomId j) {
        const Rational r = bond_order(molecule, i, j);
        return py::make_tuple(r.num(), r.den());
      },
      "molecule"_a, "i"_a, "j"_a, "Exact bond order as a (numerator, denominator) pair");
  m.def(
      "dietz_constitution",
      [](const Molecule& molecule) { return to_string(dietz_constitution(molecule)); },
      "molecule"_a, "Rendered vertex and bonding-system sets");

  m.def("ground_state_config", &ground_state_config, "z"_a);
  m.def("compact_config", &compact_config, "shells"_a);
  m.def("total_electrons",
        py::overload_cast<const Shells&>(&total_electrons), "shells"_a);
  m.def(
      "validate_shells",
      [](const Shells& shells) {
        std::vector<std::string> out;
        for (const Violation& v : validate_shells(shells))
          out.push_back(to_string(v.rule) + " at " + v.where);
        return out;
      },
      "shells"_a);

  m.def("euclidean_distance", &euclidean_distance, "a"_a, "b"_a);
  m.def("hausdorff_distance", &hausdorff_distance, "a"_a, "b"_a);
  m.def("bond_length", &bond_length, "molecule"_a, "i"_a, "j"_a);
  m.def("bond_angle", &bond_angle, "molecule"_a, "i"_a, "j"_a, "k"_a);
  m.def("dihedral_angle", &dihedral_angle, "molecule"_a, "i"_a, "j"_a, "k"_a, "l"_a);

  py::class_<RigidRotation>(m, "RigidRotation")
      .def_readonly("axis", &RigidRotation::axis)
      .def_readonly("angle", &RigidRotation::angle);
  m.def("rot_identity", &rot_identity);
  m.def("make_rotation", &make_rotation, "axis"_a, "angle"_a);
  m.def("rot_mul", &rot_mul, "a"_a, "b"_a);
  m.def("rot_inv", &rot_inv, "r"_a);
  m.def("apply_rotation", &apply_rotation, "molecule"_a, "rotation"_a);

  m.def("serialize_molecule", &serialize_molecule, "molecule"_a);
  m.def("parse_molecule", [](const std::string& text) { return parse_molecule(text); },
        "text"_a);
  m.def("write_sdf", &write_sdf, "molecules"_a);
  m.def(
      "parse_sdf",
      [](const std::string& text) {
        const SdfParse parsed = parse_sdf(text);
        std::vector<std::string> errors;
        for (const SdfRecordError& e : parsed.errors)
          errors.push_back("record " + std::to_string(e.record) + ": " + e.message);
        return py::make_tuple(parsed.molecules, errors, parsed.warnings);
      },
      "text"_a, "Returns (molecules, record_errors, warnings)");
  m.def("ring_systems", &ring_systems, "ids"_a, "sigma_electrons"_a = 2,
        "pi_electrons"_a = 0);

  py::class_<TempCondition>(m, "TempCondition")
      .def(py::init<double>(), "kelvin"_a)
      .def_readonly("kelvin", &TempCondition::kelvin);
  py::class_<PressureCondition>(m, "PressureCondition")
      .def(py::init<double>(), "atm"_a)
      .def_readonly("atm", &PressureCondition::atm);
  py::class_<TimeWindow>(m, "TimeWindow")
      .def(py::init<double, double>(), "start"_a, "end"_a)
      .def_readonly("start", &TimeWindow::start)
      .def_readonly("end", &TimeWindow::end);
  py::class_<ReactionTerm>(m, "ReactionTerm")
      .def(py::init<double, Molecule>(), "coefficient"_a, "molecule"_a)
      .def_readonly("coefficient", &ReactionTerm::coefficient)
      .def_readonly("molecule", &ReactionTerm::molecule);
  py::class_<Reaction>(m, "Reaction")
      .def_readonly("reactants", &Reaction::reactants)
      .def_readonly("products", &Reaction::products)
      .def_readonly("rate", &Reaction::rate);
  m.def("make_reaction", &make_reaction, "reactants"_a, "products"_a, "conditions"_a,
        "rate"_a, "window"_a = std::nullopt);
  m.def(
      "balance_check",
      [](const Reaction& reaction) {
        std::map<std::string, long long> out;
        for (const auto& [symbol, surplus] : balance_check(reaction))
          out[to_string(symbol)] = surplus;
        return out;
      },
      "reaction"_a, "Per-element product-minus-reactant atom surplus");
  m.def("is_balanced", &is_balanced, "reaction"_a);
  m.def("serialize_reaction", &serialize_reaction, "reaction"_a);
  m.def("parse_reaction", [](const std::string& text) { return parse_reaction(text); },
        "text"_a);

  m.def(
      "sample_molecules",
      [](const Molecule& observed, double jitter, size_t samples, size_t burn_in,
         std::uint64_t seed) {
        std::vector<std::pair<Molecule, double>> out;
        for (auto& sample : prob::metropolis_hastings(prob::molecule_model(observed),
                                                      jitter, samples, burn_in, seed))
          out.emplace_back(std::move(sample.value), sample.log_weight);
        return out;
      },
      "observed"_a, "jitter"_a = 0.1, "samples"_a = 1000, "burn_in"_a = 1000,
      "seed"_a = 0, "Metropolis-Hastings posterior draws as (molecule, log_weight)");
  m.def(
      "coin_posterior",
      [](const std::vector<bool>& observations, const std::string& method, double jitter,
         size_t samples, size_t burn_in, std::uint64_t seed) {
        if (method == "rejection")
          return prob::rejection_sample(
              prob::coin_model(observations, prob::CoinConditioning::hard), samples, seed);
        std::vector<double> out;
        for (const auto& sample : prob::metropolis_hastings(
                 prob::coin_model(observations, prob::CoinConditioning::soft), jitter,
                 samples, burn_in, seed))
          out.push_back(sample.value);
        return out;
      },
      "observations"_a, "method"_a = "mh", "jitter"_a = 0.1, "samples"_a = 10000,
      "burn_in"_a = 1000, "seed"_a = 0);
  m.def("normal_quantile", &prob::normal_quantile, "p"_a);
  m.def("normal_pdf", &prob::normal_pdf, "mu"_a, "sigma"_a, "x"_a);
}
