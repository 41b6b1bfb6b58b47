// moltype: inspect, validate, convert and sample typed molecular structures.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "moltype/geometry.hpp"
#include "moltype/inference.hpp"
#include "moltype/mol_io.hpp"

#ifdef _WIN32
#include <io.h>
#define MOLTYPE_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define MOLTYPE_ISATTY isatty(fileno(stdout))
#endif

namespace {

using nlohmann::json;
using namespace moltype;

enum ExitStatus : int {
  exit_ok = 0,
  exit_invalid = 1,
  exit_usage = 2,
  exit_parse = 3,
};

bool use_color() {
  static const bool enabled = MOLTYPE_ISATTY && std::getenv("MOLTYPE_NO_COLOR") == nullptr;
  return enabled;
}

std::string green(const std::string& s) {
  return use_color() ? "\x1b[32m" + s + "\x1b[0m" : s;
}

std::string red(const std::string& s) {
  return use_color() ? "\x1b[31m" + s + "\x1b[0m" : s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string guess_format(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "sdf" || ext == "sd") return "sdf";
  return "canonical";
}

std::string one_line(const Molecule& molecule) {
  std::string text = serialize_molecule(molecule);
  for (char& c : text)
    if (c == '\n') c = ';';
  if (!text.empty() && text.back() == ';') text.pop_back();
  return text;
}

std::string hill_formula(const Molecule& molecule) {
  std::map<std::string, int> counts;
  for (const Atom& atom : molecule.atoms) counts[to_string(atom.attributes.symbol)]++;
  std::string out;
  auto take = [&](const std::string& sym) {
    const auto it = counts.find(sym);
    if (it == counts.end()) return;
    out += sym;
    if (it->second > 1) out += std::to_string(it->second);
    counts.erase(it);
  };
  take("C");
  take("H");
  for (const auto& [sym, n] : counts) {
    out += sym;
    if (n > 1) out += std::to_string(n);
  }
  return out;
}

// Parses one or more molecules regardless of source format. SDF record
// errors come back in `record_errors`; canonical parse failures throw.
std::vector<Molecule> load_molecules(const std::string& text, const std::string& format,
                                     std::vector<std::string>& record_errors,
                                     std::vector<std::string>& warnings) {
  if (format == "sdf") {
    SdfParse parsed = parse_sdf(text);
    for (const SdfRecordError& e : parsed.errors)
      record_errors.push_back("record " + std::to_string(e.record) + ": " + e.message);
    warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
    return std::move(parsed.molecules);
  }
  return {parse_molecule(text)};
}

// ============================================================================
// validate
// ============================================================================

int cmd_validate(const std::string& path, std::string format, bool as_json) {
  if (format.empty()) format = guess_format(path);
  const std::string text = read_file(path);

  std::vector<std::string> record_errors;
  std::vector<std::string> warnings;
  const std::vector<Molecule> molecules = load_molecules(text, format, record_errors, warnings);

  json violations = json::array();
  for (size_t m = 0; m < molecules.size(); ++m) {
    for (const Atom& atom : molecules[m].atoms)
      for (const Violation& v : validate_shells(atom.shells))
        violations.push_back({{"molecule", m + 1},
                              {"atom", atom.atom_id},
                              {"rule", to_string(v.rule)},
                              {"where", v.where}});
    for (const std::string& finding : lint_molecule(molecules[m]))
      warnings.push_back("molecule " + std::to_string(m + 1) + ": " + finding);
  }

  const bool valid = record_errors.empty() && violations.empty();
  if (as_json) {
    json report = {{"command", "validate"}, {"path", path},       {"format", format},
                   {"valid", valid},        {"molecules", molecules.size()},
                   {"violations", violations}, {"errors", record_errors},
                   {"warnings", warnings}};
    std::cout << report.dump(2) << "\n";
  } else {
    for (const std::string& e : record_errors) std::cout << red("error: ") << e << "\n";
    for (const auto& v : violations)
      std::cout << red("violation: ") << "molecule " << v["molecule"] << " atom "
                << v["atom"] << ": " << v["rule"].get<std::string>() << " at "
                << v["where"].get<std::string>() << "\n";
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
    std::cout << (valid ? green("ok") : red("invalid")) << ": " << molecules.size()
              << " molecule(s) from " << path << "\n";
  }
  return valid ? exit_ok : exit_invalid;
}

// ============================================================================
// info
// ============================================================================

json molecule_report(const Molecule& molecule) {
  json bonds = json::array();
  std::set<Edge> seen;
  for (const BondingSystem& system : molecule.systems)
    for (const Edge& edge : system.edges) seen.insert(edge);
  for (const Edge& edge : seen) {
    const Rational order = bond_order(molecule, edge.a, edge.b);
    bonds.push_back({{"i", edge.a},
                     {"j", edge.b},
                     {"order", order.str()},
                     {"order_value", order.to_double()},
                     {"length", bond_length(molecule, edge.a, edge.b)}});
  }
  const DietzConstitution dietz = dietz_constitution(molecule);
  std::istringstream dietz_lines(to_string(dietz));
  std::string v_line, b_line;
  std::getline(dietz_lines, v_line);
  std::getline(dietz_lines, b_line);
  return {{"atoms", molecule.atoms.size()},
          {"systems", molecule.systems.size()},
          {"formula", hill_formula(molecule)},
          {"net_charge", net_charge(molecule)},
          {"dietz", {{"vertices", v_line}, {"systems", b_line}}},
          {"bonds", bonds}};
}

int cmd_info(const std::string& path, std::string format, bool as_json) {
  if (format.empty()) format = guess_format(path);
  const std::string text = read_file(path);

  std::vector<std::string> record_errors;
  std::vector<std::string> warnings;
  const std::vector<Molecule> molecules = load_molecules(text, format, record_errors, warnings);

  json reports = json::array();
  for (const Molecule& molecule : molecules) reports.push_back(molecule_report(molecule));

  if (as_json) {
    json out = {{"command", "info"},
                {"path", path},
                {"format", format},
                {"molecules", reports},
                {"errors", record_errors},
                {"warnings", warnings}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& e : record_errors) std::cout << red("error: ") << e << "\n";
    for (size_t i = 0; i < reports.size(); ++i) {
      const json& r = reports[i];
      std::cout << "molecule " << (i + 1) << ": " << r["formula"].get<std::string>()
                << ", " << r["atoms"] << " atoms, " << r["systems"]
                << " bonding systems, net charge " << r["net_charge"] << "\n";
      std::cout << "  " << r["dietz"]["vertices"].get<std::string>() << "\n";
      std::cout << "  " << r["dietz"]["systems"].get<std::string>() << "\n";
      for (const json& b : r["bonds"])
        std::cout << "  bond " << b["i"] << "-" << b["j"] << ": order "
                  << b["order"].get<std::string>() << ", length "
                  << format_double(b["length"].get<double>()) << "\n";
    }
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return record_errors.empty() ? exit_ok : exit_invalid;
}

// ============================================================================
// convert
// ============================================================================

int cmd_convert(const std::string& in_path, const std::string& out_path, std::string from,
                std::string to, bool as_json) {
  if (from.empty()) from = guess_format(in_path);
  if (to.empty()) to = guess_format(out_path);
  const std::string text = read_file(in_path);

  std::vector<std::string> record_errors;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  const std::vector<Molecule> molecules = load_molecules(text, from, record_errors, warnings);

  if (from == "sdf" && to == "canonical")
    notes.push_back("aromatic bond blocks were expanded heuristically; "
                    "shells hold core plus inferred unshared electrons");
  if (to == "sdf")
    notes.push_back("molfile output drops shells and truncates coordinates to 4 decimals");

  std::string rendered;
  if (to == "sdf") {
    rendered = write_sdf(molecules);
  } else {
    for (const Molecule& molecule : molecules) rendered += serialize_molecule(molecule);
  }
  write_file(out_path, rendered);

  if (as_json) {
    json out = {{"command", "convert"}, {"in", in_path},   {"out", out_path},
                {"from", from},         {"to", to},        {"records", molecules.size()},
                {"notes", notes},       {"errors", record_errors}, {"warnings", warnings}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& e : record_errors) std::cout << red("error: ") << e << "\n";
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
    for (const std::string& n : notes) std::cout << "note: " << n << "\n";
    std::cout << "wrote " << molecules.size() << " molecule(s) to " << out_path << "\n";
  }
  return record_errors.empty() ? exit_ok : exit_invalid;
}

// ============================================================================
// sample
// ============================================================================

int cmd_sample(const std::string& observed_path, size_t samples, size_t burnin,
               double jitter, std::uint64_t seed, unsigned chains,
               const std::string& out_path, bool diagnostics, bool as_json) {
  const Molecule observed = parse_molecule(read_file(observed_path));
  const auto model = prob::molecule_model(observed);

  std::vector<std::vector<prob::Sample<Molecule>>> results(chains);
  std::vector<std::thread> workers;
  for (unsigned c = 0; c < chains; ++c)
    workers.emplace_back([&, c] {
      results[c] = prob::metropolis_hastings(model, jitter, samples, burnin, seed + c);
    });
  for (std::thread& worker : workers) worker.join();

  if (diagnostics)
    for (unsigned c = 0; c < chains; ++c)
      std::cerr << "chain=" << c << " retained=" << results[c].size() << "\n";

  std::string rendered;
  json records = json::array();
  for (unsigned c = 0; c < chains; ++c)
    for (const auto& sample : results[c]) {
      if (as_json)
        records.push_back({{"chain", c},
                           {"log_weight", sample.log_weight},
                           {"molecule", one_line(sample.value)}});
      else
        rendered += std::to_string(c) + "\t" + format_double(sample.log_weight) + "\t" +
                    one_line(sample.value) + "\n";
    }

  if (as_json) {
    json out = {{"command", "sample"}, {"observed", observed_path}, {"samples", samples},
                {"burnin", burnin},    {"jitter", jitter},          {"seed", seed},
                {"chains", chains},    {"records", records}};
    if (!out_path.empty()) {
      write_file(out_path, out.dump(2) + "\n");
      std::cout << "wrote " << records.size() << " samples to " << out_path << "\n";
    } else {
      std::cout << out.dump(2) << "\n";
    }
  } else {
    if (!out_path.empty()) {
      write_file(out_path, rendered);
      std::cout << "wrote " << samples * chains << " samples to " << out_path << "\n";
    } else {
      std::cout << rendered;
    }
  }
  return exit_ok;
}

// ============================================================================
// coin-demo
// ============================================================================

int cmd_coin_demo(const std::string& observations, const std::string& method,
                  size_t samples, size_t burnin, double jitter, std::uint64_t seed,
                  bool as_json) {
  std::vector<bool> flips;
  for (const char c : observations) {
    if (c == 'H' || c == 'h')
      flips.push_back(true);
    else if (c == 'T' || c == 't')
      flips.push_back(false);
    else
      throw CLI::ValidationError("--observations", "use only H and T characters");
  }

  std::vector<double> draws;
  if (method == "rejection") {
    const auto model = prob::coin_model(flips, prob::CoinConditioning::hard);
    draws = prob::rejection_sample(model, samples, seed);
  } else {
    const auto model = prob::coin_model(flips, prob::CoinConditioning::soft);
    for (const auto& sample :
         prob::metropolis_hastings(model, jitter, samples, burnin, seed))
      draws.push_back(sample.value);
  }

  double mean = 0.0;
  for (const double d : draws) mean += d;
  mean /= static_cast<double>(draws.size());

  constexpr int kBins = 20;
  std::vector<int> histogram(kBins, 0);
  for (const double d : draws) {
    int bin = static_cast<int>(d * kBins);
    if (bin >= kBins) bin = kBins - 1;
    histogram[bin]++;
  }
  const int mode_bin = static_cast<int>(
      std::max_element(histogram.begin(), histogram.end()) - histogram.begin());

  if (as_json) {
    json out = {{"command", "coin-demo"},
                {"method", method},
                {"observations", observations},
                {"samples", samples},
                {"burnin", burnin},
                {"jitter", jitter},
                {"seed", seed},
                {"mean", mean},
                {"histogram", histogram},
                {"mode_bin", mode_bin},
                {"mode_bin_range", {mode_bin / double(kBins), (mode_bin + 1) / double(kBins)}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "posterior mean bias: " << format_double(mean) << " (" << method << ", "
              << draws.size() << " samples)\n";
    const int peak = *std::max_element(histogram.begin(), histogram.end());
    for (int b = 0; b < kBins; ++b) {
      const double lo = b / double(kBins);
      const double hi = (b + 1) / double(kBins);
      std::string bar(static_cast<size_t>(40.0 * histogram[b] / std::max(peak, 1)), '#');
      std::printf("  [%4.2f,%4.2f) %6d %s\n", lo, hi, histogram[b], bar.c_str());
    }
    std::cout << "mode bin: [" << format_double(mode_bin / double(kBins)) << ","
              << format_double((mode_bin + 1) / double(kBins)) << ")\n";
  }
  return exit_ok;
}

// ============================================================================
// config
// ============================================================================

int cmd_config(int z, bool as_json) {
  const Shells shells = ground_state_config(z);  // UnsupportedZ handled by caller

  if (as_json) {
    json shell_list = json::array();
    for (const Shell& shell : shells) {
      json subshells = json::array();
      const std::pair<const char*, const std::optional<SubShell>*> slots[] = {
          {"s", &shell.s}, {"p", &shell.p}, {"d", &shell.d}, {"f", &shell.f}};
      for (const auto& [kind, sub] : slots) {
        if (!*sub) continue;
        json orbitals = json::array();
        for (const Orbital& orb : (*sub)->orbitals) {
          json o = {{"label", to_string(orb.label)}, {"electrons", orb.electron_count}};
          if (orb.orientation)
            o["orientation"] = {orb.orientation->x, orb.orientation->y, orb.orientation->z};
          orbitals.push_back(o);
        }
        subshells.push_back({{"kind", kind}, {"orbitals", orbitals}});
      }
      shell_list.push_back({{"n", shell.n}, {"subshells", subshells}});
    }
    json out = {{"command", "config"},
                {"z", z},
                {"config", compact_config(shells)},
                {"total_electrons", total_electrons(shells)},
                {"shells", shell_list}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << compact_config(shells) << "\n";
    for (const Shell& shell : shells) {
      std::cout << "shell n=" << shell.n << "\n";
      const std::pair<char, const std::optional<SubShell>*> slots[] = {
          {'s', &shell.s}, {'p', &shell.p}, {'d', &shell.d}, {'f', &shell.f}};
      for (const auto& [kind, sub] : slots) {
        if (!*sub) continue;
        std::cout << "  " << kind << ":";
        for (const Orbital& orb : (*sub)->orbitals)
          std::cout << " " << to_string(orb.label) << ":" << orb.electron_count;
        std::cout << "\n";
      }
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typed molecular structures: Dietz constitutions, orbitals, "
               "geometry and trace-based sampling"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report on stdout");

  std::string path, format;
  auto* validate = app.add_subcommand("validate", "check a molecule file");
  validate->add_option("path", path, "input file")->required();
  validate->add_option("--format", format, "canonical or sdf (default: by extension)")
      ->check(CLI::IsMember({"canonical", "sdf"}));

  auto* info = app.add_subcommand("info", "summarize molecules in a file");
  info->add_option("path", path, "input file")->required();
  info->add_option("--format", format, "canonical or sdf (default: by extension)")
      ->check(CLI::IsMember({"canonical", "sdf"}));

  std::string out_path, from, to;
  auto* convert = app.add_subcommand("convert", "translate between formats");
  convert->add_option("in", path, "input file")->required();
  convert->add_option("out", out_path, "output file")->required();
  convert->add_option("--from", from, "input format override")
      ->check(CLI::IsMember({"canonical", "sdf"}));
  convert->add_option("--to", to, "output format override")
      ->check(CLI::IsMember({"canonical", "sdf"}));

  std::string observed, sample_out;
  size_t samples = 1000, burnin = 1000;
  double jitter = 0.1;
  std::uint64_t seed = 0;
  unsigned chains = 1;
  bool diagnostics = false;
  auto* sample = app.add_subcommand("sample", "posterior sampling over three-atom structures");
  sample->add_option("--observed", observed, "observed molecule (canonical format)")->required();
  sample->add_option("--samples", samples, "retained samples per chain");
  sample->add_option("--burnin", burnin, "discarded warm-up steps");
  sample->add_option("--jitter", jitter, "per-site resample probability");
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--chains", chains, "independent chains run in parallel")
      ->check(CLI::Range(1u, 64u));
  sample->add_option("--out", sample_out, "write samples to a file instead of stdout");
  sample->add_flag("--diagnostics", diagnostics, "per-chain progress on stderr");

  std::string observations = "HTHH", method = "mh";
  size_t coin_samples = 10000, coin_burnin = 1000;
  double coin_jitter = 0.1;
  std::uint64_t coin_seed = 0;
  auto* coin = app.add_subcommand("coin-demo", "posterior over a coin bias");
  coin->add_option("--observations", observations, "flip string such as HTHH");
  coin->add_option("--method", method, "mh or rejection")
      ->check(CLI::IsMember({"mh", "rejection"}));
  coin->add_option("--samples", coin_samples, "posterior samples");
  coin->add_option("--burnin", coin_burnin, "discarded warm-up steps (mh)");
  coin->add_option("--jitter", coin_jitter, "per-site resample probability (mh)");
  coin->add_option("--seed", coin_seed, "random seed");

  int z = 0;
  auto* config = app.add_subcommand("config", "ground-state electron configuration");
  config->add_option("--z", z, "atomic number (1..36)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*validate) return cmd_validate(path, format, as_json);
    if (*info) return cmd_info(path, format, as_json);
    if (*convert) return cmd_convert(path, out_path, from, to, as_json);
    if (*sample)
      return cmd_sample(observed, samples, burnin, jitter, seed, chains, sample_out,
                        diagnostics, as_json);
    if (*coin) return cmd_coin_demo(observations, method, coin_samples, coin_burnin,
                                    coin_jitter, coin_seed, as_json);
    if (*config) return cmd_config(z, as_json);
  } catch (const ParseError& e) {
    std::cerr << red("parse error: ") << e.what() << "\n";
    return exit_parse;
  } catch (const Error& e) {
    if (e.code() == Errc::unsupported_z) {
      std::cerr << red("usage error: ") << e.what() << "\n";
      return exit_usage;
    }
    std::cerr << red("error: ") << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << red("io error: ") << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
