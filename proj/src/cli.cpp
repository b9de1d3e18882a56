#include "maxplus/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxplus/bounds.hpp"
#include "maxplus/csr.hpp"
#include "maxplus/extremal.hpp"
#include "maxplus/report.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus::cli {

namespace {

using Json = nlohmann::ordered_json;

Json condition_json(const ConditionResult& c) {
  Json j;
  j["holds"] = c.holds;
  j["vacuous"] = c.vacuous;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json numbering_json(const std::optional<Numbering>& p) {
  return p ? Json(format_numbering(*p)) : Json(nullptr);
}

Json to_json(const DmVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["n"] = v.n;
  j["g"] = v.g;
  j["numbering"] = numbering_json(v.numbering);
  j["crit_strongly_connected"] = v.crit_strongly_connected;
  j["unique_girth_cycle"] = v.unique_girth_cycle;
  j["leading_cycle_critical"] = v.leading_cycle_critical;
  j["conditions"] = {{"coprime", condition_json(v.coprime)},
                     {"a2_dominated", condition_json(v.a2_dominated)},
                     {"chord_inequality", condition_json(v.chord_inequality)},
                     {"power_inequality", condition_json(v.power_inequality)}};
  j["candidates"] = v.candidates;
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

Json to_json(const WielandtVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["n"] = v.n;
  j["g"] = v.g;
  j["case"] = v.which ? Json(to_string(*v.which)) : Json(nullptr);
  j["numbering"] = numbering_json(v.numbering);
  j["leading_cycle_critical"] = v.leading_cycle_critical;
  j["a2_dominated"] = condition_json(v.a2_dominated);
  j["candidates"] = v.candidates;
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

Json to_json(const CritRcVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["bound"] = v.bound;
  j["index"] = v.index ? Json(*v.index) : Json(nullptr);
  j["crit_rc_transient"] = v.crit_rc_transient;
  j["consistent"] = v.consistent;
  j["numbering"] = numbering_json(v.numbering);
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

// Flattens a JSON object into aligned "key  value" lines.
void print_table(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (value.is_object()) {
      print_table(out, value, name + ".");
    } else {
      out << std::left << std::setw(34) << name << ' ' << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
  }
}

void emit(std::ostream& out, const Json& j, bool json) {
  if (json) {
    out << j.dump(2) << '\n';
  } else {
    print_table(out, j);
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

struct Options {
  std::string file;
  bool json = false;
  bool dot = false;
  std::int64_t t = 1;
  std::string numbering;
  int n = 0;
  int g = 0;
  std::uint64_t seed = 0;
  std::string wcase = "n-1";
  std::string out_path;
  std::string provenance_path;
  bool strict_hamiltonian = false;
  int i = 1;
  int j = 1;
};

std::optional<Numbering> optional_numbering(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_numbering(text);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o.file);
  if (o.dot) {
    const Spectrum s = spectrum(a);
    out << to_dot(associated_digraph(a), s.crit ? s.crit->arcs : ArcSet{});
    return kExitOk;
  }
  const TransientReport r = analyze(a);
  out << (o.json ? to_json(r) + "\n" : to_text(r));
  return kExitOk;
}

int cmd_powers(const Options& o, std::ostream& out) {
  write_matrix(out, mat_power(load_matrix(o.file), o.t));
  return kExitOk;
}

int cmd_csr(const Options& o, std::ostream& out) {
  write_matrix(out, csr_at(build_csr(load_matrix(o.file)), o.t));
  return kExitOk;
}

int cmd_check_dm(const Options& o, std::ostream& out) {
  const DmVerdict v = verify_dm(load_matrix(o.file), optional_numbering(o.numbering));
  emit(out, to_json(v), o.json);
  return v.holds ? kExitOk : kExitVerdictFalse;
}

int cmd_check_wiel(const Options& o, std::ostream& out) {
  const WielandtVerdict v = verify_wielandt(load_matrix(o.file), optional_numbering(o.numbering));
  emit(out, to_json(v), o.json);
  return v.holds ? kExitOk : kExitVerdictFalse;
}

int cmd_check_crit_rc(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o.file);
  Json j;
  bool any = false;
  try {
    const CritRcVerdict dm = verify_crit_rc_dm(a);
    j["dm"] = to_json(dm);
    any = any || dm.holds;
  } catch (const std::invalid_argument& e) {
    j["dm"] = {{"holds", false}, {"diagnostic", e.what()}};
  }
  if (a.rows() >= 2) {
    const CritRcVerdict w = verify_crit_rc_wielandt(a, optional_numbering(o.numbering));
    j["wielandt"] = to_json(w);
    any = any || w.holds;
  } else {
    j["wielandt"] = {{"holds", false}, {"diagnostic", "needs n >= 2"}};
  }
  emit(out, j, o.json);
  return any ? kExitOk : kExitVerdictFalse;
}

int emit_instance(const Options& o, const GeneratedInstance& inst, std::ostream& out) {
  const std::string provenance = provenance_json(inst) + "\n";
  if (o.out_path.empty()) {
    write_matrix(out, inst.matrix);
  } else {
    write_file(o.out_path, to_text(inst.matrix));
    write_file(o.out_path + ".provenance.json", provenance);
    out << provenance;
  }
  if (!o.provenance_path.empty()) write_file(o.provenance_path, provenance);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o.file);
  const auto walk = twice_optimal_walk(a, o.i - 1, o.j - 1, o.t);
  Json j;
  if (!walk) {
    j["exists"] = false;
  } else {
    std::vector<int> nodes;
    for (int v : walk->nodes) nodes.push_back(v + 1);
    j["exists"] = true;
    j["length"] = walk->length;
    j["weight"] = to_string(walk->weight);
    j["g"] = walk->g;
    j["interesting"] = walk->interesting;
    j["nodes"] = nodes;
  }
  if (o.json || !walk) {
    emit(out, j, o.json);
  } else {
    out << "length       " << walk->length << "\nweight       " << to_string(walk->weight) << "\ninteresting  "
        << (walk->interesting ? "yes" : "no") << "\nwalk        ";
    for (int v : walk->nodes) out << ' ' << v + 1;
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-plus matrix toolkit"};
  app.require_subcommand(1);
  Options o;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "matrix file")->required(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "structured JSON output"); };
  auto positive_t = [&](CLI::App* sub) {
    sub->add_option("--t", o.t, "exponent t >= 1")->required()->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "transient report");
  file_arg(analyze_cmd);
  json_flag(analyze_cmd);
  analyze_cmd->add_flag("--dot", o.dot, "Graphviz digraph with critical arcs highlighted");

  auto* powers_cmd = app.add_subcommand("powers", "the matrix power A^t");
  file_arg(powers_cmd);
  positive_t(powers_cmd);

  auto* csr_cmd = app.add_subcommand("csr", "the CSR term CS^tR");
  file_arg(csr_cmd);
  positive_t(csr_cmd);

  auto* dm_cmd = app.add_subcommand("check-dm", "verify the Dulmage-Mendelsohn conditions");
  file_arg(dm_cmd);
  json_flag(dm_cmd);
  dm_cmd->add_option("--numbering", o.numbering, "1-based permutation, e.g. 3,1,2");

  auto* wiel_cmd = app.add_subcommand("check-wiel", "verify the Wielandt conditions");
  file_arg(wiel_cmd);
  json_flag(wiel_cmd);
  wiel_cmd->add_option("--numbering", o.numbering, "1-based permutation");

  auto* rc_cmd = app.add_subcommand("check-crit-rc", "critical row/column verdicts");
  file_arg(rc_cmd);
  json_flag(rc_cmd);
  rc_cmd->add_option("--numbering", o.numbering, "1-based permutation for the Wielandt variant");

  auto* gen_cmd = app.add_subcommand("generate", "generate a bound-attaining matrix");
  gen_cmd->require_subcommand(1);
  auto common_gen = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension")->required();
    sub->add_option("--seed", o.seed, "random seed")->required();
    sub->add_option("--out", o.out_path, "matrix file; a .provenance.json sidecar is written next to it");
    sub->add_option("--provenance", o.provenance_path, "write the provenance record to this file");
  };
  auto* gen_dm = gen_cmd->add_subcommand("dm", "T1 = DM(g,n)");
  common_gen(gen_dm);
  gen_dm->add_option("--g", o.g, "maximal critical girth")->required();
  gen_dm->add_flag("--strict-hamiltonian", o.strict_hamiltonian,
                   "keep the Hamiltonian cycle strictly below the critical mean");
  auto* gen_wiel = gen_cmd->add_subcommand("wielandt", "T1 = Wi(n)");
  common_gen(gen_wiel);
  gen_wiel->add_option("--case", o.wcase, "maximal critical girth n-1 or n")
      ->check(CLI::IsMember({"n-1", "n"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "twice optimal walk through the critical g-cycle");
  file_arg(oracle_cmd);
  json_flag(oracle_cmd);
  oracle_cmd->add_option("--i", o.i, "start node, 1-based")->required();
  oracle_cmd->add_option("--j", o.j, "end node, 1-based")->required();
  positive_t(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*powers_cmd) return cmd_powers(o, out);
    if (*csr_cmd) return cmd_csr(o, out);
    if (*dm_cmd) return cmd_check_dm(o, out);
    if (*wiel_cmd) return cmd_check_wiel(o, out);
    if (*rc_cmd) return cmd_check_crit_rc(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*gen_dm) {
      GeneratorOptions opt;
      opt.critical_hamiltonian = !o.strict_hamiltonian;
      return emit_instance(o, generate_dm(o.n, o.g, o.seed, opt), out);
    }
    if (*gen_wiel) {
      const auto which = o.wcase == "n" ? WielandtCase::kGirthN : WielandtCase::kGirthNMinusOne;
      return emit_instance(o, generate_wielandt(o.n, o.seed, which), out);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const GenerationError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxplus::cli
