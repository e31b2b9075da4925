// Command-line front end for the ctcodes library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctcodes/autgamma.hpp"
#include "ctcodes/constructions.hpp"
#include "ctcodes/designs.hpp"
#include "ctcodes/errors.hpp"
#include "ctcodes/hamming.hpp"
#include "ctcodes/nonexistence.hpp"
#include "ctcodes/permgroup.hpp"
#include "ctcodes/regularity.hpp"
#include "ctcodes/spectra.hpp"
#include "ctcodes/theoremsuite.hpp"
#include "ctcodes/transitivity.hpp"

using json = nlohmann::ordered_json;
using namespace ctc;

namespace {

enum Exit { kPass = 0, kFindings = 1, kUsage = 2, kBudget = 3 };

/// Prefixes budget errors with the stage that ran out.
template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ResourceError& e) {
    throw ResourceError(name + ": " + e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "absent";
  return v.dump();
}

/// key: value lines; arrays of scalars are space separated, objects flatten to key.sub.
void render_text(std::ostream& out, const json& doc, const std::string& prefix = "") {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_text(out, value, name);
    } else if (value.is_array() && !value.empty() && value.front().is_structured()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i].is_object())
          render_text(out, value[i], name + "[" + std::to_string(i) + "]");
        else
          out << name << "[" << i << "]: " << value[i].dump() << '\n';
      }
    } else if (value.is_array()) {
      out << name << ':';
      for (const auto& x : value) out << ' ' << scalar_text(x);
      out << '\n';
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit(const json& doc, bool as_json) {
  if (as_json) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::cout << "format-version: 1\n";
  render_text(std::cout, doc);
}

json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, bool as_json, const Limits& limits) {
  auto in = open_input(path);
  const Code code = read_code(in);
  const int m = code.length();
  const int q = code.alphabet_size();
  json doc;
  doc["m"] = m;
  doc["q"] = q;
  doc["size"] = code.size();
  doc["min-distance"] = code.min_distance() ? json(*code.min_distance()) : json(nullptr);
  const auto& partition = stage("distance-partition", [&]() -> const DistancePartition& {
    return code.distance_partition(limits);
  });
  doc["covering-radius"] = partition.covering_radius();
  doc["partition-sizes"] = partition.sizes();
  const auto dist = distance_distribution(code);
  doc["distance-distribution"] = rationals(dist.values);
  doc["macwilliams"] = rationals(macwilliams_transform(dist, q));
  const auto reg = stage("regularity", [&] { return regularity(code, limits); });
  doc["regularity-level"] = reg.level;
  doc["completely-regular"] = reg.completely_regular;
  json classes = json::array();
  stage("weight-class-designs", [&] {
    for (int k = 1; k <= m; ++k) {
      const auto members = weight_class(code, k);
      if (members.empty()) continue;
      json entry;
      entry["weight"] = k;
      entry["size"] = members.size();
      int best_t = 0;
      std::uint64_t best_lambda = 0;
      for (int t = 1; t <= k; ++t) {
        const auto lambda = qary_t_design_lambda(members, t, q, limits);
        if (!lambda) break;
        best_t = t;
        best_lambda = *lambda;
      }
      entry["design"] = best_t == 0 ? json("none")
                                     : json(std::to_string(best_t) + "-(" + std::to_string(m) + "," +
                                            std::to_string(k) + "," + std::to_string(best_lambda) + ")");
      classes.push_back(entry);
    }
    return 0;
  });
  doc["weight-classes"] = classes;
  emit(doc, as_json);
  return kPass;
}

int cmd_check_transitive(const std::string& code_path, const std::string& group_path, bool as_json,
                         const Limits& limits) {
  auto cin_ = open_input(code_path);
  const Code code = read_code(cin_);
  auto gin = open_input(group_path);
  const AutSubgroup group = read_aut_group(gin, code.length(), code.alphabet_size());
  const auto verdict = stage("orbits", [&] { return transitivity(code, group, limits); });
  json doc;
  doc["m"] = code.length();
  doc["q"] = code.alphabet_size();
  doc["group-order"] = to_string(stage("group-order", [&] { return group.order(limits); }));
  doc["code-invariant"] = verdict.code_invariant;
  doc["covering-radius"] = verdict.covering_radius;
  doc["level"] = verdict.level;
  doc["completely-transitive"] = verdict.completely_transitive;
  doc["kernel-trivial"] = stage("kernel", [&] { return kernel_on_entries_trivial(group, limits); });
  json parts = json::array();
  for (const auto& p : verdict.parts) {
    json part;
    part["part"] = p.part;
    part["size"] = p.part_size;
    part["single-orbit"] = p.single_orbit;
    if (!p.orbit_sizes.empty()) part["orbit-sizes"] = p.orbit_sizes;
    if (p.split_witness) part["split-witness"] = {to_string(p.split_witness->first), to_string(p.split_witness->second)};
    parts.push_back(part);
  }
  doc["parts"] = parts;
  const auto induced = stage("induced-alphabet", [&] { return induced_alphabet_group(group, 1, limits); });
  doc["induced-alphabet"]["order"] = to_string(induced.order());
  doc["induced-alphabet"]["two-transitive"] = induced.is_k_transitive(2, limits);
  json checks = json::array();
  if (code.size() >= 2 && verdict.level >= 0) {
    const auto results =
        stage("stabilizer-checks", [&] { return check_stabilizer_homogeneity(code, group, verdict.level, limits); });
    for (const auto& c : results) {
      json entry{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      checks.push_back(entry);
    }
  }
  if (verdict.completely_transitive) {
    const auto bound = counting_bound(code, group, limits);
    checks.push_back({{"name", "counting bound q^m/(m+1) <= |X|"},
                      {"passed", bound.holds},
                      {"detail", to_string(bound.lower) + " <= " + to_string(bound.order)}});
  }
  doc["checks"] = checks;
  emit(doc, as_json);
  return verdict.completely_transitive ? kPass : kFindings;
}

std::string file_safe(std::string id) {
  for (auto& c : id)
    if (c == '/') c = '_';
  return id;
}

int cmd_nonexist(int m, int delta, const std::string& out_dir, bool as_json, const Limits& limits) {
  const auto report = nonexistence_check(m, delta, limits);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream rep(std::filesystem::path(out_dir) / "report.txt");
    write_report(rep, report);
    for (const auto& b : report.branches)
      if (b.system && b.certificate) {
        std::ofstream cert(std::filesystem::path(out_dir) / (file_safe(b.id) + ".cert"));
        write_certificate(cert, *b.system, *b.certificate);
      }
  }
  if (as_json) {
    json doc;
    doc["m"] = report.m;
    doc["delta"] = report.delta;
    for (const auto& [k, v] : report.facts) doc["facts"][k] = v;
    json branches = json::array();
    for (const auto& b : report.branches) {
      json br{{"id", b.id}, {"step", b.step}, {"verdict", to_string(b.verdict)}};
      for (const auto& [k, v] : b.facts) br["facts"][k] = v;
      branches.push_back(br);
    }
    doc["branches"] = branches;
    doc["overall"] = to_string(report.overall);
    if (!report.open_branch.empty()) doc["open-branch"] = report.open_branch;
    std::cout << doc.dump(2) << '\n';
  } else {
    write_report(std::cout, report);
  }
  return report.overall == Verdict::Infeasible ? kPass : kFindings;
}

int cmd_orbits(const std::string& path, int k, bool as_json, const Limits& limits) {
  if (k < 1) throw DomainError("k must be positive");
  auto in = open_input(path);
  const PermGroup group = read_group(in);
  const auto orbits = stage("k-subset-orbits",
                            [&] { return group.orbits_on_ksubsets(static_cast<std::size_t>(k), limits); });
  json doc;
  doc["degree"] = group.degree();
  doc["order"] = to_string(group.order());
  doc["k"] = k;
  doc["orbit-count"] = orbits.size();
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  doc["orbit-sizes"] = sizes;
  json list = json::array();
  for (const auto& o : orbits) {
    json sets = json::array();
    for (const auto& s : o) {
      std::string text;
      for (auto p : s) text += (text.empty() ? "" : ",") + std::to_string(p);
      sets.push_back("{" + text + "}");
    }
    list.push_back({{"size", o.size()}, {"subsets", sets}});
  }
  doc["orbits"] = list;
  emit(doc, as_json);
  return kPass;
}

json report_json(const ReplayReport& r) {
  json doc{{"id", r.id}, {"kind", to_string(r.kind)}, {"seed", r.seed}, {"claim", r.claim}, {"scope", r.scope}};
  for (const auto& [k, v] : r.facts) doc["facts"][k] = v;
  json inst = json::array();
  for (const auto& i : r.instances) inst.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  doc["instances"] = inst;
  doc["checked"] = r.checked;
  doc["counterexamples"] = r.counterexamples;
  doc["verdict"] = r.passed() ? "pass" : "fail";
  return doc;
}

int cmd_replay(const std::string& id, bool all, std::optional<int> m, std::string out_dir, bool list, bool as_json,
               const Limits& limits) {
  if (list) {
    for (const auto& e : replay_registry())
      std::cout << e.id << " | " << to_string(e.kind) << " | " << e.claim << '\n';
    return kPass;
  }
  if (all) {
    if (out_dir.empty()) {
      const char* env = std::getenv("CTCODES_REPORT_DIR");
      out_dir = env && *env ? env : "reports";
    }
    const auto reports = replay_all(out_dir, limits);
    bool ok = true;
    for (const auto& r : reports) {
      std::cout << r.id << ": " << (r.passed() ? "pass" : "fail") << '\n';
      ok = ok && r.passed();
    }
    std::cout << "reports: " << out_dir << '\n';
    return ok ? kPass : kFindings;
  }
  if (id.empty()) throw CLI::RequiredError("replay needs an id, --all or --list");
  ReplayOptions options;
  options.m = m;
  const auto report = replay(id, options, limits);
  if (as_json)
    std::cout << report_json(report).dump(2) << '\n';
  else
    write_replay_report(std::cout, report);
  return report.passed() ? kPass : kFindings;
}

int cmd_export(const std::string& what, int m, int q, const std::string& out_path) {
  std::ostringstream out;
  if (what == "rep-code") write_code(out, rep_code(m, q));
  else if (what == "hamming7-code") write_code(out, hamming7_code());
  else if (what == "reed-muller8-code") write_code(out, reed_muller8_code());
  else if (what == "punctured-hadamard11") write_code(out, punctured_hadamard11());
  else if (what == "example-group") write_aut_group(out, example_group(m));
  else if (what == "twisted-group") write_aut_group(out, twisted_pgl_group());
  else if (what == "hamming7-group") write_aut_group(out, hamming7_group());
  else if (what == "reed-muller8-group") write_aut_group(out, reed_muller8_group());
  else if (what == "coordinate-symmetric") write_aut_group(out, coordinate_symmetric(m, q));
  else if (what == "psl25") write_group(out, psl25_on_6());
  else if (what == "pgl25") write_group(out, pgl25_on_6());
  else if (what == "pgl27") write_group(out, pgl27_on_8());
  else if (what == "symmetric") write_group(out, symmetric_group(static_cast<std::size_t>(m)));
  else if (what == "psl25-design") {
    const auto orbits = psl25_on_6().orbits_on_ksubsets(3);
    write_design(out, Design(6, 3, orbits.at(0)));
  } else
    throw DomainError("unknown export '" + what + "'");
  if (out_path.empty() || out_path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError(0, "cannot write '" + out_path + "'");
    f << out.str();
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely transitive and completely regular codes in Hamming graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  Limits limits;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--max-vertices", limits.max_vertices, "Vertex enumeration budget")->capture_default_str();
  app.add_option("--max-subsets", limits.max_subsets, "k-subset and t-subset budget")->capture_default_str();

  std::string code_path, group_path, id, out, what;
  int m = 0, delta = 0, k = 0, q = 2;
  std::optional<int> replay_m;
  bool all = false, list = false;

  auto* analyze = app.add_subcommand("analyze", "Invariants of a code file");
  analyze->add_option("code", code_path, "Code file")->required();

  auto* check = app.add_subcommand("check-transitive", "Neighbour-transitivity of a code under a group");
  check->add_option("code", code_path, "Code file")->required();
  check->add_option("group", group_path, "Automorphism file")->required();

  auto* nonexist = app.add_subcommand("nonexist", "Nonexistence certificates for binary completely regular codes");
  nonexist->add_option("m", m, "Length")->required();
  nonexist->add_option("delta", delta, "Minimum distance")->required();
  nonexist->add_option("--out", out, "Directory for the report and one certificate per branch");

  auto* orbits = app.add_subcommand("orbits", "Orbits of a permutation group on k-subsets");
  orbits->add_option("group", group_path, "Group file")->required();
  orbits->add_option("k", k, "Subset size")->required();

  auto* replay_cmd = app.add_subcommand("replay", "Run registered batch checks");
  replay_cmd->add_option("id", id, "Replay id");
  replay_cmd->add_flag("--all", all, "Run every replay and write one report file each");
  replay_cmd->add_flag("--list", list, "List replay ids");
  replay_cmd->add_option("--m", replay_m, "Restrict to one length");
  replay_cmd->add_option("--out", out, "Report directory for --all (default $CTCODES_REPORT_DIR or ./reports)");

  auto* export_cmd = app.add_subcommand("export", "Write a built-in code, group or design");
  export_cmd->add_option("what", what,
                         "rep-code | hamming7-code | reed-muller8-code | punctured-hadamard11 | example-group | "
                         "twisted-group | hamming7-group | reed-muller8-group | coordinate-symmetric | psl25 | pgl25 "
                         "| pgl27 | symmetric | psl25-design")
      ->required();
  export_cmd->add_option("--m", m, "Length or degree");
  export_cmd->add_option("--q", q, "Alphabet size")->capture_default_str();
  export_cmd->add_option("-o,--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(code_path, as_json, limits);
    if (*check) return cmd_check_transitive(code_path, group_path, as_json, limits);
    if (*nonexist) return cmd_nonexist(m, delta, out, as_json, limits);
    if (*orbits) return cmd_orbits(group_path, k, as_json, limits);
    if (*replay_cmd) return cmd_replay(id, all, replay_m, out, list, as_json, limits);
    if (*export_cmd) return cmd_export(what, m, q, out);
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
