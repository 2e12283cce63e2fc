// vkt: command-line front end for modal formulas, Kripke models, finite
// topological models, the Vietoris construction, behavior types and the two
// ladder structures. Every subcommand prints one JSON document on stdout.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vkt/canonical.hpp"
#include "vkt/io.hpp"
#include "vkt/kripke.hpp"
#include "vkt/ladder.hpp"
#include "vkt/selftest.hpp"
#include "vkt/topology.hpp"
#include "vkt/vietoris.hpp"

namespace {

using nlohmann::json;
using namespace vkt;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Output {
  json doc;
  int code = kOk;
};

template <typename F>
auto with_file(const std::string& path, F&& load) {
  try {
    return load(io::load_json_file(path));
  } catch (const vkt::Error& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw InputError(path + (what.front() == ':' ? "" : ": ") + what);
  }
}

KripkeModel load_model(const std::string& path) {
  return with_file(path, [](const json& j) { return io::model_from_json(j); });
}

FiniteTopology load_topology(const std::string& path, const KripkeModel& m) {
  return with_file(path, [&](const json& j) {
    return io::topology_for_model(io::topology_from_json(j), m);
  });
}

Formula parse_formula(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("--formula: ") + e.what());
  }
}

Output report_output(const Report& r, const std::vector<std::string>& names,
                     const std::vector<std::string>& right = {}) {
  return {io::report_to_json(r, names, right), r.pass() ? kOk : kCheckFailed};
}

json ladder_value_json(const LadderValue& v) {
  json prefix = json::array();
  for (bool b : v.prefix) prefix.push_back(b);
  json out{{"prefix", prefix}, {"tail", v.tail}, {"root", v.at_root}};
  out["inf"] = v.at_inf ? json(*v.at_inf) : json(nullptr);
  return out;
}

json family_member_json(const FamilyMember& m, const std::vector<Formula>& family) {
  if (m.parametric) {
    return {{"parametric", m.index}, {"formula", to_string(ladder_member(m.index))}};
  }
  return {{"index", m.index}, {"formula", to_string(family.at(m.index))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vkt: modal logic, bisimulation and topological models on finite structures"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::optional<Output> out;
  std::string formula_text;
  std::string model_path, model_a_path, model_b_path, model_c_path;
  std::string topology_path, topology_a_path, topology_b_path;
  std::string relation_path, relation2_path, map_path, subbase_path;
  std::vector<std::string> set_arg;
  std::string pre_kind;
  std::size_t depth = 0;
  std::vector<std::string> atom_arg;
  bool list_types = false;
  bool converse_flag = false;
  bool characteristic_flag = false;
  bool space_flag = false;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  unsigned threads = 0;

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "Parse a formula and print its normalized form");
  cmd_parse->add_option("--formula", formula_text, "Formula text")->required();
  cmd_parse->callback([&] {
    Formula f = parse_formula(formula_text);
    json atoms = json::array();
    for (const auto& a : atoms_of(f)) atoms.push_back(a);
    out = Output{{{"result", to_string(f)}, {"depth", modal_depth(f)}, {"atoms", atoms}}};
  });

  // nnf
  auto* cmd_nnf = app.add_subcommand("nnf", "Negation normal form of a formula");
  cmd_nnf->add_option("--formula", formula_text, "Formula text")->required();
  cmd_nnf->callback([&] { out = Output{{{"result", to_string(to_nnf(parse_formula(formula_text)))}}}; });

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "Extent of a formula, or <R>U / [R]U, in a model");
  cmd_eval->add_option("--model", model_path, "Model JSON")->required();
  auto* eval_formula = cmd_eval->add_option("--formula", formula_text, "Formula text");
  auto* eval_pre = cmd_eval->add_option("--pre", pre_kind, "Preimage operator")
                       ->check(CLI::IsMember({"diamond", "box"}));
  cmd_eval->add_option("--set", set_arg, "Comma-separated states U")->delimiter(',');
  eval_formula->excludes(eval_pre);
  cmd_eval->callback([&] {
    KripkeModel m = load_model(model_path);
    StateSet result;
    if (!formula_text.empty()) {
      result = eval(m, parse_formula(formula_text));
    } else if (!pre_kind.empty()) {
      StateSet u = io::set_from_json(json(set_arg), m.names(), "--set");
      result = pre_kind == "diamond" ? diamond_pre(m, u) : box_pre(m, u);
    } else {
      throw InputError("eval needs --formula or --pre");
    }
    out = Output{{{"result", io::set_to_json(result, m.names())}}};
  });

  // bisim
  auto* cmd_bisim = app.add_subcommand("bisim", "Largest bisimulation between two models");
  cmd_bisim->add_option("--model-a", model_a_path, "Left model JSON")->required();
  cmd_bisim->add_option("--model-b", model_b_path, "Right model JSON")->required();
  cmd_bisim->callback([&] {
    KripkeModel a = load_model(model_a_path);
    KripkeModel b = load_model(model_b_path);
    out = Output{io::relation_to_json(largest_bisimulation(a, b), a, b)};
  });

  // is-bisim
  auto* cmd_is_bisim = app.add_subcommand(
      "is-bisim", "Check the bisimulation clauses for a relation, its converse, or a composite");
  cmd_is_bisim->add_option("--model-a", model_a_path, "Left model JSON")->required();
  cmd_is_bisim->add_option("--model-b", model_b_path, "Right model JSON")->required();
  cmd_is_bisim->add_option("--relation", relation_path, "Relation JSON between a and b")->required();
  cmd_is_bisim->add_flag("--converse", converse_flag, "Check the converse relation (b to a)");
  auto* compose_opt = cmd_is_bisim->add_option("--compose-with", relation2_path,
                                               "Relation JSON between b and c; checks the composite");
  auto* model_c_opt = cmd_is_bisim->add_option("--model-c", model_c_path, "Third model JSON");
  compose_opt->needs(model_c_opt);
  cmd_is_bisim->callback([&] {
    KripkeModel a = load_model(model_a_path);
    KripkeModel b = load_model(model_b_path);
    Relation r = with_file(relation_path, [&](const json& j) { return io::relation_from_json(j, a, b); });
    const KripkeModel* left = &a;
    const KripkeModel* right = &b;
    std::optional<KripkeModel> c;
    if (!relation2_path.empty()) {
      c = load_model(model_c_path);
      Relation r2 = with_file(relation2_path, [&](const json& j) { return io::relation_from_json(j, b, *c); });
      r = compose(r, r2);
      right = &*c;
    }
    if (converse_flag) {
      r = converse(r);
      std::swap(left, right);
    }
    BisimulationCheck check = check_bisimulation(*left, *right, r);
    json witness = nullptr;
    if (!check.ok) {
      static const char* kClauses[] = {"", "valuation", "forth", "back"};
      witness = {{"clause", kClauses[check.clause]},
                 {"pair", {left->name(check.pair->first), right->name(check.pair->second)}}};
      if (check.successor) {
        witness["successor"] = check.clause == 2 ? left->name(*check.successor)
                                                 : right->name(*check.successor);
      }
    }
    out = Output{{{"check", "bisimulation"},
                  {"pass", check.ok},
                  {"witness", witness},
                  {"relation", io::relation_to_json(r, *left, *right)["pairs"]}},
                 check.ok ? kOk : kCheckFailed};
  });

  // hom-check
  auto* cmd_hom = app.add_subcommand("hom-check", "Check whether a state map is a homomorphism");
  cmd_hom->add_option("--model-a", model_a_path, "Source model JSON")->required();
  cmd_hom->add_option("--model-b", model_b_path, "Target model JSON")->required();
  cmd_hom->add_option("--map", map_path, "Map JSON {\"map\": {source: target}}")->required();
  cmd_hom->callback([&] {
    KripkeModel a = load_model(model_a_path);
    KripkeModel b = load_model(model_b_path);
    StateMap f = with_file(map_path, [&](const json& j) { return io::map_from_json(j, a, b); });
    BisimulationCheck check = check_homomorphism(a, b, f);
    json witness = nullptr;
    if (!check.ok) {
      static const char* kClauses[] = {"", "valuation", "forth", "back"};
      witness = {{"clause", kClauses[check.clause]}, {"state", a.name(check.pair->first)}};
    }
    out = Output{{{"check", "homomorphism"}, {"pass", check.ok}, {"witness", witness}},
                 check.ok ? kOk : kCheckFailed};
  });

  // quotient
  auto* cmd_quotient = app.add_subcommand("quotient", "Quotient by the largest auto-bisimulation");
  cmd_quotient->add_option("--model", model_path, "Model JSON")->required();
  cmd_quotient->callback([&] {
    KripkeModel m = load_model(model_path);
    Quotient q = quotient(m);
    const bool simple = largest_bisimulation(q.model, q.model) == Relation::identity(q.model.size());
    out = Output{{{"model", io::model_to_json(q.model)},
                  {"projection", io::map_to_json(q.projection, m, q.model)["map"]},
                  {"homomorphism", is_homomorphism(m, q.model, q.projection)},
                  {"simple", simple},
                  {"saturated", check_saturation_finite(m)}}};
  });

  // topologize
  auto* cmd_topo = app.add_subcommand(
      "topologize", "Formula topology of a model, subbase generation, or closure in a topology");
  auto* topo_model = cmd_topo->add_option("--model", model_path, "Model JSON (formula topology)");
  auto* topo_subbase = cmd_topo->add_option(
      "--subbase", subbase_path, "JSON {\"carrier\": [...], \"subbase\": [[...], ...]}");
  auto* topo_topology = cmd_topo->add_option("--topology", topology_path, "Topology JSON");
  cmd_topo->add_option("--closure", set_arg, "Comma-separated subset A (with --topology)")
      ->delimiter(',');
  topo_model->excludes(topo_subbase)->excludes(topo_topology);
  topo_subbase->excludes(topo_topology);
  cmd_topo->callback([&] {
    if (!model_path.empty()) {
      KripkeModel m = load_model(model_path);
      out = Output{io::topology_to_json(formula_topology(m).topology, m.names())};
    } else if (!subbase_path.empty()) {
      out = with_file(subbase_path, [&](const json& j) {
        if (!j.contains("carrier") || !j.contains("subbase")) {
          throw InputError(": expected keys \"carrier\" and \"subbase\"");
        }
        std::vector<std::string> carrier = j["carrier"].get<std::vector<std::string>>();
        std::vector<StateSet> subbase;
        for (std::size_t i = 0; i < j["subbase"].size(); ++i) {
          subbase.push_back(io::set_from_json(j["subbase"][i], carrier, "/subbase/" + std::to_string(i)));
        }
        return Output{io::topology_to_json(generate(carrier.size(), subbase), carrier)};
      });
    } else if (!topology_path.empty()) {
      io::NamedTopology t = with_file(topology_path, [](const json& j) { return io::topology_from_json(j); });
      StateSet a = io::set_from_json(json(set_arg), t.carrier, "--closure");
      out = Output{{{"closure", io::set_to_json(closure(t.topology, a), t.carrier)},
                    {"interior", io::set_to_json(interior(t.topology, a), t.carrier)},
                    {"clopen", is_clopen(t.topology, a)}}};
    } else {
      throw InputError("topologize needs --model, --subbase or --topology");
    }
  });

  // check-topmodel
  auto* cmd_check = app.add_subcommand("check-topmodel", "Check the four topological-model conditions");
  cmd_check->add_option("--model", model_path, "Model JSON")->required();
  cmd_check->add_option("--topology", topology_path, "Topology JSON")->required();
  cmd_check->callback([&] {
    KripkeModel m = load_model(model_path);
    FiniteTopology t = load_topology(topology_path, m);
    out = report_output(check_topological_model({m, t}), m.names());
  });

  // vietoris-check
  auto* cmd_vietoris = app.add_subcommand(
      "vietoris-check", "Continuity of the structure map into V(X) x P(atoms); or the space / Vf");
  cmd_vietoris->add_option("--model", model_path, "Model JSON");
  cmd_vietoris->add_option("--topology", topology_path, "Topology JSON")->required();
  cmd_vietoris->add_flag("--space", space_flag, "Describe V(X) for the topology");
  cmd_vietoris->add_option("--map", map_path, "Map JSON {\"map\": {point: point}} for Vf");
  cmd_vietoris->add_option("--topology-b", topology_b_path, "Target topology JSON for --map");
  cmd_vietoris->callback([&] {
    if (!model_path.empty()) {
      KripkeModel m = load_model(model_path);
      FiniteTopology t = load_topology(topology_path, m);
      out = report_output(structure_map_continuous({m, t}), m.names());
      return;
    }
    io::NamedTopology t = with_file(topology_path, [](const json& j) { return io::topology_from_json(j); });
    VietorisSpace space(t.topology);
    auto point_json = [](HyperPoint k, const std::vector<std::string>& names) {
      return io::set_to_json(from_point(k, names.size()), names);
    };
    if (!map_path.empty()) {
      if (topology_b_path.empty()) throw InputError("--map needs --topology-b");
      io::NamedTopology tb = with_file(topology_b_path, [](const json& j) { return io::topology_from_json(j); });
      VietorisSpace target(tb.topology);
      KripkeModel pa(t.carrier, {}, {}, {});
      KripkeModel pb(tb.carrier, {}, {}, {});
      StateMap f = with_file(map_path, [&](const json& j) { return io::map_from_json(j, pa, pb); });
      if (!is_continuous(f, t.topology, tb.topology)) {
        out = Output{{{"check", "continuous"}, {"pass", false}, {"witness", nullptr}}, kCheckFailed};
        return;
      }
      json table = json::array();
      auto image = vietoris_map(f, space, target);
      for (HyperPoint k = 0; k < image.size(); ++k) {
        table.push_back({{"point", point_json(k, t.carrier)}, {"image", point_json(image[k], tb.carrier)}});
      }
      out = Output{{{"check", "continuous"}, {"pass", true}, {"witness", nullptr}, {"image", table}}};
      return;
    }
    if (!space_flag) throw InputError("vietoris-check needs --model, --space or --map");
    json subbase = json::array();
    for (const auto& e : space.subbase()) {
      json meets = json::array();
      json inside = json::array();
      for (HyperPoint k = 0; k < space.point_count(); ++k) {
        if (e.meets[k]) meets.push_back(point_json(k, t.carrier));
        if (e.inside[k]) inside.push_back(point_json(k, t.carrier));
      }
      subbase.push_back({{"open", io::set_to_json(e.open, t.carrier)}, {"meets", meets}, {"inside", inside}});
    }
    out = Output{{{"points", space.point_count()}, {"subbase", subbase}}};
  });

  // closure-sub
  auto* cmd_csub = app.add_subcommand("closure-sub", "Closure of a substructure is a substructure");
  cmd_csub->add_option("--model", model_path, "Model JSON")->required();
  cmd_csub->add_option("--topology", topology_path, "Topology JSON")->required();
  cmd_csub->add_option("--subset", set_arg, "Comma-separated successor-closed subset")->delimiter(',');
  cmd_csub->callback([&] {
    KripkeModel m = load_model(model_path);
    FiniteTopology t = load_topology(topology_path, m);
    StateSet u = io::set_from_json(json(set_arg), m.names(), "--subset");
    Report r = closed_subcoalgebra_check({m, t}, u);
    Output o = report_output(r, m.names());
    if (!r.precondition_ok) o.code = kInputError;
    o.doc["closure"] = io::set_to_json(closure(t, u), m.names());
    out = std::move(o);
  });

  // closure-bisim
  auto* cmd_cbisim = app.add_subcommand("closure-bisim", "Closure of a bisimulation is a bisimulation");
  cmd_cbisim->add_option("--model-a", model_a_path, "Left model JSON")->required();
  cmd_cbisim->add_option("--topology-a", topology_a_path, "Left topology JSON")->required();
  cmd_cbisim->add_option("--model-b", model_b_path, "Right model JSON")->required();
  cmd_cbisim->add_option("--topology-b", topology_b_path, "Right topology JSON")->required();
  cmd_cbisim->add_option("--relation", relation_path, "Relation JSON")->required();
  cmd_cbisim->callback([&] {
    KripkeModel a = load_model(model_a_path);
    KripkeModel b = load_model(model_b_path);
    FiniteTopology ta = load_topology(topology_a_path, a);
    FiniteTopology tb = load_topology(topology_b_path, b);
    Relation s = with_file(relation_path, [&](const json& j) { return io::relation_from_json(j, a, b); });
    Report r = closed_bisimulation_check({a, ta}, {b, tb}, s);
    Output o = report_output(r, a.names(), b.names());
    if (!r.precondition_ok) o.code = kInputError;
    o.doc["closure"] = io::relation_to_json(product_closure(ta, tb, s), a, b)["pairs"];
    out = std::move(o);
  });

  // final-seq
  auto* cmd_final = app.add_subcommand("final-seq", "Cardinalities (and members) of the levels Z_0..Z_d");
  cmd_final->add_option("--atoms", atom_arg, "Comma-separated atom fragment")->delimiter(',');
  cmd_final->add_option("--depth", depth, "Deepest level")->required();
  cmd_final->add_flag("--types", list_types, "List the types of the deepest level");
  cmd_final->callback([&] {
    AtomSet atoms(atom_arg.begin(), atom_arg.end());
    for (const auto& p : atoms) {
      if (!is_atom_name(p)) throw InputError("--atoms: invalid atom name '" + p + "'");
    }
    json levels = json::array();
    std::optional<std::uint64_t> prev_size;
    for (std::size_t d = 0; d <= depth; ++d) {
      json level{{"depth", d}};
      auto size = level_size(atoms.size(), d, std::uint64_t{1} << 62);
      if (size) {
        level["size"] = *size;
      } else if (d > 0 && prev_size) {
        level["log2_size"] = *prev_size + atoms.size();
      } else {
        level["size"] = nullptr;
      }
      prev_size = size;
      levels.push_back(std::move(level));
    }
    json doc{{"atoms", json(atoms)}, {"levels", levels}};
    if (list_types) {
      TypeStore store(atoms);
      json types = json::array();
      for (TypeId t : final_level(store, depth)) types.push_back(type_to_string(store, t));
      doc["types"] = std::move(types);
    }
    out = Output{std::move(doc)};
  });

  // behavior
  auto* cmd_behavior = app.add_subcommand("behavior", "Depth-d behavior types, kernel, and terminal check");
  cmd_behavior->add_option("--model", model_path, "Model JSON")->required();
  cmd_behavior->add_option("--depth", depth, "Depth d")->required();
  cmd_behavior->callback([&] {
    KripkeModel m = load_model(model_path);
    TypeStore store(m.atoms());
    auto beh = behavior_map(m, depth, store);
    json types = json::object();
    for (std::size_t x = 0; x < m.size(); ++x) types[m.name(x)] = type_to_string(store, beh[x]);
    json kernel_json = json::array();
    Partition p = behavior_kernel(beh);
    for (std::size_t b = 0; b < p.size(); ++b) kernel_json.push_back(io::set_to_json(p.block_set(b), m.names()));
    Report terminal = terminal_uniqueness_check(m, depth);
    out = Output{{{"types", types},
                  {"kernel", kernel_json},
                  {"terminal", io::report_to_json(terminal, m.names())}},
                 terminal.pass() ? kOk : kCheckFailed};
  });

  // truth-lemma
  auto* cmd_truth = app.add_subcommand("truth-lemma", "Compare model satisfaction with type satisfaction");
  cmd_truth->add_option("--model", model_path, "Model JSON")->required();
  cmd_truth->add_option("--formula", formula_text, "Formula text")->required();
  cmd_truth->add_option("--depth", depth, "Type depth (defaults to the formula's depth)");
  cmd_truth->add_flag("--characteristic", characteristic_flag, "Print each realized type's characteristic formula");
  cmd_truth->callback([&] {
    KripkeModel m = load_model(model_path);
    Formula f = parse_formula(formula_text);
    const std::size_t d = std::max(depth, modal_depth(f));
    TypeStore store(m.atoms());
    auto beh = behavior_map(m, d, store);
    StateSet extent = eval(m, f);
    bool pass = true;
    json states = json::array();
    for (std::size_t x = 0; x < m.size(); ++x) {
      const bool by_type = type_satisfies(store, beh[x], f);
      pass = pass && by_type == extent.test(x);
      json entry{{"state", m.name(x)}, {"model", bool(extent.test(x))}, {"type", by_type}};
      if (characteristic_flag) entry["characteristic"] = to_string(characteristic_formula(store, beh[x]));
      states.push_back(std::move(entry));
    }
    out = Output{{{"check", "truth-lemma"}, {"pass", pass}, {"depth", d}, {"states", states}},
                 pass ? kOk : kCheckFailed};
  });

  // ladder
  auto* cmd_ladder = app.add_subcommand("ladder", "Exact evaluation on the chain and its extension");
  cmd_ladder->require_subcommand(1);
  cmd_ladder->fallthrough();
  std::string which = "extended";
  std::vector<std::string> family_text;
  bool parametric = false;
  std::size_t max_index = 8;
  auto* ladder_eval_cmd = cmd_ladder->add_subcommand("eval", "Truth of a closed formula at every state");
  ladder_eval_cmd->add_option("--which", which, "chain or extended")
      ->check(CLI::IsMember({"chain", "extended"}));
  ladder_eval_cmd->add_option("--formula", formula_text, "Closed formula")->required();
  ladder_eval_cmd->callback([&] {
    Ladder l = which == "chain" ? Ladder::Chain : Ladder::Extended;
    out = Output{ladder_value_json(ladder_eval(l, parse_formula(formula_text)))};
  });
  auto* ladder_nonsat = cmd_ladder->add_subcommand("nonsat", "Non-saturation witnesses on the chain");
  ladder_nonsat->add_option("--max", max_index, "Largest index in the finite subfamilies");
  ladder_nonsat->callback([&] {
    NonsaturationReport r = nonsaturation_witness_chain(max_index);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
      witnesses.push_back({{"subfamily", w.subfamily}, {"state", "s" + std::to_string(w.state)}});
    }
    out = Output{{{"check", "chain-not-saturated"},
                  {"pass", r.not_saturated()},
                  {"full_family_covers", r.full_family_covers},
                  {"witnesses", witnesses}},
                 r.not_saturated() ? kOk : kCheckFailed};
  });
  auto* ladder_sat = cmd_ladder->add_subcommand("saturation", "Finite-subfamily check on the extension");
  ladder_sat->add_option("--family", family_text, "Closed member formula (repeatable)");
  ladder_sat->add_flag("--parametric", parametric, "Add the members [](...)false of every depth");
  ladder_sat->callback([&] {
    std::vector<Formula> family;
    for (const auto& text : family_text) family.push_back(parse_formula(text));
    SaturationReport r = saturation_check_extended(family, parametric);
    json sub = json::array();
    for (const auto& m : r.subfamily) sub.push_back(family_member_json(m, family));
    out = Output{{{"check", "box-disjunction"},
                  {"pass", r.holds},
                  {"subfamily", sub},
                  {"witness", r.holds ? json(nullptr) : json(r.witness)}},
                 r.holds ? kOk : kCheckFailed};
  });

  // selftest
  auto* cmd_self = app.add_subcommand("selftest", "Run the randomized property suites");
  cmd_self->add_option("--seed", seed, "Generator seed");
  cmd_self->add_option("--count", count, "Instances per suite");
  cmd_self->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  cmd_self->callback([&] {
    json suites = json::array();
    bool pass = true;
    for (const auto& r : run_selftest(seed, count, threads)) {
      suites.push_back({{"name", r.name},
                        {"instances", r.instances},
                        {"failures", r.failures},
                        {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)}});
      pass = pass && r.pass();
    }
    out = Output{{{"check", "selftest"}, {"seed", seed}, {"pass", pass}, {"suites", suites}},
                 pass ? kOk : kCheckFailed};
  });

  auto emit = [&](const Output& o) {
    std::cout << (pretty ? o.doc.dump(2) : o.doc.dump()) << '\n';
    return o.code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return emit({{{"error", e.what()}}, kInputError});
  } catch (const vkt::Error& e) {
    return emit({{{"error", e.what()}}, kInputError});
  } catch (const json::exception& e) {
    return emit({{{"error", std::string("malformed input: ") + e.what()}}, kInputError});
  }
  if (!out) return emit({{{"error", "no result"}}, kInputError});
  return emit(*out);
}
