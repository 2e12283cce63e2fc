#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vkt/kripke.hpp"
#include "vkt/report.hpp"
#include "vkt/topology.hpp"

namespace vkt::io {

using nlohmann::json;

/// Reads and parses a JSON file; errors name the file.
json load_json_file(const std::string& path);

/// {"atoms": [...], "states": [...], "rel": [[from, to], ...], "val": {state: [...]}}
/// Errors carry the JSON pointer of the offending element.
KripkeModel model_from_json(const json& j);
json model_to_json(const KripkeModel& m);

/// {"pairs": [[left, right], ...]}
Relation relation_from_json(const json& j, const KripkeModel& a, const KripkeModel& b);
json relation_to_json(const Relation& r, const KripkeModel& a, const KripkeModel& b);

/// {"map": {source: target, ...}}, total on a's states.
StateMap map_from_json(const json& j, const KripkeModel& a, const KripkeModel& b);
json map_to_json(const StateMap& f, const KripkeModel& a, const KripkeModel& b);

struct NamedTopology {
  std::vector<std::string> carrier;
  FiniteTopology topology;
};

/// {"carrier": [...], "opens": [[...], ...]}. A family that is not a topology
/// is rejected with the first violating pair of opens.
NamedTopology topology_from_json(const json& j);
/// Re-indexes a topology onto the model's state order; the carrier must list
/// exactly the model's states.
FiniteTopology topology_for_model(const NamedTopology& t, const KripkeModel& m);
json topology_to_json(const FiniteTopology& t, const std::vector<std::string>& names);

StateSet set_from_json(const json& j, const std::vector<std::string>& names,
                       const std::string& where);
json set_to_json(const StateSet& s, const std::vector<std::string>& names);

/// {"check": name, "pass": bool, "witness": {...} | null, "clauses": [...]}.
json report_to_json(const Report& r, const std::vector<std::string>& names,
                    const std::vector<std::string>& right_names = {});

}  // namespace vkt::io
