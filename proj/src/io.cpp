#include "vkt/io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace vkt::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t state_at(const json& j, const std::map<std::string, std::size_t>& index,
                     const std::string& where) {
  std::string name = string_at(j, where);
  auto it = index.find(name);
  if (it == index.end()) fail(where, "unknown state '" + name + "'");
  return it->second;
}

std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], i);
  return out;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

KripkeModel model_from_json(const json& j) {
  std::vector<std::string> atom_order;
  const json& atoms = array_at(member(j, "atoms", ""), "/atoms");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "/atoms/" + std::to_string(i);
    std::string a = string_at(atoms[i], where);
    if (!is_atom_name(a) || a == "true" || a == "false") fail(where, "invalid atom name '" + a + "'");
    atom_order.push_back(std::move(a));
  }
  AtomSet atom_set(atom_order.begin(), atom_order.end());
  if (atom_set.size() != atom_order.size()) fail("/atoms", "duplicate atom");

  std::vector<std::string> names;
  const json& states = array_at(member(j, "states", ""), "/states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    names.push_back(string_at(states[i], "/states/" + std::to_string(i)));
  }
  const auto index = index_names(names);
  if (index.size() != names.size()) fail("/states", "duplicate state name");

  std::vector<Edge> edges;
  const json& rel = array_at(member(j, "rel", ""), "/rel");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string where = "/rel/" + std::to_string(i);
    if (!rel[i].is_array() || rel[i].size() != 2) fail(where, "expected a [from, to] pair");
    edges.emplace_back(state_at(rel[i][0], index, where + "/0"),
                       state_at(rel[i][1], index, where + "/1"));
  }

  std::vector<AtomSet> val(names.size());
  const json& v = member(j, "val", "");
  if (!v.is_object()) fail("/val", "expected an object");
  for (const auto& [state, list] : v.items()) {
    const std::string where = "/val/" + state;
    auto it = index.find(state);
    if (it == index.end()) fail(where, "unknown state '" + state + "'");
    array_at(list, where);
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string p = string_at(list[i], where + "/" + std::to_string(i));
      if (!atom_set.contains(p)) fail(where + "/" + std::to_string(i), "undeclared atom '" + p + "'");
      val[it->second].insert(std::move(p));
    }
  }
  return KripkeModel(std::move(names), std::move(atom_set), std::move(edges), std::move(val),
                     std::move(atom_order));
}

json model_to_json(const KripkeModel& m) {
  json rel = json::array();
  for (auto [x, y] : m.edges()) rel.push_back({m.name(x), m.name(y)});
  json val = json::object();
  for (std::size_t x = 0; x < m.size(); ++x) {
    json list = json::array();
    for (const auto& p : m.atom_order()) {
      if (m.val(x).contains(p)) list.push_back(p);
    }
    val[m.name(x)] = std::move(list);
  }
  return {{"atoms", m.atom_order()}, {"states", m.names()}, {"rel", std::move(rel)},
          {"val", std::move(val)}};
}

Relation relation_from_json(const json& j, const KripkeModel& a, const KripkeModel& b) {
  const auto left = index_names(a.names());
  const auto right = index_names(b.names());
  const json& pairs = array_at(member(j, "pairs", ""), "/pairs");
  Relation r(a.size(), b.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "/pairs/" + std::to_string(i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) fail(where, "expected a [left, right] pair");
    r.insert(state_at(pairs[i][0], left, where + "/0"), state_at(pairs[i][1], right, where + "/1"));
  }
  return r;
}

json relation_to_json(const Relation& r, const KripkeModel& a, const KripkeModel& b) {
  json pairs = json::array();
  for (auto [x, y] : r.pairs()) pairs.push_back({a.name(x), b.name(y)});
  return {{"pairs", std::move(pairs)}};
}

StateMap map_from_json(const json& j, const KripkeModel& a, const KripkeModel& b) {
  const auto right = index_names(b.names());
  const json& map = member(j, "map", "");
  if (!map.is_object()) fail("/map", "expected an object");
  StateMap f(a.size(), b.size());
  for (const auto& [source, target] : map.items()) {
    auto x = a.index_of(source);
    if (!x) fail("/map/" + source, "unknown source state '" + source + "'");
    f[*x] = state_at(target, right, "/map/" + source);
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (f[x] == b.size()) fail("/map", "no image for state '" + a.name(x) + "'");
  }
  return f;
}

json map_to_json(const StateMap& f, const KripkeModel& a, const KripkeModel& b) {
  json map = json::object();
  for (std::size_t x = 0; x < f.size(); ++x) map[a.name(x)] = b.name(f[x]);
  return {{"map", std::move(map)}};
}

StateSet set_from_json(const json& j, const std::vector<std::string>& names,
                       const std::string& where) {
  const auto index = index_names(names);
  array_at(j, where);
  StateSet s(names.size());
  for (std::size_t i = 0; i < j.size(); ++i) s.set(state_at(j[i], index, where + "/" + std::to_string(i)));
  return s;
}

json set_to_json(const StateSet& s, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t x : members(s)) out.push_back(names.at(x));
  return out;
}

NamedTopology topology_from_json(const json& j) {
  std::vector<std::string> carrier;
  const json& c = array_at(member(j, "carrier", ""), "/carrier");
  for (std::size_t i = 0; i < c.size(); ++i) carrier.push_back(string_at(c[i], "/carrier/" + std::to_string(i)));
  if (index_names(carrier).size() != carrier.size()) fail("/carrier", "duplicate point");
  if (carrier.size() > kMaxTopologyCarrier) {
    throw LimitError("/carrier: more than " + std::to_string(kMaxTopologyCarrier) + " points");
  }
  const json& opens = array_at(member(j, "opens", ""), "/opens");
  std::vector<StateSet> family;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    family.push_back(set_from_json(opens[i], carrier, "/opens/" + std::to_string(i)));
  }
  if (auto v = find_open_family_violation(carrier.size(), family)) {
    if (v->bound_missing) {
      fail("/opens", v->union_missing ? "the carrier is not open" : "the empty set is not open");
    }
    fail("/opens/" + std::to_string(v->first),
         std::string(v->union_missing ? "union" : "intersection") + " with /opens/" +
             std::to_string(v->second) + " is not open");
  }
  return {carrier, FiniteTopology::from_opens(carrier.size(), std::move(family))};
}

FiniteTopology topology_for_model(const NamedTopology& t, const KripkeModel& m) {
  if (t.carrier.size() != m.size() ||
      std::set<std::string>(t.carrier.begin(), t.carrier.end()) !=
          std::set<std::string>(m.names().begin(), m.names().end())) {
    throw InputError("/carrier: carrier does not list exactly the model's states");
  }
  std::vector<StateSet> opens;
  for (const auto& o : t.topology.opens()) {
    StateSet s(m.size());
    for (std::size_t x : members(o)) s.set(*m.index_of(t.carrier[x]));
    opens.push_back(std::move(s));
  }
  return FiniteTopology::from_opens(m.size(), std::move(opens));
}

json topology_to_json(const FiniteTopology& t, const std::vector<std::string>& names) {
  json opens = json::array();
  for (const auto& o : t.opens()) opens.push_back(set_to_json(o, names));
  return {{"carrier", names}, {"opens", std::move(opens)}};
}

namespace {

json witness_to_json(const Witness& w, const std::vector<std::string>& names,
                     const std::vector<std::string>& right) {
  json out = json::object();
  out["note"] = w.note;
  if (w.set) out["set"] = set_to_json(*w.set, names);
  if (w.result) out["result"] = set_to_json(*w.result, names);
  if (w.atom) out["atom"] = *w.atom;
  if (w.pair) out["pair"] = {names.at(w.pair->first), right.at(w.pair->second)};
  if (w.state) out["state"] = (w.state_on_right ? right : names).at(*w.state);
  return out;
}

}  // namespace

json report_to_json(const Report& r, const std::vector<std::string>& names,
                    const std::vector<std::string>& right_names) {
  const auto& right = right_names.empty() ? names : right_names;
  json clauses = json::array();
  json witness = nullptr;
  for (const auto& c : r.clauses) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.witness) {
      entry["witness"] = witness_to_json(*c.witness, names, right);
      if (witness.is_null()) {
        witness = entry["witness"];
        witness["clause"] = c.name;
      }
    }
    clauses.push_back(std::move(entry));
  }
  if (!r.precondition_ok) witness = json{{"clause", "precondition"}, {"note", r.precondition_note}};
  json out{{"check", r.check}, {"pass", r.pass()}, {"witness", std::move(witness)},
           {"clauses", std::move(clauses)}};
  if (!r.precondition_ok) out["precondition"] = r.precondition_note;
  return out;
}

}  // namespace vkt::io
