// Python bindings. Models, relations and topologies cross the boundary as
// JSON text in the same formats the command-line tool reads; the vkt package
// converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vkt/canonical.hpp"
#include "vkt/io.hpp"
#include "vkt/ladder.hpp"
#include "vkt/selftest.hpp"
#include "vkt/topology.hpp"
#include "vkt/vietoris.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace vkt;

namespace {

KripkeModel model(const std::string& text) { return io::model_from_json(json::parse(text)); }

FiniteTopology topology(const std::string& text, const KripkeModel& m) {
  return io::topology_for_model(io::topology_from_json(json::parse(text)), m);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Modal formulas, Kripke models, bisimulation and finite topological models";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const vkt::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  mod.def("parse", [](const std::string& f) { return to_string(parse(f)); });
  mod.def("nnf", [](const std::string& f) { return to_string(to_nnf(parse(f))); });
  mod.def("modal_depth", [](const std::string& f) { return modal_depth(parse(f)); });

  mod.def("eval", [](const std::string& m, const std::string& f) {
    KripkeModel km = model(m);
    return io::set_to_json(eval(km, parse(f)), km.names()).dump();
  });
  mod.def("largest_bisimulation", [](const std::string& a, const std::string& b) {
    KripkeModel ma = model(a), mb = model(b);
    return io::relation_to_json(largest_bisimulation(ma, mb), ma, mb).dump();
  });
  mod.def("is_bisimulation", [](const std::string& a, const std::string& b, const std::string& r) {
    KripkeModel ma = model(a), mb = model(b);
    return is_bisimulation(ma, mb, io::relation_from_json(json::parse(r), ma, mb));
  });
  mod.def("quotient", [](const std::string& m) {
    KripkeModel km = model(m);
    Quotient q = quotient(km);
    return json{{"model", io::model_to_json(q.model)},
                {"projection", io::map_to_json(q.projection, km, q.model)["map"]}}
        .dump();
  });
  mod.def("formula_topology", [](const std::string& m) {
    KripkeModel km = model(m);
    return io::topology_to_json(formula_topology(km).topology, km.names()).dump();
  });
  mod.def("check_topological_model", [](const std::string& m, const std::string& t) {
    KripkeModel km = model(m);
    return io::report_to_json(check_topological_model({km, topology(t, km)}), km.names()).dump();
  });
  mod.def("structure_map_continuous", [](const std::string& m, const std::string& t) {
    KripkeModel km = model(m);
    return io::report_to_json(structure_map_continuous({km, topology(t, km)}), km.names()).dump();
  });
  mod.def("level_size", [](std::size_t atoms, std::size_t depth) { return level_size(atoms, depth); });
  mod.def("behavior_types", [](const std::string& m, std::size_t depth) {
    KripkeModel km = model(m);
    TypeStore store(km.atoms());
    auto beh = behavior_map(km, depth, store);
    json out = json::object();
    for (std::size_t x = 0; x < km.size(); ++x) out[km.name(x)] = type_to_string(store, beh[x]);
    return out.dump();
  });
  mod.def(
      "ladder_eval",
      [](const std::string& f, const std::string& which) {
        if (which != "chain" && which != "extended") throw InputError("which must be chain or extended");
        LadderValue v = ladder_eval(which == "chain" ? Ladder::Chain : Ladder::Extended, parse(f));
        json out{{"prefix", v.prefix}, {"tail", v.tail}, {"root", v.at_root}};
        out["inf"] = v.at_inf ? json(*v.at_inf) : json(nullptr);
        return out.dump();
      },
      py::arg("formula"), py::arg("which") = "extended");
  mod.def(
      "selftest",
      [](std::uint64_t seed, std::size_t count) {
        json out = json::array();
        for (const auto& r : run_selftest(seed, count)) {
          out.push_back({{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}});
        }
        return out.dump();
      },
      py::arg("seed") = 0, py::arg("count") = 100);
}
