"""Modal formulas, Kripke models, bisimulation and finite topological models.

Models, relations and topologies are plain dicts in the JSON layout used by
the ``vkt`` command-line tool.
"""

import json

from . import _core

parse = _core.parse
nnf = _core.nnf
modal_depth = _core.modal_depth
level_size = _core.level_size


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def eval(model, formula):
    return json.loads(_core.eval(_dump(model), formula))


def largest_bisimulation(a, b):
    return json.loads(_core.largest_bisimulation(_dump(a), _dump(b)))["pairs"]


def is_bisimulation(a, b, pairs):
    return _core.is_bisimulation(_dump(a), _dump(b), json.dumps({"pairs": pairs}))


def quotient(model):
    return json.loads(_core.quotient(_dump(model)))


def formula_topology(model):
    return json.loads(_core.formula_topology(_dump(model)))


def check_topological_model(model, topology):
    return json.loads(_core.check_topological_model(_dump(model), _dump(topology)))


def structure_map_continuous(model, topology):
    return json.loads(_core.structure_map_continuous(_dump(model), _dump(topology)))


def behavior_types(model, depth):
    return json.loads(_core.behavior_types(_dump(model), depth))


def ladder_eval(formula, which="extended"):
    return json.loads(_core.ladder_eval(formula, which))


def selftest(seed=0, count=100):
    return json.loads(_core.selftest(seed, count))
