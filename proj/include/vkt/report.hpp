#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkt/kripke.hpp"

namespace vkt {

/// Evidence attached to a failed clause. Which fields are set depends on the
/// clause; `note` always says what went wrong.
struct Witness {
  std::optional<StateSet> set;
  std::optional<StateSet> result;
  std::optional<std::string> atom;
  std::optional<Edge> pair;
  std::optional<std::size_t> state;
  std::string note;
  /// `state` indexes the right-hand model of a two-model check.
  bool state_on_right = false;
};

struct Clause {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
};

/// Outcome of a multi-clause check. A failed precondition is reported apart
/// from clause failures: it means the check was not applicable.
struct Report {
  std::string check;
  bool precondition_ok = true;
  std::string precondition_note;
  std::vector<Clause> clauses;

  bool pass() const {
    if (!precondition_ok) return false;
    for (const auto& c : clauses) {
      if (!c.pass) return false;
    }
    return true;
  }

  const Clause* first_failure() const {
    for (const auto& c : clauses) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }

  const Clause* clause(const std::string& name) const {
    for (const auto& c : clauses) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace vkt
