#include "vkt/ladder.hpp"

#include <algorithm>
#include <unordered_map>

namespace vkt {

namespace {

void normalize(LadderValue& v) {
  while (!v.prefix.empty() && v.prefix.back() == v.tail) v.prefix.pop_back();
}

LadderValue constant(Ladder which, bool b) {
  LadderValue v{{}, b, b, std::nullopt};
  if (which == Ladder::Extended) v.at_inf = b;
  return v;
}

template <typename Combine>
LadderValue pointwise(const LadderValue& a, const LadderValue& b, Combine op) {
  LadderValue out;
  const std::size_t len = std::max(a.prefix.size(), b.prefix.size());
  for (std::size_t i = 0; i < len; ++i) out.prefix.push_back(op(a.at(i), b.at(i)));
  out.tail = op(a.tail, b.tail);
  out.at_root = op(a.at_root, b.at_root);
  if (a.at_inf) out.at_inf = op(*a.at_inf, *b.at_inf);
  normalize(out);
  return out;
}

class LadderEvaluator {
 public:
  explicit LadderEvaluator(Ladder which) : which_(which) {}

  const LadderValue& run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    LadderValue v = compute(f);
    return memo_.emplace(f.id(), std::move(v)).first->second;
  }

 private:
  LadderValue compute(const Formula& f) {
    switch (f.op()) {
      case Op::Atom:
        throw InputError("ladder formulas must be closed; found atom '" + f.name() + "'");
      case Op::Top:
        return constant(which_, true);
      case Op::Bot:
        return constant(which_, false);
      case Op::Not: {
        LadderValue v = run(f.lhs());
        v.prefix.flip();
        v.tail = !v.tail;
        v.at_root = !v.at_root;
        if (v.at_inf) v.at_inf = !*v.at_inf;
        return v;
      }
      case Op::And: {
        const LadderValue& l = run(f.lhs());
        return pointwise(l, run(f.rhs()), [](bool a, bool b) { return a && b; });
      }
      case Op::Or: {
        const LadderValue& l = run(f.lhs());
        return pointwise(l, run(f.rhs()), [](bool a, bool b) { return a || b; });
      }
      case Op::Box:
      case Op::Diamond:
        return modal(run(f.lhs()), f.op() == Op::Box);
    }
    throw Error("unreachable formula kind");
  }

  // s_0 has no successors; s_{i+1} sees only s_i; s sees every s_i (and s_∞);
  // s_∞ sees only itself.
  LadderValue modal(const LadderValue& inner, bool box) {
    LadderValue out;
    out.prefix.push_back(box);
    out.prefix.insert(out.prefix.end(), inner.prefix.begin(), inner.prefix.end());
    out.tail = inner.tail;
    const bool all_chain = inner.tail && std::all_of(inner.prefix.begin(), inner.prefix.end(),
                                                     [](bool b) { return b; });
    const bool some_chain = inner.tail || std::any_of(inner.prefix.begin(), inner.prefix.end(),
                                                      [](bool b) { return b; });
    if (box) {
      out.at_root = all_chain && inner.at_inf.value_or(true);
    } else {
      out.at_root = some_chain || inner.at_inf.value_or(false);
    }
    out.at_inf = inner.at_inf;
    normalize(out);
    return out;
  }

  Ladder which_;
  std::unordered_map<const void*, LadderValue> memo_;
};

}  // namespace

LadderValue ladder_eval(Ladder which, const Formula& f) { return LadderEvaluator(which).run(f); }

Formula ladder_member(std::size_t i) { return box_power(i + 1, Formula::bot()); }

KripkeModel ladder_truncation(Ladder which, std::size_t n) {
  std::vector<std::string> names{"s"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= n; ++i) {
    names.push_back("s" + std::to_string(i));
    edges.emplace_back(0, i + 1);
    if (i > 0) edges.emplace_back(i + 1, i);
  }
  if (which == Ladder::Extended) {
    names.push_back("sinf");
    edges.emplace_back(0, n + 2);
    edges.emplace_back(n + 2, n + 2);
  }
  return KripkeModel(std::move(names), {}, std::move(edges), {});
}

NonsaturationReport nonsaturation_witness_chain(std::size_t max_index) {
  if (max_index >= 20) throw LimitError("subfamily enumeration is capped at indices below 20");
  NonsaturationReport report;

  // s_j satisfies the member with i = j; and each member is false from
  // s_{i+1} on, which is what makes every finite subfamily fail.
  report.full_family_covers = true;
  for (std::size_t j = 0; j <= max_index + 1; ++j) {
    const LadderValue v = ladder_eval(Ladder::Chain, ladder_member(j));
    if (!v.at(j) || v.tail || v.prefix.size() != j + 1) report.full_family_covers = false;
  }

  report.all_subfamilies_fail = true;
  for (std::uint32_t mask = 0; mask < (1U << (max_index + 1)); ++mask) {
    std::vector<std::size_t> indices;
    std::vector<Formula> members;
    for (std::size_t i = 0; i <= max_index; ++i) {
      if ((mask >> i) & 1U) {
        indices.push_back(i);
        members.push_back(ladder_member(i));
      }
    }
    const LadderValue v = ladder_eval(Ladder::Chain, disjunction(members));
    if (v.tail) {
      report.all_subfamilies_fail = false;
      continue;
    }
    std::size_t m = v.prefix.size();
    for (std::size_t i = 0; i < v.prefix.size(); ++i) {
      if (!v.prefix[i]) {
        m = i;
        break;
      }
    }
    const std::size_t bound = indices.empty() ? 0 : indices.back() + 1;
    if (m < bound) report.all_subfamilies_fail = false;
    report.witnesses.push_back({std::move(indices), m});
  }
  return report;
}

SaturationReport saturation_check_extended(const std::vector<Formula>& family,
                                           bool with_parametric) {
  if (family.empty() && !with_parametric) {
    throw InputError("empty family: no successor of s can satisfy a member");
  }
  std::vector<LadderValue> values;
  for (const auto& f : family) values.push_back(ladder_eval(Ladder::Extended, f));

  SaturationReport report;
  // Parametric members are all false at s_∞.
  auto inf_cover = std::find_if(values.begin(), values.end(),
                                [](const LadderValue& v) { return *v.at_inf; });
  if (inf_cover == values.end()) {
    report.witness = "sinf";
    return report;
  }
  const auto i_inf = static_cast<std::size_t>(inf_cover - values.begin());
  const LadderValue& tail_cover = values[i_inf];
  if (!tail_cover.tail) {
    throw Error("member true at s_inf is not eventually true along the chain");
  }
  report.subfamily.push_back({false, i_inf});
  for (std::size_t j = 0; j < tail_cover.prefix.size(); ++j) {
    if (tail_cover.prefix[j]) continue;
    FamilyMember chosen;
    auto it = std::find_if(values.begin(), values.end(),
                           [j](const LadderValue& v) { return v.at(j); });
    if (it != values.end()) {
      chosen = {false, static_cast<std::size_t>(it - values.begin())};
    } else if (with_parametric) {
      chosen = {true, j};
    } else {
      report.subfamily.clear();
      report.witness = "s" + std::to_string(j);
      return report;
    }
    if (std::find(report.subfamily.begin(), report.subfamily.end(), chosen) ==
        report.subfamily.end()) {
      report.subfamily.push_back(chosen);
    }
  }
  report.holds = true;
  return report;
}

bool covers_extended(const std::vector<Formula>& family, const std::vector<FamilyMember>& subfamily) {
  std::vector<Formula> members;
  for (const auto& m : subfamily) {
    if (m.parametric) {
      members.push_back(ladder_member(m.index));
    } else {
      members.push_back(family.at(m.index));
    }
  }
  // s ⊩ □⋁ I₀ is the honest formula □⋁ I₀ evaluated at the root.
  return ladder_eval(Ladder::Extended, Formula::box(disjunction(members))).at_root;
}

}  // namespace vkt
