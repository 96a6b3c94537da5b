#include "mmadf/semantics.hpp"

#include <algorithm>
#include <string>

namespace mmadf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_size(const AttackGraph& g, const Limits& limits) {
  if (g.size() > limits.max_args) {
    throw ResourceLimit(std::to_string(g.size()) + " arguments exceed the enumeration cap of " +
                        std::to_string(limits.max_args));
  }
}

}  // namespace

const AttackGraph& graph_of(const Framework& f) noexcept {
  return std::visit([](const auto& x) -> const AttackGraph& { return x.graph(); }, f);
}

LabelSet designated(const Framework& f, AttackGraph::Index a, std::span<const Label> dense) {
  return std::visit(overloaded{
                        [&](const MmaFramework& m) { return m.designations(a, dense); },
                        [&](const AdfFramework& d) { return LabelSet{d.designation(a, dense)}; },
                    },
                    f);
}

bool is_exact(const Framework& f, const Labelling& l) {
  return std::visit(overloaded{
                        [&](const MmaFramework& m) { return is_exact_mma(m, l); },
                        [&](const AdfFramework& d) { return is_exact_adf(d, l); },
                    },
                    f);
}

LabellingSet exact_semantics(const Framework& f, const Limits& limits) {
  const auto& g = graph_of(f);
  check_size(g, limits);
  LabellingSet out;
  for_each_labelling(g.size(), [&](std::span<const Label> l) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!designated(f, i, l).contains(l[i])) return true;
    }
    out.insert(Labelling::from_dense(g, l));
    return true;
  });
  return out;
}

std::vector<Label> theta(const Framework& f, std::span<const Label> l, const Limits& limits) {
  const auto& g = graph_of(f);
  if (l.size() != g.size()) throw DomainMismatch("labelling does not match the framework");
  const auto open = static_cast<std::size_t>(std::count(l.begin(), l.end(), Label::undec));
  if (open > limits.max_args || open >= 63) {
    throw ResourceLimit(std::to_string(open) + " undecided arguments exceed the completion cap");
  }

  // consensus[i]: label every completion so far designated exclusively, or
  // undec once two completions disagree or one designates several labels.
  std::vector<Label> consensus(g.size(), Label::undec);
  std::vector<bool> seen(g.size(), false);
  std::size_t undecided = 0;
  for_each_completion(l, [&](std::span<const Label> c) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (seen[i] && consensus[i] == Label::undec) continue;
      const auto d = designated(f, i, c).single();
      const Label vote = (d && *d != Label::undec) ? *d : Label::undec;
      if (!seen[i]) {
        seen[i] = true;
        consensus[i] = vote;
        if (vote == Label::undec) ++undecided;
      } else if (consensus[i] != vote) {
        consensus[i] = Label::undec;
        ++undecided;
      }
    }
    return undecided < g.size();
  });
  return consensus;
}

Labelling theta(const Framework& f, const Labelling& l, const Limits& limits) {
  const auto& g = graph_of(f);
  const auto next = theta(f, l.to_dense(g), limits);
  return Labelling::from_dense(g, next);
}

std::vector<Labelling> grounded_iterates(const Framework& f, const Limits& limits) {
  const auto& g = graph_of(f);
  check_size(g, limits);
  std::vector<Label> current(g.size(), Label::undec);
  std::vector<Labelling> steps{Labelling::from_dense(g, current)};
  while (true) {
    auto next = theta(f, current, limits);
    if (!labelling_leq(current, next)) {
      throw NonMonotoneStep("consensus step " + std::to_string(steps.size()) +
                            " is not increasing: " + to_string(steps.back()) + " then " +
                            to_string(Labelling::from_dense(g, next)));
    }
    if (next == current) return steps;
    current = std::move(next);
    steps.push_back(Labelling::from_dense(g, current));
  }
}

Labelling grounded(const Framework& f, const Limits& limits) {
  return grounded_iterates(f, limits).back();
}

LabellingSet semantics(const Framework& f, SemanticsKind kind, const Limits& limits) {
  if (kind == SemanticsKind::exact) return exact_semantics(f, limits);
  return {grounded(f, limits)};
}

bool accepted_in(const LabellingSet& sem, const ArgumentId& a, AcceptanceMode mode) {
  if (mode.target == Label::undec) throw Error("acceptance queries target in or out");
  const auto hit = [&](const Labelling& l) { return l.at(a) == mode.target; };
  const bool credulous = std::any_of(sem.begin(), sem.end(), hit);
  if (mode.quantifier == Quantifier::credulous) return credulous;
  return credulous && std::all_of(sem.begin(), sem.end(), hit);
}

bool accepted(const Framework& f, const ArgumentId& a, SemanticsKind kind, AcceptanceMode mode,
              const Limits& limits) {
  graph_of(f).index_of(a);
  return accepted_in(semantics(f, kind, limits), a, mode);
}

}  // namespace mmadf
