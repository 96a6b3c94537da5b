#include "mmadf/mma.hpp"

namespace mmadf {

MayMustScale::MayMustScale(std::uint32_t may_, std::uint32_t must_) : may(may_), must(must_) {
  if (may > must) {
    throw InvalidFramework("may-condition " + std::to_string(may) +
                           " exceeds must-condition " + std::to_string(must));
  }
}

std::string to_string(const NuanceTuple& q) {
  return "((" + std::to_string(q.acceptance.may) + "," + std::to_string(q.acceptance.must) +
         "),(" + std::to_string(q.rejection.may) + "," + std::to_string(q.rejection.must) + "))";
}

std::string_view to_string(Condition c) noexcept {
  switch (c) {
    case Condition::Not:
      return "not";
    case Condition::Mays:
      return "may_s";
    case Condition::Must:
      return "must";
  }
  return "?";
}

LabelSet designation_from_conditions(ConditionPair c) noexcept {
  const bool may_a = c.acceptance != Condition::Not;
  const bool may_r = c.rejection != Condition::Not;
  const bool must_a = c.acceptance == Condition::Must;
  const bool must_r = c.rejection == Condition::Must;
  LabelSet out;
  if (may_a && !must_r) out.insert(Label::in);
  if (may_r && !must_a) out.insert(Label::out);
  if ((must_a && must_r) || c.acceptance == Condition::Mays ||
      c.rejection == Condition::Mays || (!may_a && !may_r)) {
    out.insert(Label::undec);
  }
  return out;
}

LabelSet designation_table(ConditionPair c) noexcept {
  using enum Label;
  // rows: acceptance must / may_s / not; columns: rejection must / may_s / not
  static const LabelSet table[3][3] = {
      {{undec}, {in, undec}, {in}},
      {{out, undec}, {in, out, undec}, {in, undec}},
      {{out}, {out, undec}, {undec}},
  };
  auto row = [](Condition x) {
    switch (x) {
      case Condition::Must:
        return 0;
      case Condition::Mays:
        return 1;
      case Condition::Not:
        return 2;
    }
    return 2;
  };
  return table[row(c.acceptance)][row(c.rejection)];
}

MmaFramework::MmaFramework(AttackGraph graph, std::vector<NuanceTuple> scales)
    : graph_(std::move(graph)), scales_(std::move(scales)) {
  if (scales_.size() != graph_.size()) {
    throw InvalidFramework("an MMA needs exactly one nuance tuple per argument");
  }
  for (const auto& q : scales_) {
    // Re-validate; aggregate assignment could bypass the scale constructor.
    (void)MayMustScale(q.acceptance.may, q.acceptance.must);
    (void)MayMustScale(q.rejection.may, q.rejection.must);
  }
}

MmaFramework MmaFramework::with_scale(AttackGraph::Index i, NuanceTuple q) const {
  auto scales = scales_;
  scales.at(i) = q;
  return MmaFramework(graph_, std::move(scales));
}

ConditionPair MmaFramework::classify_counts(AttackGraph::Index a, std::uint32_t out_count,
                                            std::uint32_t in_count) const {
  const auto& q = scales_.at(a);
  return {classify_count(q.acceptance, out_count), classify_count(q.rejection, in_count)};
}

DesignationSet MmaFramework::designations_for_counts(AttackGraph::Index a,
                                                     std::uint32_t out_count,
                                                     std::uint32_t in_count) const {
  return designation_from_conditions(classify_counts(a, out_count, in_count));
}

DesignationSet MmaFramework::designations(AttackGraph::Index a,
                                          std::span<const Label> dense) const {
  std::uint32_t outs = 0;
  std::uint32_t ins = 0;
  for (auto x : graph_.attacker_indices(a)) {
    if (dense[x] == Label::out) ++outs;
    if (dense[x] == Label::in) ++ins;
  }
  return designations_for_counts(a, outs, ins);
}

std::vector<std::string> scale_warnings(const MmaFramework& f) {
  std::vector<std::string> notes;
  const auto& g = f.graph();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.attacker_indices(i).size();
    const auto& q = f.scale(i);
    if (q.acceptance.must > k) {
      notes.push_back("must-acceptance " + std::to_string(q.acceptance.must) + " of '" +
                      g.argument(i).name() + "' exceeds its " + std::to_string(k) +
                      " attacker(s) and is never satisfied");
    }
    if (q.rejection.must > k) {
      notes.push_back("must-rejection " + std::to_string(q.rejection.must) + " of '" +
                      g.argument(i).name() + "' exceeds its " + std::to_string(k) +
                      " attacker(s) and is never satisfied");
    }
  }
  return notes;
}

std::uint32_t count_labelled(const MmaFramework& f, const Labelling& l, const ArgumentId& a,
                             Label target) {
  if (target == Label::undec) {
    throw Error("only in and out attackers are counted");
  }
  const auto& g = f.graph();
  std::uint32_t n = 0;
  for (auto x : g.attacker_indices(g.index_of(a))) {
    if (l.at(g.argument(x)) == target) ++n;
  }
  return n;
}

ConditionPair classify(const MmaFramework& f, const Labelling& l, const ArgumentId& a) {
  const auto i = f.graph().index_of(a);
  return f.classify_counts(i, count_labelled(f, l, a, Label::out),
                           count_labelled(f, l, a, Label::in));
}

DesignationSet designations_mma(const MmaFramework& f, const Labelling& l,
                                const ArgumentId& a) {
  return designation_from_conditions(classify(f, l, a));
}

bool is_proper_mma(const MmaFramework& f, const Labelling& l, const ArgumentId& a) {
  const auto& g = f.graph();
  const auto own = l.get(a);
  if (!own) return false;
  for (auto x : g.attacker_indices(g.index_of(a))) {
    if (!l.defined(g.argument(x))) return false;
  }
  return designations_mma(f, l, a).contains(*own);
}

bool is_exact_mma(const MmaFramework& f, const Labelling& l) {
  const auto dense = l.to_dense(f.graph());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!f.designations(i, dense).contains(dense[i])) return false;
  }
  return true;
}

}  // namespace mmadf
