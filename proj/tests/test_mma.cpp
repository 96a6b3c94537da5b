#include <doctest.h>

#include "helpers.hpp"
#include "mmadf/error.hpp"
#include "mmadf/mma.hpp"
#include "oracle.hpp"

using namespace mmadf;
using testing::id;

namespace {

const std::array<Condition, 3> kConditions{Condition::Must, Condition::Mays, Condition::Not};

MmaFramework running() {
  const auto g = AttackGraph::from_names({"a_p", "a_r", "a_q"},
                                         {{"a_p", "a_r"}, {"a_q", "a_r"}});
  return MmaFramework(g, {NuanceTuple(0, 0, 1, 1), NuanceTuple(1, 2, 1, 1), NuanceTuple(0, 0, 1, 1)});
}

LabelSet as_set(const std::set<Label>& s) {
  LabelSet out;
  for (Label l : s) out.insert(l);
  return out;
}

}  // namespace

TEST_CASE("scale construction") {
  CHECK_THROWS_AS(MayMustScale(2, 1), InvalidFramework);
  CHECK_NOTHROW(MayMustScale(1, 1));
  CHECK(to_string(NuanceTuple(1, 2, 1, 1)) == "((1,2),(1,1))");
  const auto g = AttackGraph::from_names({"a"}, {});
  CHECK_THROWS_AS(MmaFramework(g, {}), InvalidFramework);
}

TEST_CASE("counting labelled attackers") {
  const auto f = running();
  const Labelling l{{"a_p", Label::out}, {"a_q", Label::in}, {"a_r", Label::undec}};
  CHECK(count_labelled(f, l, id("a_r"), Label::out) == 1);
  CHECK(count_labelled(f, l, id("a_r"), Label::in) == 1);
  CHECK(count_labelled(f, l, id("a_p"), Label::in) == 0);
  const Labelling u{{"a_p", Label::undec}, {"a_q", Label::undec}, {"a_r", Label::in}};
  CHECK(count_labelled(f, u, id("a_r"), Label::out) == 0);
  CHECK(count_labelled(f, u, id("a_r"), Label::in) == 0);
  CHECK_THROWS_AS(count_labelled(f, Labelling{{"a_p", Label::in}}, id("a_r"), Label::in),
                  DomainMismatch);
}

TEST_CASE("classification examples") {
  const auto f = running();
  const auto a_r = f.graph().index_of(id("a_r"));
  CHECK(f.classify_counts(a_r, 2, 0) == ConditionPair{Condition::Must, Condition::Not});
  CHECK(f.classify_counts(a_r, 1, 1) == ConditionPair{Condition::Mays, Condition::Must});
  const MmaFramework q(AttackGraph::from_names({"a_q"}, {}), {NuanceTuple(0, 0, 2, 2)});
  CHECK(classify(q, Labelling{{"a_q", Label::undec}}, id("a_q")) ==
        ConditionPair{Condition::Must, Condition::Not});
}

TEST_CASE("designations in the running example") {
  const auto f = running();
  auto at = [&](Label p, Label q) {
    return designations_mma(f, Labelling{{"a_p", p}, {"a_q", q}, {"a_r", Label::undec}}, id("a_r"));
  };
  CHECK(at(Label::undec, Label::undec) == LabelSet{Label::undec});
  CHECK(at(Label::out, Label::undec) == LabelSet{Label::in, Label::undec});
  CHECK(at(Label::out, Label::out) == LabelSet{Label::in});
  CHECK(at(Label::in, Label::in) == LabelSet{Label::out});
  CHECK(at(Label::out, Label::in) == LabelSet{Label::out, Label::undec});
  CHECK(at(Label::in, Label::out) == LabelSet{Label::out, Label::undec});
}

TEST_CASE("single in attacker under ((1,2),(1,2))") {
  const MmaFramework f(AttackGraph::from_names({"a_5", "a_4"}, {{"a_5", "a_4"}}),
                       {NuanceTuple(0, 0, 1, 1), NuanceTuple(1, 2, 1, 2)});
  CHECK(designations_mma(f, Labelling{{"a_5", Label::in}, {"a_4", Label::in}}, id("a_4")) ==
        LabelSet{Label::out, Label::undec});
}

TEST_CASE("designation table cells") {
  using C = Condition;
  CHECK(designation_table({C::Must, C::Must}) == LabelSet{Label::undec});
  CHECK(designation_table({C::Must, C::Mays}) == LabelSet{Label::in, Label::undec});
  CHECK(designation_table({C::Must, C::Not}) == LabelSet{Label::in});
  CHECK(designation_table({C::Mays, C::Must}) == LabelSet{Label::out, Label::undec});
  CHECK(designation_table({C::Mays, C::Mays}) == LabelSet::all());
  CHECK(designation_table({C::Mays, C::Not}) == LabelSet{Label::in, Label::undec});
  CHECK(designation_table({C::Not, C::Must}) == LabelSet{Label::out});
  CHECK(designation_table({C::Not, C::Mays}) == LabelSet{Label::out, Label::undec});
  CHECK(designation_table({C::Not, C::Not}) == LabelSet{Label::undec});
}

TEST_CASE("designation subsumption") {
  for (auto x : kConditions) {
    for (auto y : kConditions) {
      const auto cell = designation_table({x, y});
      CHECK(cell.is_subset_of(designation_table({Condition::Mays, y})));
      CHECK(cell.is_subset_of(designation_table({x, Condition::Mays})));
    }
  }
}

TEST_CASE("conditions, table and oracle agree on every small scale") {
  for (std::uint32_t n1 = 0; n1 <= 4; ++n1)
    for (std::uint32_t n2 = n1; n2 <= 4; ++n2)
      for (std::uint32_t m1 = 0; m1 <= 4; ++m1)
        for (std::uint32_t m2 = m1; m2 <= 4; ++m2) {
          const NuanceTuple q(n1, n2, m1, m2);
          for (std::uint32_t k = 0; k <= 4; ++k)
            for (std::uint32_t outs = 0; outs <= k; ++outs)
              for (std::uint32_t ins = 0; outs + ins <= k; ++ins) {
                const ConditionPair c{classify_count(q.acceptance, outs),
                                      classify_count(q.rejection, ins)};
                const auto d = designation_from_conditions(c);
                CHECK_FALSE(d.empty());
                CHECK(d == designation_table(c));
                CHECK(d == as_set(oracle::designate(q, outs, ins)));
              }
        }
}

TEST_CASE("classification is exclusive and monotone") {
  for (std::uint32_t may = 0; may <= 4; ++may)
    for (std::uint32_t must = may; must <= 4; ++must) {
      const MayMustScale s(may, must);
      for (std::uint32_t c = 0; c < 5; ++c) {
        const auto now = classify_count(s, c);
        const auto next = classify_count(s, c + 1);
        CHECK(static_cast<int>(now) <= static_cast<int>(next));
        const int hits = (c < may) + (may <= c && c < must) + (must <= c);
        CHECK(hits == 1);
      }
    }
}

TEST_CASE("subsumption realised by labellings") {
  const auto g = AttackGraph::from_names({"t", "u", "v", "w"},
                                         {{"u", "t"}, {"v", "t"}, {"w", "t"}});
  std::size_t realised = 0;
  for (std::uint32_t n1 = 0; n1 <= 4; ++n1)
    for (std::uint32_t n2 = n1; n2 <= 4; ++n2)
      for (std::uint32_t m1 = 0; m1 <= 4; ++m1)
        for (std::uint32_t m2 = m1; m2 <= 4; ++m2) {
          const MmaFramework f(g, {NuanceTuple(n1, n2, m1, m2), NuanceTuple(), NuanceTuple(),
                                   NuanceTuple()});
          std::map<std::pair<int, int>, LabelSet> seen;
          for_each_labelling(4, [&](std::span<const Label> l) {
            const auto c = f.classify_counts(0, static_cast<std::uint32_t>(std::count(l.begin() + 1, l.end(), Label::out)),
                                             static_cast<std::uint32_t>(std::count(l.begin() + 1, l.end(), Label::in)));
            seen[{static_cast<int>(c.acceptance), static_cast<int>(c.rejection)}] = f.designations(0, l);
            return true;
          });
          const int mays = static_cast<int>(Condition::Mays);
          for (const auto& [c, d] : seen) {
            if (auto it = seen.find({mays, c.second}); it != seen.end()) {
              CHECK(d.is_subset_of(it->second));
              ++realised;
            }
            if (auto it = seen.find({c.first, mays}); it != seen.end()) {
              CHECK(d.is_subset_of(it->second));
              ++realised;
            }
          }
        }
  CHECK(realised > 0);
}

TEST_CASE("proper and exact labels") {
  const auto f = testing::load_mma("mma_example.mma");
  const Labelling first{{"a_p", Label::out}, {"a_r", Label::out}, {"a_q", Label::in}};
  const Labelling second{{"a_p", Label::out}, {"a_r", Label::undec}, {"a_q", Label::in}};
  CHECK(is_proper_mma(f, first, id("a_r")));
  CHECK(is_exact_mma(f, first));
  CHECK(is_exact_mma(f, second));
  CHECK_FALSE(is_exact_mma(f, Labelling{{"a_p", Label::out}, {"a_r", Label::in}, {"a_q", Label::in}}));
  CHECK_FALSE(is_proper_mma(f, Labelling{{"a_p", Label::in}, {"a_r", Label::out}, {"a_q", Label::in}},
                            id("a_p")));
  CHECK_FALSE(is_proper_mma(f, Labelling{{"a_p", Label::out}}, id("a_r")));
  CHECK_THROWS_AS(is_exact_mma(f, Labelling{{"a_p", Label::out}}), DomainMismatch);
  CHECK(is_exact_mma(MmaFramework(), Labelling{}));
}

TEST_CASE("scale warnings") {
  const auto f = testing::load_mma("mma_example.mma");
  const auto w = scale_warnings(f);
  CHECK(w.size() == 2);
  const MmaFramework ok(AttackGraph::from_names({"a"}, {}), {NuanceTuple(0, 0, 0, 0)});
  CHECK(scale_warnings(ok).empty());
}
