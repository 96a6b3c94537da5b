#include "mmadf/properties.hpp"

#include <algorithm>
#include <sstream>

#include "mmadf/galois.hpp"
#include "mmadf/io.hpp"

namespace mmadf {

LabellingSet brute_force_exact(const Framework& f) {
  const auto& g = graph_of(f);
  const auto total = *pow3(g.size());
  LabellingSet out;
  for (std::size_t code = 0; code < total; ++code) {
    Labelling::Map m;
    auto c = code;
    for (const auto& a : g.arguments()) {
      m.emplace(a, static_cast<Label>(c % 3));
      c /= 3;
    }
    const Labelling l(std::move(m));
    const bool exact = std::all_of(g.arguments().begin(), g.arguments().end(),
                                   [&](const ArgumentId& a) {
                                     if (const auto* mma = std::get_if<MmaFramework>(&f)) {
                                       return is_proper_mma(*mma, l, a);
                                     }
                                     return is_proper_adf(std::get<AdfFramework>(f), l, a);
                                   });
    if (exact) out.insert(l);
  }
  return out;
}

namespace {

class Checker {
 public:
  Checker(std::string instance) : instance_(std::move(instance)) {}

  bool expect(bool ok, const char* property, const std::string& detail = {}) {
    if (!ok && !violation_) violation_ = PropertyViolation{property, detail, instance_};
    return ok;
  }
  std::optional<PropertyViolation> take() { return std::move(violation_); }
  bool failed() const { return violation_.has_value(); }

 private:
  std::string instance_;
  std::optional<PropertyViolation> violation_;
};

void check_common(Checker& c, const Framework& f, const Limits& limits) {
  c.expect(parse(serialize(f), limits) == f, "parse-serialize round trip");
  const auto exact = exact_semantics(f, limits);
  c.expect(exact == brute_force_exact(f), "exact semantics matches brute force",
           "enumeration found " + std::to_string(exact.size()) + " labelling(s)");
  const auto steps = grounded_iterates(f, limits);
  for (std::size_t i = 1; i < steps.size(); ++i) {
    c.expect(labelling_leq(steps[i - 1], steps[i]), "grounded iteration increases",
             to_string(steps[i - 1]) + " then " + to_string(steps[i]));
  }
  c.expect(theta(f, steps.back(), limits) == steps.back(), "grounded labelling is a fixpoint",
           to_string(steps.back()));
  const auto& g = graph_of(f);
  for (const auto& a : g.arguments()) {
    for (Label target : {Label::in, Label::out}) {
      for (auto kind : {SemanticsKind::exact, SemanticsKind::adf_grounded}) {
        const bool cred = accepted(f, a, kind, {Quantifier::credulous, target}, limits);
        const bool skep = accepted(f, a, kind, {Quantifier::skeptical, target}, limits);
        c.expect(!skep || cred, "skeptical acceptance implies credulous", a.name());
      }
    }
  }
}

}  // namespace

std::optional<PropertyViolation> check_adf_properties(const AdfFramework& adf, Rng& rng,
                                                      const Limits& limits) {
  (void)rng;
  Checker c(serialize(adf));
  const Framework concrete{adf};
  check_common(c, concrete, limits);
  if (c.failed()) return c.take();

  const auto& g = adf.graph();
  const auto exact = exact_semantics(concrete, limits);
  const auto ground = grounded(concrete, limits);

  BigCount abstractions = 1;
  for (const auto& t : adf.tables()) abstractions *= valid_scales(t).size();
  c.expect(abstractions >= 1 && abstractions <= abstraction_upper_bound(g.size()),
           "abstraction count within bounds", abstractions.str());

  for (const auto& m : minimal_abstractions(adf, limits)) {
    const std::string tag = serialize(m);
    c.expect(is_abstraction(m, adf), "minimal abstraction is an abstraction", tag);
    c.expect(is_concretisation(adf, m), "ADF concretises its abstraction", tag);
    for (std::size_t a = 0; a < g.size(); ++a) {
      const auto& t = adf.table(a);
      for (std::size_t r = 0; r < t.rows().size(); ++r) {
        const auto [outs, ins] = row_counts(ConditionTable::row_key(r, t.arity()));
        const auto d = m.designations_for_counts(a, outs, ins);
        c.expect(d.contains(t.rows()[r]), "abstraction designates the table's label", tag);
        if (d.size() == 1) {
          c.expect(*d.single() == t.rows()[r], "singleton designation pins the label", tag);
        }
      }
      // No fitting scale strictly tighter than the chosen one.
      for (const auto& q : valid_scales(t)) {
        c.expect(!(q != m.scale(a) && nuance_leq(q, m.scale(a))),
                 "minimal abstraction is not dominated", tag + " by " + to_string(q));
      }
    }
    const auto one = label_one_exact(m, limits);
    c.expect(std::includes(exact.begin(), exact.end(), one.begin(), one.end()),
             "singly designated exact labellings are exact for the ADF", tag);
    c.expect(labelling_leq(grounded(Framework{m}, limits), ground),
             "abstract grounded labelling lies below the concrete one", tag);
    if (c.failed()) return c.take();
  }

  const auto report = transfer_report(adf, limits);
  for (const auto& l : report.certified_exact) {
    c.expect(exact.contains(l), "certified exact labelling", to_string(l));
  }
  c.expect(labelling_leq(report.grounded_bound, ground), "certified grounded bound");
  for (const auto& fact : report.facts) {
    const auto& sem = fact.semantics == SemanticsKind::exact ? exact : LabellingSet{ground};
    const bool holds = accepted_in(sem, fact.argument, fact.mode);
    if (fact.status == FactStatus::certified) {
      c.expect(holds, "certified acceptance fact", fact.argument.name());
    } else if (exact.size() == report.condition_exact_count) {
      c.expect(holds, "conditional acceptance fact under its condition", fact.argument.name());
    }
  }
  return c.take();
}

std::optional<PropertyViolation> check_mma_properties(const MmaFramework& mma, Rng& rng,
                                                      const Limits& limits) {
  Checker c(serialize(mma));
  check_common(c, Framework{mma}, limits);
  if (c.failed()) return c.take();

  const auto& g = mma.graph();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto k = static_cast<std::uint32_t>(g.attacker_indices(a).size());
    for (std::uint32_t outs = 0; outs <= k; ++outs) {
      for (std::uint32_t ins = 0; outs + ins <= k; ++ins) {
        const auto cls = mma.classify_counts(a, outs, ins);
        const auto d = designation_from_conditions(cls);
        c.expect(!d.empty(), "designation is never empty");
        c.expect(d == designation_table(cls), "designation agrees with the table");
      }
    }
  }

  const auto count = count_concretisations(mma, limits);
  c.expect(count.total >= 1, "at least one concretisation");
  if (g.size() <= 4) {
    c.expect(count.total <= concretisation_upper_bound(g.size()),
             "concretisation count within bound", count.total.str());
  }
  c.expect(is_concretisation(canonical_concretisation(mma, limits), mma),
           "canonical concretisation");

  const auto looser = random_loosening(rng, mma);
  for (int i = 0; i < 4; ++i) {
    const auto adf = random_concretisation(rng, mma);
    c.expect(is_concretisation(adf, mma), "random concretisation", serialize(adf));
    c.expect(is_concretisation(adf, looser), "concretisations grow with looser scales",
             serialize(looser) + serialize(adf));
  }
  return c.take();
}

FuzzOutcome fuzz(std::uint64_t seed, std::size_t count, std::size_t max_args,
                 const Limits& limits) {
  Rng rng(seed);
  FuzzOutcome outcome;
  const auto max_k = std::min<std::size_t>(limits.max_attackers, 3);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(0, max_args));
    const auto g = random_graph(rng, n, max_k);
    ++outcome.instances;
    if (auto v = check_adf_properties(random_adf(rng, g), rng, limits)) {
      outcome.violation = std::move(v);
      return outcome;
    }
    if (auto v = check_mma_properties(random_mma(rng, g, 1), rng, limits)) {
      outcome.violation = std::move(v);
      return outcome;
    }
  }
  return outcome;
}

}  // namespace mmadf
