#include "mmadf/galois.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace mmadf {

namespace {

void require_same_graph(const AttackGraph& x, const AttackGraph& y) {
  if (!(x == y)) throw GraphMismatch("frameworks are over different attack graphs");
}

std::size_t checked_rows(const AttackGraph& g, AttackGraph::Index a, const Limits& limits) {
  const auto k = g.attacker_indices(a).size();
  if (k > limits.max_attackers) {
    throw ResourceLimit("argument '" + g.argument(a).name() + "' has " + std::to_string(k) +
                        " attackers, above the cap of " + std::to_string(limits.max_attackers));
  }
  return *pow3(k);
}

std::vector<ArgumentId> attacker_names(const AttackGraph& g, AttackGraph::Index a) {
  std::vector<ArgumentId> out;
  for (auto x : g.attacker_indices(a)) out.push_back(g.argument(x));
  return out;
}

/// Designation set of every row of argument `a`'s table, in row order.
std::vector<LabelSet> row_designations(const MmaFramework& mma, AttackGraph::Index a,
                                       const Limits& limits) {
  const auto& g = mma.graph();
  const auto n = checked_rows(g, a, limits);
  const auto k = g.attacker_indices(a).size();
  std::vector<LabelSet> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto key = ConditionTable::row_key(r, k);
    const auto [outs, ins] = row_counts(key);
    out.push_back(mma.designations_for_counts(a, outs, ins));
  }
  return out;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> row_counts(std::span<const Label> key) noexcept {
  std::uint32_t outs = 0;
  std::uint32_t ins = 0;
  for (Label l : key) {
    if (l == Label::out) ++outs;
    if (l == Label::in) ++ins;
  }
  return {outs, ins};
}

bool is_concretisation(const AdfFramework& adf, const MmaFramework& mma) {
  require_same_graph(adf.graph(), mma.graph());
  const auto& g = adf.graph();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& table = adf.table(a);
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
      const auto [outs, ins] = row_counts(ConditionTable::row_key(r, table.arity()));
      if (!mma.designations_for_counts(a, outs, ins).contains(table.rows()[r])) return false;
    }
  }
  return true;
}

ConcretisationCount count_concretisations(const MmaFramework& mma, const Limits& limits) {
  ConcretisationCount count{1, {}};
  const auto& g = mma.graph();
  for (std::size_t a = 0; a < g.size(); ++a) {
    BigCount factor = 1;
    for (auto d : row_designations(mma, a, limits)) factor *= d.size();
    count.total *= factor;
    count.factors.emplace_back(g.argument(a), std::move(factor));
  }
  return count;
}

BigCount concretisation_upper_bound(std::size_t n) {
  const auto rows = pow3(n);
  if (!rows || *rows > std::numeric_limits<unsigned>::max() / std::max<std::size_t>(n, 1)) {
    throw ResourceLimit("bound too large to materialise");
  }
  return boost::multiprecision::pow(BigCount(3), static_cast<unsigned>(n * *rows));
}

BigCount abstraction_upper_bound(std::size_t n) {
  const BigCount base = BigCount((n + 2) * (n + 3)) / 2;
  return boost::multiprecision::pow(base, static_cast<unsigned>(2 * n));
}

ConcretisationStream::ConcretisationStream(MmaFramework mma, const Limits& limits)
    : mma_(std::move(mma)) {
  const auto& g = mma_.graph();
  rows_.resize(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto designations = row_designations(mma_, a, limits);
    rows_[a].resize(designations.size());
    for (std::size_t r = 0; r < designations.size(); ++r) {
      auto choices = designations[r].members();
      rows_[a][r] = choices.front();
      if (choices.size() > 1) digits_.push_back({a, r, std::move(choices)});
    }
  }
  position_.assign(digits_.size(), 0);
}

std::optional<AdfFramework> ConcretisationStream::next() {
  if (done_) return std::nullopt;
  const auto& g = mma_.graph();
  for (std::size_t d = 0; d < digits_.size(); ++d) {
    rows_[digits_[d].argument][digits_[d].row] = digits_[d].choices[position_[d]];
  }
  std::vector<ConditionTable> tables;
  tables.reserve(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    tables.emplace_back(g.argument(a), attacker_names(g, a), rows_[a],
                        g.attacker_indices(a).size());
  }
  AdfFramework result(g, std::move(tables));

  std::size_t d = digits_.size();
  while (true) {
    if (d == 0) {
      done_ = true;
      break;
    }
    --d;
    if (++position_[d] < digits_[d].choices.size()) break;
    position_[d] = 0;
  }
  return result;
}

std::vector<AdfFramework> enumerate_concretisations(const MmaFramework& mma, std::size_t limit,
                                                    const Limits& limits) {
  if (limit == 0) throw Error("enumeration limit must be at least 1");
  ConcretisationStream stream(mma, limits);
  std::vector<AdfFramework> out;
  while (out.size() < limit) {
    auto next = stream.next();
    if (!next) break;
    out.push_back(std::move(*next));
  }
  return out;
}

AdfFramework canonical_concretisation(const MmaFramework& mma, const Limits& limits) {
  return *ConcretisationStream(mma, limits).next();
}

bool within_abstraction_bounds(const NuanceTuple& q, std::size_t attackers) noexcept {
  const auto top = attackers + 1;
  return q.acceptance.may <= q.acceptance.must && q.acceptance.must <= top &&
         q.rejection.may <= q.rejection.must && q.rejection.must <= top;
}

bool table_fits_scale(const ConditionTable& table, const NuanceTuple& q) {
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const auto [outs, ins] = row_counts(ConditionTable::row_key(r, table.arity()));
    const ConditionPair region{classify_count(q.acceptance, outs),
                               classify_count(q.rejection, ins)};
    if (!allowed_labels(region).contains(table.rows()[r])) return false;
  }
  return true;
}

std::vector<NuanceTuple> valid_scales(const ConditionTable& table) {
  const auto top = static_cast<std::uint32_t>(table.arity() + 1);
  std::vector<NuanceTuple> out;
  for (std::uint32_t n1 = 0; n1 <= top; ++n1) {
    for (std::uint32_t n2 = n1; n2 <= top; ++n2) {
      for (std::uint32_t m1 = 0; m1 <= top; ++m1) {
        for (std::uint32_t m2 = m1; m2 <= top; ++m2) {
          const NuanceTuple q(n1, n2, m1, m2);
          if (table_fits_scale(table, q)) out.push_back(q);
        }
      }
    }
  }
  return out;
}

ScaleCandidateSet valid_scales(const AdfFramework& adf, const ArgumentId& a) {
  return {a, valid_scales(adf.table(a))};
}

bool is_abstraction(const MmaFramework& mma, const AdfFramework& adf) {
  require_same_graph(mma.graph(), adf.graph());
  const auto& g = adf.graph();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& q = mma.scale(a);
    if (!within_abstraction_bounds(q, g.attacker_indices(a).size())) return false;
    if (!table_fits_scale(adf.table(a), q)) return false;
  }
  return true;
}

bool nuance_leq(const NuanceTuple& q1, const NuanceTuple& q2) noexcept {
  return q2.acceptance.may <= q1.acceptance.may && q1.acceptance.must <= q2.acceptance.must &&
         q2.rejection.may <= q1.rejection.may && q1.rejection.must <= q2.rejection.must;
}

bool framework_leq(const MmaFramework& m1, const MmaFramework& m2) {
  require_same_graph(m1.graph(), m2.graph());
  for (std::size_t a = 0; a < m1.scales().size(); ++a) {
    if (!nuance_leq(m1.scale(a), m2.scale(a))) return false;
  }
  return true;
}

bool set_leq(const MmaSet& s1, const MmaSet& s2) {
  const AttackGraph* g = nullptr;
  for (const auto* s : {&s1, &s2}) {
    for (const auto& m : *s) {
      if (g == nullptr) g = &m.graph();
      require_same_graph(*g, m.graph());
    }
  }
  return std::all_of(s1.begin(), s1.end(), [&](const MmaFramework& x) {
    return std::any_of(s2.begin(), s2.end(),
                       [&](const MmaFramework& y) { return framework_leq(x, y); });
  });
}

std::vector<NuanceTuple> minimal_scales(const std::vector<NuanceTuple>& qs) {
  std::vector<NuanceTuple> out;
  for (const auto& q : qs) {
    const bool dominated = std::any_of(qs.begin(), qs.end(), [&](const NuanceTuple& p) {
      return p != q && nuance_leq(p, q);
    });
    if (!dominated) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<std::vector<NuanceTuple>> per_argument_minimal(const AdfFramework& adf) {
  std::vector<std::vector<NuanceTuple>> out;
  for (const auto& t : adf.tables()) {
    out.push_back(minimal_scales(valid_scales(t)));
    if (out.back().empty()) {
      // The all-permissive tuple always fits, so this is unreachable for a
      // well-formed table.
      throw Error("no abstraction scale fits the table of '" + t.owner().name() + "'");
    }
  }
  return out;
}

constexpr std::size_t kMaxMinimalAbstractions = 1u << 20;

}  // namespace

std::vector<MmaFramework> minimal_abstractions(const AdfFramework& adf, const Limits& limits) {
  (void)limits;
  const auto choices = per_argument_minimal(adf);
  BigCount total = 1;
  for (const auto& c : choices) total *= c.size();
  if (total > kMaxMinimalAbstractions) {
    throw ResourceLimit("too many minimal abstractions to list");
  }
  std::vector<MmaFramework> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  while (true) {
    std::vector<NuanceTuple> scales;
    for (std::size_t a = 0; a < choices.size(); ++a) scales.push_back(choices[a][pos[a]]);
    out.emplace_back(adf.graph(), std::move(scales));
    std::size_t a = choices.size();
    while (a > 0) {
      --a;
      if (++pos[a] < choices[a].size()) break;
      pos[a] = 0;
      if (a == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

MmaFramework least_minimal_abstraction(const AdfFramework& adf) {
  std::vector<NuanceTuple> scales;
  for (const auto& c : per_argument_minimal(adf)) scales.push_back(c.front());
  return MmaFramework(adf.graph(), std::move(scales));
}

AdfSet f_gamma(const MmaSet& s, std::size_t max_size, const Limits& limits) {
  BigCount bound = 0;
  for (const auto& m : s) bound += count_concretisations(m, limits).total;
  if (bound > max_size) {
    throw ResourceLimit("concretisation union may hold " + bound.str() + " frameworks, above " +
                        std::to_string(max_size));
  }
  AdfSet out;
  const AttackGraph* g = nullptr;
  for (const auto& m : s) {
    if (g == nullptr) g = &m.graph();
    require_same_graph(*g, m.graph());
    ConcretisationStream stream(m, limits);
    while (auto adf = stream.next()) out.insert(std::move(*adf));
  }
  return out;
}

MmaSet f_alpha(const AdfSet& t, const Limits& limits) {
  MmaSet out;
  const AttackGraph* g = nullptr;
  for (const auto& adf : t) {
    if (g == nullptr) g = &adf.graph();
    require_same_graph(*g, adf.graph());
    for (auto& m : minimal_abstractions(adf, limits)) out.insert(std::move(m));
  }
  return out;
}

LabellingSet label_one_exact(const MmaFramework& mma, const Limits& limits) {
  const auto& g = mma.graph();
  LabellingSet out;
  for (const auto& l : exact_semantics(Framework{mma}, limits)) {
    const auto dense = l.to_dense(g);
    bool singleton = true;
    for (std::size_t a = 0; singleton && a < g.size(); ++a) {
      singleton = mma.designations(a, dense).size() <= 1;
    }
    if (singleton) out.insert(l);
  }
  return out;
}

TransferReport transfer_report(const AdfFramework& adf, const Limits& limits) {
  const auto& g = adf.graph();
  auto m = least_minimal_abstraction(adf);
  const Framework abstract{m};

  TransferReport report{m, label_one_exact(m, limits), grounded(abstract, limits), {}, 0};
  report.condition_exact_count = report.certified_exact.size();

  for (const auto& a : g.arguments()) {
    for (Label target : {Label::in, Label::out}) {
      if (report.grounded_bound.at(a) == target) {
        report.facts.push_back({FactStatus::certified, SemanticsKind::adf_grounded,
                                {Quantifier::credulous, target}, a});
        report.facts.push_back({FactStatus::certified, SemanticsKind::adf_grounded,
                                {Quantifier::skeptical, target}, a});
      }
    }
  }
  for (const auto& a : g.arguments()) {
    for (Label target : {Label::in, Label::out}) {
      if (accepted_in(report.certified_exact, a, {Quantifier::credulous, target})) {
        report.facts.push_back({FactStatus::certified, SemanticsKind::exact,
                                {Quantifier::credulous, target}, a});
      }
    }
  }
  // Skeptical exact facts of the abstraction carry over only when the ADF's
  // exact labellings are exactly the certified ones, which needs a non-empty
  // certified set.
  if (!report.certified_exact.empty()) {
    const auto exact = exact_semantics(abstract, limits);
    for (const auto& a : g.arguments()) {
      for (Label target : {Label::in, Label::out}) {
        if (accepted_in(exact, a, {Quantifier::skeptical, target})) {
          report.facts.push_back({FactStatus::conditional, SemanticsKind::exact,
                                  {Quantifier::skeptical, target}, a});
        }
      }
    }
  }
  return report;
}

}  // namespace mmadf
