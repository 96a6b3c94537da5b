#include "mmadf/random.hpp"

#include <algorithm>
#include <string>

namespace mmadf {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const auto x = next();
    if (x < limit) return x % n;
  }
}

AttackGraph random_graph(Rng& rng, std::size_t n, std::size_t max_attackers) {
  std::vector<ArgumentId> args;
  for (std::size_t i = 0; i < n; ++i) args.emplace_back("a_" + std::to_string(i + 1));
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
  for (std::size_t t = 0; t < n; ++t) {
    const auto k = rng.between(0, std::min(max_attackers, n));
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t j = 0; j < k; ++j) {
      const auto pick = j + rng.below(n - j);
      std::swap(pool[j], pool[pick]);
      attacks.emplace_back(args[pool[j]], args[t]);
    }
  }
  for (std::size_t i = attacks.size(); i > 1; --i) {
    std::swap(attacks[i - 1], attacks[rng.below(i)]);
  }
  return AttackGraph(std::move(args), std::move(attacks));
}

namespace {

MayMustScale random_scale(Rng& rng, std::uint32_t top) {
  const auto a = static_cast<std::uint32_t>(rng.between(0, top));
  const auto b = static_cast<std::uint32_t>(rng.between(0, top));
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

MmaFramework random_mma(Rng& rng, const AttackGraph& g, std::uint32_t overshoot) {
  std::vector<NuanceTuple> scales;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto top = static_cast<std::uint32_t>(g.attacker_indices(i).size() + 1) + overshoot;
    const auto acc = random_scale(rng, top);
    const auto rej = random_scale(rng, top);
    scales.emplace_back(acc, rej);
  }
  return MmaFramework(g, std::move(scales));
}

namespace {

std::vector<ArgumentId> attacker_ids(const AttackGraph& g, std::size_t i) {
  std::vector<ArgumentId> out;
  for (auto x : g.attacker_indices(i)) out.push_back(g.argument(x));
  return out;
}

}  // namespace

AdfFramework random_adf(Rng& rng, const AttackGraph& g) {
  std::vector<ConditionTable> tables;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.attacker_indices(i).size();
    std::vector<Label> rows(*pow3(k));
    for (auto& r : rows) r = rng.label();
    tables.emplace_back(g.argument(i), attacker_ids(g, i), std::move(rows), k);
  }
  return AdfFramework(g, std::move(tables));
}

AdfFramework random_concretisation(Rng& rng, const MmaFramework& mma) {
  const auto& g = mma.graph();
  std::vector<ConditionTable> tables;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.attacker_indices(i).size();
    std::vector<Label> rows(*pow3(k));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t outs = 0;
      std::uint32_t ins = 0;
      for (Label l : ConditionTable::row_key(r, k)) {
        outs += l == Label::out;
        ins += l == Label::in;
      }
      const auto choices = mma.designations_for_counts(i, outs, ins).members();
      rows[r] = choices[rng.below(choices.size())];
    }
    tables.emplace_back(g.argument(i), attacker_ids(g, i), std::move(rows), k);
  }
  return AdfFramework(g, std::move(tables));
}

MmaFramework random_loosening(Rng& rng, const MmaFramework& mma, std::uint32_t max_step) {
  auto loosen = [&](MayMustScale s) {
    const auto down = static_cast<std::uint32_t>(rng.between(0, std::min(max_step, s.may)));
    const auto up = static_cast<std::uint32_t>(rng.between(0, max_step));
    return MayMustScale(s.may - down, s.must + up);
  };
  std::vector<NuanceTuple> scales;
  for (const auto& q : mma.scales()) scales.emplace_back(loosen(q.acceptance), loosen(q.rejection));
  return MmaFramework(mma.graph(), std::move(scales));
}

}  // namespace mmadf
