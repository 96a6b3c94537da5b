#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mmadf/core.hpp"

namespace mmadf {

/// Attacker-count thresholds (may, must) with may <= must.
struct MayMustScale {
  std::uint32_t may = 0;
  std::uint32_t must = 0;

  MayMustScale() = default;
  MayMustScale(std::uint32_t may_, std::uint32_t must_);

  friend bool operator==(const MayMustScale&, const MayMustScale&) = default;
  friend auto operator<=>(const MayMustScale&, const MayMustScale&) = default;
};

/// Acceptance scale (counts rejected attackers) and rejection scale
/// (counts accepted attackers).
struct NuanceTuple {
  MayMustScale acceptance;
  MayMustScale rejection;

  NuanceTuple() = default;
  NuanceTuple(MayMustScale acc, MayMustScale rej) : acceptance(acc), rejection(rej) {}
  NuanceTuple(std::uint32_t n1, std::uint32_t n2, std::uint32_t m1, std::uint32_t m2)
      : acceptance(n1, n2), rejection(m1, m2) {}

  friend bool operator==(const NuanceTuple&, const NuanceTuple&) = default;
  friend auto operator<=>(const NuanceTuple&, const NuanceTuple&) = default;
};

std::string to_string(const NuanceTuple& q);

/// Where a count falls relative to a scale.
enum class Condition : std::uint8_t { Not, Mays, Must };

std::string_view to_string(Condition c) noexcept;

struct ConditionPair {
  Condition acceptance;
  Condition rejection;

  friend bool operator==(const ConditionPair&, const ConditionPair&) = default;
};

inline constexpr Condition kAllConditions[3] = {Condition::Not, Condition::Mays,
                                                Condition::Must};

inline Condition classify_count(MayMustScale scale, std::uint32_t count) noexcept {
  if (count < scale.may) return Condition::Not;
  if (count < scale.must) return Condition::Mays;
  return Condition::Must;
}

/// Labels designated for a pair of satisfied conditions, derived from the
/// satisfaction rules: in needs may-a and no must-r, out needs may-r and no
/// must-a, undec needs must/must, not/not, or some strictly-may condition.
LabelSet designation_from_conditions(ConditionPair c) noexcept;

/// The same designation read off the 3x3 table indexed by (acceptance,
/// rejection). Kept separate so the two can be checked against each other.
LabelSet designation_table(ConditionPair c) noexcept;

using DesignationSet = LabelSet;

class MmaFramework {
 public:
  MmaFramework() = default;
  /// `scales` is indexed like `graph.arguments()`.
  MmaFramework(AttackGraph graph, std::vector<NuanceTuple> scales);

  const AttackGraph& graph() const noexcept { return graph_; }
  const std::vector<NuanceTuple>& scales() const noexcept { return scales_; }
  const NuanceTuple& scale(AttackGraph::Index i) const { return scales_.at(i); }
  const NuanceTuple& scale(const ArgumentId& a) const { return scales_.at(graph_.index_of(a)); }

  /// Copy with one argument's scale replaced.
  MmaFramework with_scale(AttackGraph::Index i, NuanceTuple q) const;

  /// Designation for argument `a` given labels of the whole argument set in
  /// graph order. Only the attackers' entries are read.
  DesignationSet designations(AttackGraph::Index a, std::span<const Label> dense) const;
  /// Designation from explicit (out-count, in-count).
  DesignationSet designations_for_counts(AttackGraph::Index a, std::uint32_t out_count,
                                         std::uint32_t in_count) const;
  ConditionPair classify_counts(AttackGraph::Index a, std::uint32_t out_count,
                                std::uint32_t in_count) const;

  friend bool operator==(const MmaFramework&, const MmaFramework&) = default;
  /// Orders frameworks over one graph by their scales.
  friend auto operator<=>(const MmaFramework& x, const MmaFramework& y) {
    return x.scales_ <=> y.scales_;
  }

 private:
  AttackGraph graph_;
  std::vector<NuanceTuple> scales_;
};

/// Human-readable notes about must-conditions no labelling can reach
/// (threshold above the number of attackers).
std::vector<std::string> scale_warnings(const MmaFramework& f);

/// Number of attackers of `a` that `l` maps to `target` (in or out).
std::uint32_t count_labelled(const MmaFramework& f, const Labelling& l,
                             const ArgumentId& a, Label target);

ConditionPair classify(const MmaFramework& f, const Labelling& l, const ArgumentId& a);

DesignationSet designations_mma(const MmaFramework& f, const Labelling& l,
                                const ArgumentId& a);

bool is_proper_mma(const MmaFramework& f, const Labelling& l, const ArgumentId& a);

bool is_exact_mma(const MmaFramework& f, const Labelling& l);

}  // namespace mmadf
