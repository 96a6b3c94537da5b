#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mmadf/core.hpp"

namespace mmadf {

/// Explicit acceptance condition of one argument: one label for each of the
/// 3^k labellings of its k attackers. Rows are stored in lexicographic key
/// order (in < out < undec, first attacker most significant).
class ConditionTable {
 public:
  using Key = std::vector<Label>;

  ConditionTable() = default;
  /// `rows` must hold exactly 3^k labels in key order.
  ConditionTable(ArgumentId owner, std::vector<ArgumentId> attacker_order,
                 std::vector<Label> rows, std::size_t max_attackers = Limits{}.max_attackers);

  /// Builds a table from explicit (key, result) entries; rejects duplicate,
  /// missing or wrongly sized keys.
  static ConditionTable from_entries(ArgumentId owner, std::vector<ArgumentId> attacker_order,
                                     const std::vector<std::pair<Key, Label>>& entries,
                                     std::size_t max_attackers = Limits{}.max_attackers);

  /// Table with the same result on every row.
  static ConditionTable constant(ArgumentId owner, std::vector<ArgumentId> attacker_order,
                                 Label result,
                                 std::size_t max_attackers = Limits{}.max_attackers);

  const ArgumentId& owner() const noexcept { return owner_; }
  const std::vector<ArgumentId>& attacker_order() const noexcept { return attacker_order_; }
  const std::vector<Label>& rows() const noexcept { return rows_; }
  std::size_t arity() const noexcept { return attacker_order_.size(); }

  static std::size_t row_index(std::span<const Label> key) noexcept;
  static Key row_key(std::size_t index, std::size_t arity);

  Label operator()(std::span<const Label> key) const;
  /// Result on the restriction of `l` to the attackers; throws
  /// DomainMismatch if some attacker is unlabelled.
  Label operator()(const Labelling& l) const;

  friend bool operator==(const ConditionTable&, const ConditionTable&) = default;
  friend auto operator<=>(const ConditionTable& x, const ConditionTable& y) {
    return x.rows_ <=> y.rows_;
  }

 private:
  ArgumentId owner_{"_"};
  std::vector<ArgumentId> attacker_order_;
  std::vector<Label> rows_{Label::undec};
};

class AdfFramework {
 public:
  AdfFramework() = default;
  /// `tables` is indexed like `graph.arguments()`; each table's owner and
  /// attacker order must match the graph.
  AdfFramework(AttackGraph graph, std::vector<ConditionTable> tables);

  const AttackGraph& graph() const noexcept { return graph_; }
  const std::vector<ConditionTable>& tables() const noexcept { return tables_; }
  const ConditionTable& table(AttackGraph::Index i) const { return tables_.at(i); }
  const ConditionTable& table(const ArgumentId& a) const { return tables_.at(graph_.index_of(a)); }

  AdfFramework with_table(AttackGraph::Index i, ConditionTable t) const;

  /// Designated label for argument `a` given a dense labelling in graph order.
  Label designation(AttackGraph::Index a, std::span<const Label> dense) const;

  friend bool operator==(const AdfFramework&, const AdfFramework&) = default;
  friend auto operator<=>(const AdfFramework& x, const AdfFramework& y) {
    return x.tables_ <=> y.tables_;
  }

 private:
  AttackGraph graph_;
  std::vector<ConditionTable> tables_;
};

Label designation_adf(const AdfFramework& f, const Labelling& l, const ArgumentId& a);

bool is_proper_adf(const AdfFramework& f, const Labelling& l, const ArgumentId& a);

bool is_exact_adf(const AdfFramework& f, const Labelling& l);

}  // namespace mmadf
