#include "mmadf/adf.hpp"

#include <string>

namespace mmadf {

namespace {

std::size_t checked_row_count(const ArgumentId& owner, std::size_t arity,
                              std::size_t max_attackers) {
  if (arity > max_attackers) {
    throw ResourceLimit("condition table of '" + owner.name() + "' needs " +
                        std::to_string(arity) + " attackers, above the cap of " +
                        std::to_string(max_attackers));
  }
  auto n = pow3(arity);
  if (!n) throw ResourceLimit("condition table too large");
  return *n;
}

}  // namespace

ConditionTable::ConditionTable(ArgumentId owner, std::vector<ArgumentId> attacker_order,
                               std::vector<Label> rows, std::size_t max_attackers)
    : owner_(std::move(owner)),
      attacker_order_(std::move(attacker_order)),
      rows_(std::move(rows)) {
  const auto expected = checked_row_count(owner_, attacker_order_.size(), max_attackers);
  if (rows_.size() != expected) {
    throw InvalidFramework("condition table of '" + owner_.name() + "' has " +
                           std::to_string(rows_.size()) + " rows, expected " +
                           std::to_string(expected));
  }
}

ConditionTable ConditionTable::from_entries(ArgumentId owner,
                                            std::vector<ArgumentId> attacker_order,
                                            const std::vector<std::pair<Key, Label>>& entries,
                                            std::size_t max_attackers) {
  const auto k = attacker_order.size();
  const auto n = checked_row_count(owner, k, max_attackers);
  std::vector<Label> rows(n, Label::undec);
  std::vector<bool> seen(n, false);
  for (const auto& [key, result] : entries) {
    if (key.size() != k) {
      throw InvalidFramework("row of '" + owner.name() + "' has " + std::to_string(key.size()) +
                             " labels, expected " + std::to_string(k));
    }
    const auto i = row_index(key);
    if (seen[i]) throw InvalidFramework("duplicate row in the table of '" + owner.name() + "'");
    seen[i] = true;
    rows[i] = result;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw InvalidFramework("missing row in the table of '" + owner.name() + "'");
  }
  return ConditionTable(std::move(owner), std::move(attacker_order), std::move(rows),
                        max_attackers);
}

ConditionTable ConditionTable::constant(ArgumentId owner, std::vector<ArgumentId> attacker_order,
                                        Label result, std::size_t max_attackers) {
  const auto n = checked_row_count(owner, attacker_order.size(), max_attackers);
  return ConditionTable(std::move(owner), std::move(attacker_order),
                        std::vector<Label>(n, result), max_attackers);
}

std::size_t ConditionTable::row_index(std::span<const Label> key) noexcept {
  std::size_t i = 0;
  for (Label l : key) i = i * 3 + static_cast<std::size_t>(l);
  return i;
}

ConditionTable::Key ConditionTable::row_key(std::size_t index, std::size_t arity) {
  Key key(arity, Label::in);
  for (std::size_t j = arity; j > 0; --j) {
    key[j - 1] = static_cast<Label>(index % 3);
    index /= 3;
  }
  return key;
}

Label ConditionTable::operator()(std::span<const Label> key) const {
  if (key.size() != arity()) {
    throw DomainMismatch("row key of wrong arity for '" + owner_.name() + "'");
  }
  return rows_[row_index(key)];
}

Label ConditionTable::operator()(const Labelling& l) const {
  Key key;
  key.reserve(arity());
  for (const auto& a : attacker_order_) key.push_back(l.at(a));
  return (*this)(key);
}

AdfFramework::AdfFramework(AttackGraph graph, std::vector<ConditionTable> tables)
    : graph_(std::move(graph)), tables_(std::move(tables)) {
  if (tables_.size() != graph_.size()) {
    throw InvalidFramework("an ADF needs exactly one condition table per argument");
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& t = tables_[i];
    if (!(t.owner() == graph_.argument(i))) {
      throw InvalidFramework("condition table for '" + t.owner().name() +
                             "' placed at argument '" + graph_.argument(i).name() + "'");
    }
    const auto& att = graph_.attacker_indices(i);
    bool same = att.size() == t.arity();
    for (std::size_t j = 0; same && j < att.size(); ++j) {
      same = graph_.argument(att[j]) == t.attacker_order()[j];
    }
    if (!same) {
      throw InvalidFramework("attacker order of the table of '" + t.owner().name() +
                             "' differs from the graph");
    }
  }
}

AdfFramework AdfFramework::with_table(AttackGraph::Index i, ConditionTable t) const {
  auto tables = tables_;
  tables.at(i) = std::move(t);
  return AdfFramework(graph_, std::move(tables));
}

Label AdfFramework::designation(AttackGraph::Index a, std::span<const Label> dense) const {
  std::size_t row = 0;
  for (auto x : graph_.attacker_indices(a)) row = row * 3 + static_cast<std::size_t>(dense[x]);
  return tables_[a].rows()[row];
}

Label designation_adf(const AdfFramework& f, const Labelling& l, const ArgumentId& a) {
  return f.table(a)(l);
}

bool is_proper_adf(const AdfFramework& f, const Labelling& l, const ArgumentId& a) {
  const auto own = l.get(a);
  if (!own) return false;
  for (const auto& x : f.table(a).attacker_order()) {
    if (!l.defined(x)) return false;
  }
  return designation_adf(f, l, a) == *own;
}

bool is_exact_adf(const AdfFramework& f, const Labelling& l) {
  const auto dense = l.to_dense(f.graph());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (f.designation(i, dense) != dense[i]) return false;
  }
  return true;
}

}  // namespace mmadf
