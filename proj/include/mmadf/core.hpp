#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmadf/error.hpp"

namespace mmadf {

/// Caps on enumeration sizes shared by every exponential routine.
struct Limits {
  std::size_t max_args = 12;
  std::size_t max_attackers = 10;
};

/// The three labels, declared in canonical order (in < out < undec).
enum class Label : std::uint8_t { in = 0, out = 1, undec = 2 };

inline constexpr std::size_t kLabelCount = 3;
inline constexpr Label kAllLabels[kLabelCount] = {Label::in, Label::out,
                                                  Label::undec};

std::string_view to_string(Label label) noexcept;
std::optional<Label> parse_label(std::string_view text) noexcept;

/// Name of an argument: a non-empty token over [A-Za-z0-9_].
class ArgumentId {
 public:
  explicit ArgumentId(std::string name);

  static bool is_valid_name(std::string_view name) noexcept;

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const ArgumentId&, const ArgumentId&) = default;
  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;

 private:
  std::string name_;
};

/// A small set of labels, stored as a bitmask. Iteration follows label order.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr LabelSet(std::initializer_list<Label> labels) {
    for (Label l : labels) insert(l);
  }

  static constexpr LabelSet all() { return {Label::in, Label::out, Label::undec}; }

  constexpr void insert(Label l) { bits_ |= bit(l); }
  constexpr bool contains(Label l) const { return (bits_ & bit(l)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>((bits_ & 1u) + ((bits_ >> 1) & 1u) +
                                    ((bits_ >> 2) & 1u));
  }
  constexpr bool is_subset_of(LabelSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// The unique member when size() == 1.
  std::optional<Label> single() const;
  std::vector<Label> members() const;
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  static constexpr std::uint8_t bit(Label l) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(l));
  }
  std::uint8_t bits_ = 0;
};

std::string to_string(LabelSet set);

/// Finite argument set with an attack relation. Arguments keep their
/// declaration order, which also fixes the order of attackers.
class AttackGraph {
 public:
  using Index = std::size_t;
  using Attack = std::pair<Index, Index>;

  AttackGraph() = default;
  AttackGraph(std::vector<ArgumentId> arguments,
              std::vector<std::pair<ArgumentId, ArgumentId>> attacks);

  /// Convenience constructor over raw names.
  static AttackGraph from_names(
      std::initializer_list<std::string_view> arguments,
      std::initializer_list<std::pair<std::string_view, std::string_view>> attacks);

  std::size_t size() const noexcept { return arguments_.size(); }
  const std::vector<ArgumentId>& arguments() const noexcept { return arguments_; }
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  const ArgumentId& argument(Index i) const { return arguments_.at(i); }

  bool contains(const ArgumentId& a) const;
  std::optional<Index> find(const ArgumentId& a) const;
  /// Throws UnknownArgument.
  Index index_of(const ArgumentId& a) const;

  /// Attackers of `target`, ordered by first occurrence of their attack.
  const std::vector<Index>& attacker_indices(Index target) const {
    return attackers_.at(target);
  }

  friend bool operator==(const AttackGraph& x, const AttackGraph& y) {
    return x.arguments_ == y.arguments_ && x.attacks_ == y.attacks_;
  }

 private:
  std::vector<ArgumentId> arguments_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<Index>> attackers_;
  std::map<ArgumentId, Index> index_;
};

std::vector<ArgumentId> attackers(const AttackGraph& g, const ArgumentId& a);

/// A labelling over an explicit finite domain. Entries iterate by argument
/// name, so the natural ordering of labellings is the canonical one
/// (by name, then in < out < undec).
class Labelling {
 public:
  using Map = std::map<ArgumentId, Label>;

  Labelling() = default;
  explicit Labelling(Map values) : values_(std::move(values)) {}
  Labelling(std::initializer_list<std::pair<std::string_view, Label>> entries);

  /// Labelling over all arguments of `g`, with labels given in graph order.
  static Labelling from_dense(const AttackGraph& g, std::span<const Label> labels);
  static Labelling uniform(const AttackGraph& g, Label label);

  std::size_t size() const noexcept { return values_.size(); }
  bool defined(const ArgumentId& a) const { return values_.contains(a); }
  std::optional<Label> get(const ArgumentId& a) const;
  /// Throws DomainMismatch when `a` is outside the domain.
  Label at(const ArgumentId& a) const;
  std::set<ArgumentId> domain() const;
  const Map& values() const noexcept { return values_; }

  bool same_domain(const Labelling& other) const;
  bool has_domain(const AttackGraph& g) const;

  /// Labels in graph order; throws DomainMismatch unless the domain is
  /// exactly the graph's argument set.
  std::vector<Label> to_dense(const AttackGraph& g) const;

  friend bool operator==(const Labelling&, const Labelling&) = default;
  friend auto operator<=>(const Labelling& x, const Labelling& y) {
    return x.values_ <=> y.values_;
  }

 private:
  Map values_;
};

/// Space-separated `name=label` pairs, sorted by name.
std::string to_string(const Labelling& l);

using LabellingSet = std::set<Labelling>;

/// Information order: every in/out commitment of `lhs` is kept by `rhs`.
bool labelling_leq(const Labelling& lhs, const Labelling& rhs);
bool labelling_leq(std::span<const Label> lhs, std::span<const Label> rhs);

/// All total in/out labellings above `l`.
LabellingSet maximal_completions(const Labelling& l);

/// Calls `visit` once per in/out completion of the dense labelling `l`.
/// The buffer passed to `visit` is reused between calls.
template <class Visit>
void for_each_completion(std::span<const Label> l, Visit&& visit) {
  std::vector<Label> current(l.begin(), l.end());
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == Label::undec) {
      open.push_back(i);
      current[i] = Label::in;
    }
  }
  const std::size_t n = open.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t j = 0; j < n; ++j) {
      current[open[j]] = ((mask >> (n - 1 - j)) & 1u) ? Label::out : Label::in;
    }
    if (!visit(std::span<const Label>(current))) return;
  }
}

/// Restriction of `l` to `subset`; throws DomainMismatch unless
/// `subset` is contained in the domain.
Labelling restrict(const Labelling& l, const std::set<ArgumentId>& subset);

/// Calls `visit` on every dense labelling over `n` positions, in
/// lexicographic order (in < out < undec, first position most significant).
template <class Visit>
void for_each_labelling(std::size_t n, Visit&& visit) {
  std::vector<Label> current(n, Label::in);
  while (true) {
    if (!visit(std::span<const Label>(current))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (current[i] != Label::undec) {
        current[i] = static_cast<Label>(static_cast<unsigned>(current[i]) + 1);
        break;
      }
      current[i] = Label::in;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// 3^k, or nullopt on overflow.
std::optional<std::size_t> pow3(std::size_t k) noexcept;

}  // namespace mmadf
