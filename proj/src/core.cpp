#include "mmadf/core.hpp"

#include <algorithm>
#include <limits>

namespace mmadf {

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::in:
      return "in";
    case Label::out:
      return "out";
    case Label::undec:
      return "undec";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view text) noexcept {
  if (text == "in") return Label::in;
  if (text == "out") return Label::out;
  if (text == "undec") return Label::undec;
  return std::nullopt;
}

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw InvalidFramework("invalid argument name '" + name_ + "'");
  }
}

bool ArgumentId::is_valid_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::optional<Label> LabelSet::single() const {
  if (size() != 1) return std::nullopt;
  for (Label l : kAllLabels) {
    if (contains(l)) return l;
  }
  return std::nullopt;
}

std::vector<Label> LabelSet::members() const {
  std::vector<Label> out;
  for (Label l : kAllLabels) {
    if (contains(l)) out.push_back(l);
  }
  return out;
}

std::string to_string(LabelSet set) {
  std::string s = "{";
  bool first = true;
  for (Label l : set.members()) {
    if (!first) s += ",";
    s += to_string(l);
    first = false;
  }
  return s + "}";
}

AttackGraph::AttackGraph(std::vector<ArgumentId> arguments,
                         std::vector<std::pair<ArgumentId, ArgumentId>> attacks)
    : arguments_(std::move(arguments)) {
  for (Index i = 0; i < arguments_.size(); ++i) {
    if (!index_.emplace(arguments_[i], i).second) {
      throw InvalidFramework("duplicate argument '" + arguments_[i].name() + "'");
    }
  }
  attackers_.resize(arguments_.size());
  std::set<Attack> seen;
  for (const auto& [src, dst] : attacks) {
    const Index s = index_of(src);
    const Index d = index_of(dst);
    if (!seen.emplace(s, d).second) {
      throw InvalidFramework("duplicate attack " + src.name() + " -> " + dst.name());
    }
    attacks_.emplace_back(s, d);
    attackers_[d].push_back(s);
  }
}

AttackGraph AttackGraph::from_names(
    std::initializer_list<std::string_view> arguments,
    std::initializer_list<std::pair<std::string_view, std::string_view>> attacks) {
  std::vector<ArgumentId> args;
  for (auto name : arguments) args.emplace_back(std::string(name));
  std::vector<std::pair<ArgumentId, ArgumentId>> atts;
  for (const auto& [s, d] : attacks) {
    atts.emplace_back(ArgumentId(std::string(s)), ArgumentId(std::string(d)));
  }
  return AttackGraph(std::move(args), std::move(atts));
}

bool AttackGraph::contains(const ArgumentId& a) const { return index_.contains(a); }

std::optional<AttackGraph::Index> AttackGraph::find(const ArgumentId& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AttackGraph::Index AttackGraph::index_of(const ArgumentId& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw UnknownArgument("unknown argument '" + a.name() + "'");
  return it->second;
}

std::vector<ArgumentId> attackers(const AttackGraph& g, const ArgumentId& a) {
  std::vector<ArgumentId> out;
  for (auto i : g.attacker_indices(g.index_of(a))) out.push_back(g.argument(i));
  return out;
}

Labelling::Labelling(std::initializer_list<std::pair<std::string_view, Label>> entries) {
  for (const auto& [name, label] : entries) {
    if (!values_.emplace(ArgumentId(std::string(name)), label).second) {
      throw DomainMismatch("argument '" + std::string(name) + "' labelled twice");
    }
  }
}

Labelling Labelling::from_dense(const AttackGraph& g, std::span<const Label> labels) {
  if (labels.size() != g.size()) {
    throw DomainMismatch("dense labelling has wrong length");
  }
  Map m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(g.argument(i), labels[i]);
  return Labelling(std::move(m));
}

Labelling Labelling::uniform(const AttackGraph& g, Label label) {
  std::vector<Label> dense(g.size(), label);
  return from_dense(g, dense);
}

std::optional<Label> Labelling::get(const ArgumentId& a) const {
  auto it = values_.find(a);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Label Labelling::at(const ArgumentId& a) const {
  auto it = values_.find(a);
  if (it == values_.end()) {
    throw DomainMismatch("labelling undefined for '" + a.name() + "'");
  }
  return it->second;
}

std::set<ArgumentId> Labelling::domain() const {
  std::set<ArgumentId> d;
  for (const auto& [a, l] : values_) d.insert(a);
  return d;
}

bool Labelling::same_domain(const Labelling& other) const {
  return std::equal(values_.begin(), values_.end(), other.values_.begin(),
                    other.values_.end(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

bool Labelling::has_domain(const AttackGraph& g) const {
  if (values_.size() != g.size()) return false;
  return std::all_of(g.arguments().begin(), g.arguments().end(),
                     [&](const ArgumentId& a) { return values_.contains(a); });
}

std::vector<Label> Labelling::to_dense(const AttackGraph& g) const {
  if (!has_domain(g)) {
    throw DomainMismatch("labelling domain differs from the framework's arguments");
  }
  std::vector<Label> dense;
  dense.reserve(g.size());
  for (const auto& a : g.arguments()) dense.push_back(values_.at(a));
  return dense;
}

std::string to_string(const Labelling& l) {
  std::string s;
  for (const auto& [a, label] : l.values()) {
    if (!s.empty()) s += ' ';
    s += a.name();
    s += '=';
    s += to_string(label);
  }
  return s;
}

namespace {

bool label_leq(Label x, Label y) { return x == Label::undec || x == y; }

}  // namespace

bool labelling_leq(const Labelling& lhs, const Labelling& rhs) {
  if (!lhs.same_domain(rhs)) {
    throw DomainMismatch("information order needs labellings over one domain");
  }
  auto r = rhs.values().begin();
  for (const auto& [a, label] : lhs.values()) {
    if (!label_leq(label, (r++)->second)) return false;
  }
  return true;
}

bool labelling_leq(std::span<const Label> lhs, std::span<const Label> rhs) {
  if (lhs.size() != rhs.size()) {
    throw DomainMismatch("information order needs labellings over one domain");
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!label_leq(lhs[i], rhs[i])) return false;
  }
  return true;
}

LabellingSet maximal_completions(const Labelling& l) {
  std::vector<ArgumentId> names;
  std::vector<Label> dense;
  for (const auto& [a, label] : l.values()) {
    names.push_back(a);
    dense.push_back(label);
  }
  LabellingSet out;
  for_each_completion(dense, [&](std::span<const Label> c) {
    Labelling::Map m;
    for (std::size_t i = 0; i < c.size(); ++i) m.emplace(names[i], c[i]);
    out.emplace(std::move(m));
    return true;
  });
  return out;
}

Labelling restrict(const Labelling& l, const std::set<ArgumentId>& subset) {
  Labelling::Map m;
  for (const auto& a : subset) m.emplace(a, l.at(a));
  return Labelling(std::move(m));
}

std::optional<std::size_t> pow3(std::size_t k) noexcept {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / 3) return std::nullopt;
    r *= 3;
  }
  return r;
}

}  // namespace mmadf
