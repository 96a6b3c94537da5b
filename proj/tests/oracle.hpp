#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the written conditions, labelling by labelling, and share no code
// path with the library beyond its data types.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mmadf/adf.hpp"
#include "mmadf/mma.hpp"
#include "mmadf/semantics.hpp"

namespace oracle {

using mmadf::AdfFramework;
using mmadf::ArgumentId;
using mmadf::Label;
using mmadf::Labelling;
using mmadf::LabellingSet;
using mmadf::MmaFramework;
using mmadf::NuanceTuple;

inline constexpr Label kLabels[3] = {Label::in, Label::out, Label::undec};

/// Every labelling over `names` (3^n of them).
inline std::vector<Labelling> all_labellings(const std::vector<ArgumentId>& names) {
  std::vector<Labelling> out;
  std::function<void(std::size_t, Labelling::Map&)> rec = [&](std::size_t i,
                                                               Labelling::Map& m) {
    if (i == names.size()) {
      out.emplace_back(m);
      return;
    }
    for (Label l : kLabels) {
      m[names[i]] = l;
      rec(i + 1, m);
    }
    m.erase(names[i]);
  };
  Labelling::Map m;
  rec(0, m);
  return out;
}

inline bool leq(const Labelling& x, const Labelling& y) {
  for (const auto& [a, l] : x.values()) {
    const Label r = y.values().at(a);
    if (l == Label::in && r != Label::in) return false;
    if (l == Label::out && r != Label::out) return false;
  }
  return true;
}

/// Maximal elements above `l` by filtering the full enumeration.
inline LabellingSet maximal_above(const Labelling& l) {
  std::vector<ArgumentId> names;
  for (const auto& [a, x] : l.values()) names.push_back(a);
  const auto all = all_labellings(names);
  LabellingSet out;
  for (const auto& c : all) {
    if (!leq(l, c)) continue;
    bool maximal = true;
    for (const auto& d : all) {
      if (leq(c, d) && !leq(d, c)) maximal = false;
    }
    if (maximal) out.insert(c);
  }
  return out;
}

/// Designation straight from the written conditions: in iff may-a and not
/// must-r; out iff may-r and not must-a; undec iff must-a and must-r, or
/// may_s-a, or may_s-r, or not-a and not-r.
inline std::set<Label> designate(const NuanceTuple& q, std::uint32_t outs, std::uint32_t ins) {
  const auto [n1, n2] = std::pair{q.acceptance.may, q.acceptance.must};
  const auto [m1, m2] = std::pair{q.rejection.may, q.rejection.must};
  const bool may_a = n1 <= outs;
  const bool must_a = n2 <= outs;
  const bool mays_a = n1 <= outs && outs < n2;
  const bool not_a = outs < n1;
  const bool may_r = m1 <= ins;
  const bool must_r = m2 <= ins;
  const bool mays_r = m1 <= ins && ins < m2;
  const bool not_r = ins < m1;
  std::set<Label> out;
  if (may_a && !must_r) out.insert(Label::in);
  if (may_r && !must_a) out.insert(Label::out);
  if ((must_a && must_r) || mays_a || mays_r || (not_a && not_r)) out.insert(Label::undec);
  return out;
}

inline std::pair<std::uint32_t, std::uint32_t> counts(const MmaFramework& f, const Labelling& l,
                                                      const ArgumentId& a) {
  std::uint32_t outs = 0;
  std::uint32_t ins = 0;
  for (const auto& [s, d] : f.graph().attacks()) {
    if (f.graph().argument(d) != a) continue;
    const Label x = l.values().at(f.graph().argument(s));
    outs += x == Label::out;
    ins += x == Label::in;
  }
  return {outs, ins};
}

inline std::set<Label> designate(const MmaFramework& f, const Labelling& l, const ArgumentId& a) {
  const auto [outs, ins] = counts(f, l, a);
  return designate(f.scale(a), outs, ins);
}

inline Label designate(const AdfFramework& f, const Labelling& l, const ArgumentId& a) {
  const auto& t = f.table(a);
  // Look the row up by scanning keys rather than computing its index.
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const auto key = mmadf::ConditionTable::row_key(r, t.arity());
    bool match = true;
    for (std::size_t j = 0; j < key.size(); ++j) {
      match = match && l.values().at(t.attacker_order()[j]) == key[j];
    }
    if (match) return t.rows()[r];
  }
  throw std::logic_error("no row");
}

inline std::set<Label> designate(const mmadf::Framework& f, const Labelling& l,
                                 const ArgumentId& a) {
  if (const auto* m = std::get_if<MmaFramework>(&f)) return designate(*m, l, a);
  return {designate(std::get<AdfFramework>(f), l, a)};
}

inline LabellingSet exact(const mmadf::Framework& f) {
  const auto& g = mmadf::graph_of(f);
  LabellingSet out;
  for (const auto& l : all_labellings(g.arguments())) {
    bool ok = true;
    for (const auto& a : g.arguments()) ok = ok && designate(f, l, a).contains(l.values().at(a));
    if (ok) out.insert(l);
  }
  return out;
}

inline Labelling theta(const mmadf::Framework& f, const Labelling& l) {
  Labelling::Map m;
  const auto completions = maximal_above(l);
  for (const auto& [a, x] : l.values()) {
    Label result = Label::undec;
    for (Label d : {Label::in, Label::out}) {
      bool all = true;
      for (const auto& c : completions) all = all && designate(f, c, a) == std::set<Label>{d};
      if (all) result = d;
    }
    m[a] = result;
  }
  return Labelling(m);
}

inline Labelling grounded(const mmadf::Framework& f) {
  Labelling l = Labelling::uniform(mmadf::graph_of(f), Label::undec);
  while (true) {
    auto next = oracle::theta(f, l);
    if (next == l) return l;
    l = next;
  }
}

/// Conditions 1-10 of the abstraction definition, checked as written.
inline bool fits(const mmadf::ConditionTable& t, const NuanceTuple& q) {
  const auto k = t.arity();
  const auto [n1, n2] = std::pair{q.acceptance.may, q.acceptance.must};
  const auto [m1, m2] = std::pair{q.rejection.may, q.rejection.must};
  if (!(n1 <= n2 && n2 <= k + 1 && m1 <= m2 && m2 <= k + 1)) return false;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const auto key = mmadf::ConditionTable::row_key(r, k);
    std::uint32_t o = 0;
    std::uint32_t i = 0;
    for (Label x : key) {
      o += x == Label::out;
      i += x == Label::in;
    }
    const Label c = t.rows()[r];
    const bool in_or_undec = c == Label::in || c == Label::undec;
    const bool out_or_undec = c == Label::out || c == Label::undec;
    if (o < n1 && i < m1 && c != Label::undec) return false;
    if (n1 <= o && o < n2 && i < m1 && !in_or_undec) return false;
    if (n2 <= o && i < m1 && c != Label::in) return false;
    if (o < n1 && m1 <= i && i < m2 && !out_or_undec) return false;
    // both strictly-may: anything goes
    if (n2 <= o && m1 <= i && i < m2 && !in_or_undec) return false;
    if (o < n1 && m2 <= i && c != Label::out) return false;
    if (n1 <= o && o < n2 && m2 <= i && !out_or_undec) return false;
    if (n2 <= o && m2 <= i && c != Label::undec) return false;
  }
  return true;
}

/// Every ordered quadruple within 0..k+1 that fits.
inline std::vector<NuanceTuple> scales_for(const mmadf::ConditionTable& t) {
  const auto top = static_cast<std::uint32_t>(t.arity() + 1);
  std::vector<NuanceTuple> out;
  for (std::uint32_t a = 0; a <= top; ++a)
    for (std::uint32_t b = a; b <= top; ++b)
      for (std::uint32_t c = 0; c <= top; ++c)
        for (std::uint32_t d = c; d <= top; ++d)
          if (fits(t, NuanceTuple(a, b, c, d))) out.emplace_back(a, b, c, d);
  return out;
}

inline bool tighter(const NuanceTuple& x, const NuanceTuple& y) {
  return y.acceptance.may <= x.acceptance.may && x.acceptance.must <= y.acceptance.must &&
         y.rejection.may <= x.rejection.may && x.rejection.must <= y.rejection.must;
}

/// Minimal abstractions by enumerating whole frameworks: every combination
/// of fitting scales, then keeping those with no strictly smaller one.
inline std::set<MmaFramework> minimal_abstractions(const AdfFramework& adf) {
  const auto& g = adf.graph();
  std::vector<std::vector<NuanceTuple>> per;
  for (const auto& t : adf.tables()) per.push_back(scales_for(t));
  std::vector<MmaFramework> all;
  std::vector<NuanceTuple> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per.size()) {
      all.emplace_back(g, cur);
      return;
    }
    for (const auto& q : per[i]) {
      cur.push_back(q);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  auto below = [&](const MmaFramework& x, const MmaFramework& y) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (!tighter(x.scale(a), y.scale(a))) return false;
    }
    return true;
  };
  std::set<MmaFramework> out;
  for (const auto& m : all) {
    bool minimal = true;
    for (const auto& o : all) {
      if (!(o == m) && below(o, m)) minimal = false;
    }
    if (minimal) out.insert(m);
  }
  return out;
}

}  // namespace oracle
