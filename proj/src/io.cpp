#include "mmadf/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace mmadf {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t expected_tokens(const std::string& keyword) {
  if (keyword == "arg") return 2;
  if (keyword == "att") return 3;
  if (keyword == "scale") return 6;
  if (keyword == "cond") return 4;
  return 0;
}

std::uint32_t parse_count(const Statement& s, const std::string& token) {
  std::uint32_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(s.line, "expected a natural number, got '" + token + "'");
  }
  return value;
}

ArgumentId parse_name(const Statement& s, const std::string& token) {
  if (!ArgumentId::is_valid_name(token)) {
    throw ParseError(s.line, "invalid argument name '" + token + "'");
  }
  return ArgumentId(token);
}

Label parse_label_token(const Statement& s, std::string_view token) {
  auto l = parse_label(token);
  if (!l) throw ParseError(s.line, "unknown label '" + std::string(token) + "'");
  return *l;
}

std::vector<Label> parse_label_vector(const Statement& s, const std::string& token) {
  std::vector<Label> out;
  if (token == "-") return out;
  std::size_t i = 0;
  while (true) {
    const auto j = token.find(',', i);
    out.push_back(parse_label_token(s, std::string_view(token).substr(i, j - i)));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

std::string key_text(const std::vector<Label>& key) {
  if (key.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ',';
    s += to_string(key[i]);
  }
  return s;
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
  InstanceDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const auto& kw = tokens[0];
    if (kw == "mma" || kw == "adf") {
      if (have_header) throw ParseError(line_no, "header repeated");
      if (tokens.size() != 1) throw ParseError(line_no, "header takes no operands");
      doc.kind = kw == "mma" ? FrameworkKind::mma : FrameworkKind::adf;
      doc.header_line = line_no;
      have_header = true;
    } else {
      const auto n = expected_tokens(kw);
      if (n == 0) throw ParseError(line_no, "unknown statement '" + kw + "'");
      if (!have_header) throw ParseError(line_no, "statement before the mma/adf header");
      if (tokens.size() != n) {
        throw ParseError(line_no, "'" + kw + "' takes " + std::to_string(n - 1) +
                                      " operand(s), got " + std::to_string(tokens.size() - 1));
      }
      if (kw == "scale" && doc.kind != FrameworkKind::mma) {
        throw ParseError(line_no, "'scale' statement in an adf document");
      }
      if (kw == "cond" && doc.kind != FrameworkKind::adf) {
        throw ParseError(line_no, "'cond' statement in an mma document");
      }
      doc.statements.push_back({line_no, std::move(tokens)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing mma/adf header");
  return doc;
}

Framework build_framework(const InstanceDocument& doc, const Limits& limits) {
  std::vector<ArgumentId> args;
  std::map<ArgumentId, std::size_t> declared_at;
  std::vector<std::pair<ArgumentId, ArgumentId>> attacks;
  std::set<std::pair<ArgumentId, ArgumentId>> seen_attacks;

  auto declared = [&](const Statement& s, const std::string& token) {
    auto a = parse_name(s, token);
    if (!declared_at.contains(a)) {
      throw ParseError(s.line, "undeclared argument '" + token + "'");
    }
    return a;
  };

  for (const auto& s : doc.statements) {
    const auto& kw = s.tokens[0];
    if (kw == "arg") {
      auto a = parse_name(s, s.tokens[1]);
      if (!declared_at.emplace(a, s.line).second) {
        throw ParseError(s.line, "argument '" + a.name() + "' declared twice");
      }
      args.push_back(std::move(a));
    } else if (kw == "att") {
      auto src = declared(s, s.tokens[1]);
      auto dst = declared(s, s.tokens[2]);
      if (!seen_attacks.emplace(src, dst).second) {
        throw ParseError(s.line, "duplicate attack " + src.name() + " -> " + dst.name());
      }
      attacks.emplace_back(std::move(src), std::move(dst));
    }
  }
  AttackGraph graph(args, attacks);

  if (doc.kind == FrameworkKind::mma) {
    std::vector<std::optional<NuanceTuple>> scales(graph.size());
    for (const auto& s : doc.statements) {
      if (s.tokens[0] != "scale") continue;
      const auto i = graph.index_of(declared(s, s.tokens[1]));
      if (scales[i]) {
        throw ParseError(s.line, "second scale for '" + s.tokens[1] + "'");
      }
      const auto n1 = parse_count(s, s.tokens[2]);
      const auto n2 = parse_count(s, s.tokens[3]);
      const auto m1 = parse_count(s, s.tokens[4]);
      const auto m2 = parse_count(s, s.tokens[5]);
      if (n1 > n2) {
        throw ParseError(s.line, "scale violation: acceptance may " + std::to_string(n1) +
                                     " exceeds must " + std::to_string(n2));
      }
      if (m1 > m2) {
        throw ParseError(s.line, "scale violation: rejection may " + std::to_string(m1) +
                                     " exceeds must " + std::to_string(m2));
      }
      scales[i] = NuanceTuple(n1, n2, m1, m2);
    }
    std::vector<NuanceTuple> out;
    for (std::size_t i = 0; i < graph.size(); ++i) {
      if (!scales[i]) {
        throw ParseError(declared_at.at(graph.argument(i)),
                         "missing scale for '" + graph.argument(i).name() + "'");
      }
      out.push_back(*scales[i]);
    }
    return MmaFramework(std::move(graph), std::move(out));
  }

  std::vector<std::vector<std::pair<ConditionTable::Key, Label>>> entries(graph.size());
  std::vector<std::map<ConditionTable::Key, std::size_t>> row_lines(graph.size());
  for (const auto& s : doc.statements) {
    if (s.tokens[0] != "cond") continue;
    const auto i = graph.index_of(declared(s, s.tokens[1]));
    auto key = parse_label_vector(s, s.tokens[2]);
    const auto k = graph.attacker_indices(i).size();
    if (key.size() != k) {
      throw ParseError(s.line, "label vector for '" + s.tokens[1] + "' has " +
                                   std::to_string(key.size()) + " label(s), but it has " +
                                   std::to_string(k) + " attacker(s)");
    }
    const auto result = parse_label_token(s, s.tokens[3]);
    if (auto [it, fresh] = row_lines[i].emplace(key, s.line); !fresh) {
      throw ParseError(s.line, "duplicate cond row " + key_text(key) + " for '" + s.tokens[1] +
                                   "' (first on line " + std::to_string(it->second) + ")");
    }
    entries[i].emplace_back(std::move(key), result);
  }

  std::vector<ConditionTable> tables;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& a = graph.argument(i);
    std::vector<ArgumentId> order;
    for (auto x : graph.attacker_indices(i)) order.push_back(graph.argument(x));
    const auto k = order.size();
    if (k > limits.max_attackers) {
      throw ResourceLimit("argument '" + a.name() + "' has " + std::to_string(k) +
                          " attackers, above the cap of " + std::to_string(limits.max_attackers));
    }
    const auto rows = *pow3(k);
    if (entries[i].size() != rows) {
      for (std::size_t r = 0; r < rows; ++r) {
        auto key = ConditionTable::row_key(r, k);
        if (!row_lines[i].contains(key)) {
          const auto line = row_lines[i].empty() ? declared_at.at(a)
                                                 : row_lines[i].begin()->second;
          throw ParseError(line, "missing cond row " + key_text(key) + " for '" + a.name() +
                                     "' (" + std::to_string(entries[i].size()) + " of " +
                                     std::to_string(rows) + " rows given)");
        }
      }
    }
    tables.push_back(ConditionTable::from_entries(a, std::move(order), entries[i],
                                                  limits.max_attackers));
  }
  return AdfFramework(std::move(graph), std::move(tables));
}

Framework parse(std::string_view text, const Limits& limits) {
  return build_framework(parse_document(text), limits);
}

namespace {

void write_graph(std::ostringstream& out, const AttackGraph& g) {
  for (const auto& a : g.arguments()) out << "arg " << a.name() << '\n';
  for (const auto& [s, d] : g.attacks()) {
    out << "att " << g.argument(s).name() << ' ' << g.argument(d).name() << '\n';
  }
}

}  // namespace

std::string serialize(const MmaFramework& f) {
  std::ostringstream out;
  out << "mma\n";
  write_graph(out, f.graph());
  for (std::size_t i = 0; i < f.graph().size(); ++i) {
    const auto& q = f.scale(i);
    out << "scale " << f.graph().argument(i).name() << ' ' << q.acceptance.may << ' '
        << q.acceptance.must << ' ' << q.rejection.may << ' ' << q.rejection.must << '\n';
  }
  return out.str();
}

std::string serialize(const AdfFramework& f) {
  std::ostringstream out;
  out << "adf\n";
  write_graph(out, f.graph());
  for (const auto& t : f.tables()) {
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
      out << "cond " << t.owner().name() << ' ' << key_text(ConditionTable::row_key(r, t.arity()))
          << ' ' << to_string(t.rows()[r]) << '\n';
    }
  }
  return out.str();
}

std::string serialize(const Framework& f) {
  return std::visit([](const auto& x) { return serialize(x); }, f);
}

std::string format_labellings(const LabellingSet& set) {
  std::vector<std::string> lines;
  for (const auto& l : set) lines.push_back(to_string(l));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  out += "# count: " + std::to_string(set.size()) + '\n';
  return out;
}

std::string format_transfer_report(const TransferReport& report) {
  std::ostringstream out;
  const auto& g = report.abstraction.graph();
  out << "# abstraction:";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << ' ' << g.argument(i).name() << '=' << to_string(report.abstraction.scale(i));
  }
  out << '\n';

  std::vector<std::string> exact;
  for (const auto& l : report.certified_exact) exact.push_back(to_string(l));
  std::sort(exact.begin(), exact.end());
  for (const auto& line : exact) out << "certified: exact-labelling " << line << '\n';
  out << "certified: grounded-bound " << to_string(report.grounded_bound) << '\n';

  bool conditional = false;
  for (const auto& fact : report.facts) {
    conditional = conditional || fact.status == FactStatus::conditional;
    out << (fact.status == FactStatus::certified ? "certified: " : "conditional: ")
        << (fact.semantics == SemanticsKind::exact ? "exact " : "grounded ")
        << (fact.mode.quantifier == Quantifier::credulous ? "credulous " : "skeptical ")
        << to_string(fact.mode.target) << ' ' << fact.argument.name() << '\n';
  }
  if (conditional) {
    out << "# conditional facts hold if the ADF has exactly " << report.condition_exact_count
        << " exact labelling(s)\n";
  }
  return out.str();
}

}  // namespace mmadf
