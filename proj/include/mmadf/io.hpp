#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mmadf/galois.hpp"
#include "mmadf/semantics.hpp"

namespace mmadf {

// Instance format, one statement per line, `#` comments:
//
//   mma | adf                      header, first statement
//   arg <name>
//   att <source> <target>
//   scale <arg> <n1> <n2> <m1> <m2>          (mma)
//   cond <arg> <l1,...,lk | -> <result>      (adf, attackers in attack order)

enum class FrameworkKind { mma, adf };

struct Statement {
  std::size_t line = 0;
  std::vector<std::string> tokens;  // tokens[0] is the keyword
};

/// A tokenised instance file: its header and the statements after it.
struct InstanceDocument {
  FrameworkKind kind = FrameworkKind::mma;
  std::size_t header_line = 0;
  std::vector<Statement> statements;
};

/// Tokenises and checks statement shapes; throws ParseError.
InstanceDocument parse_document(std::string_view text);

/// Resolves a document into a framework; throws ParseError with the line of
/// the offending statement, or ResourceLimit for tables above the cap.
Framework build_framework(const InstanceDocument& doc, const Limits& limits = {});

Framework parse(std::string_view text, const Limits& limits = {});

std::string serialize(const MmaFramework& f);
std::string serialize(const AdfFramework& f);
std::string serialize(const Framework& f);

/// One labelling per line, lines sorted, then `# count: N`.
std::string format_labellings(const LabellingSet& set);

std::string format_transfer_report(const TransferReport& report);

}  // namespace mmadf
