#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mmadf/galois.hpp"
#include "mmadf/io.hpp"
#include "mmadf/properties.hpp"
#include "mmadf/semantics.hpp"

namespace mmadf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string path;
  Framework framework;
};

Loaded load(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return {path, parse(text.str(), limits)};
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ": error: " +
                     std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  } catch (const InvalidFramework& e) {
    throw UsageError(path + ": error: " + e.what());
  }
}

const AdfFramework& expect_adf(const Loaded& f) {
  if (const auto* adf = std::get_if<AdfFramework>(&f.framework)) return *adf;
  throw UsageError(f.path + ": error: expected an adf document");
}

const MmaFramework& expect_mma(const Loaded& f) {
  if (const auto* mma = std::get_if<MmaFramework>(&f.framework)) return *mma;
  throw UsageError(f.path + ": error: expected an mma document");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"May-must argumentation and abstract dialectical frameworks"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--max-args", limits.max_args, "Cap on arguments for enumeration")
      ->capture_default_str();
  app.add_option("--max-attackers", limits.max_attackers, "Cap on attackers per argument")
      ->capture_default_str();

  std::string file;
  std::string second_file;

  auto* exact_cmd = app.add_subcommand("exact", "List all exact labellings");
  exact_cmd->add_option("file", file)->required();

  auto* grounded_cmd = app.add_subcommand("grounded", "Print the grounded labelling");
  grounded_cmd->add_option("file", file)->required();

  std::string arg_name;
  std::string mode_name;
  std::string label_name;
  std::string semantics_name = "exact";
  auto* accept_cmd = app.add_subcommand("accept", "Credulous or skeptical acceptance query");
  accept_cmd->add_option("file", file)->required();
  accept_cmd->add_option("--arg", arg_name)->required();
  accept_cmd->add_option("--mode", mode_name)
      ->required()
      ->check(CLI::IsMember({"credulous", "skeptical"}));
  accept_cmd->add_option("--label", label_name)->required()->check(CLI::IsMember({"in", "out"}));
  accept_cmd->add_option("--semantics", semantics_name)
      ->check(CLI::IsMember({"exact", "grounded"}))
      ->capture_default_str();

  bool all_minimal = false;
  auto* abstract_cmd = app.add_subcommand("abstract", "Minimal abstraction of an ADF");
  abstract_cmd->add_option("adf-file", file)->required();
  abstract_cmd->add_flag("--all-minimal", all_minimal, "Emit every minimal abstraction");

  bool want_count = false;
  bool want_canonical = false;
  std::optional<std::size_t> enumerate_limit;
  auto* concretize_cmd = app.add_subcommand("concretize", "Concretisations of an MMA");
  concretize_cmd->add_option("mma-file", file)->required();
  auto* count_flag = concretize_cmd->add_flag("--count", want_count, "Count concretisations");
  auto* canonical_flag =
      concretize_cmd->add_flag("--canonical", want_canonical, "Emit the canonical concretisation");
  auto* enumerate_opt = concretize_cmd->add_option("--enumerate", enumerate_limit,
                                                   "Emit the first N concretisations");
  auto* check_opt = concretize_cmd->add_option("--check", second_file,
                                               "Is the given ADF a concretisation?");
  count_flag->excludes(canonical_flag, enumerate_opt, check_opt);
  canonical_flag->excludes(enumerate_opt, check_opt);
  enumerate_opt->excludes(check_opt);

  auto* transfer_cmd = app.add_subcommand("transfer", "Facts about an ADF certified by abstraction");
  transfer_cmd->add_option("adf-file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "Parse and validate an instance");
  check_cmd->add_option("file", file)->required();

  std::uint64_t seed = 0;
  std::size_t fuzz_count = 100;
  std::size_t fuzz_max_args = 4;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the property suite on random instances");
  fuzz_cmd->add_option("--seed", seed)->required();
  fuzz_cmd->add_option("--count", fuzz_count)->capture_default_str();
  fuzz_cmd->add_option("--max-args", fuzz_max_args)->capture_default_str();

  std::vector<std::string> argv_store{"mmadf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (exact_cmd->parsed()) {
      out << format_labellings(exact_semantics(load(file, limits).framework, limits));
      return kYes;
    }
    if (grounded_cmd->parsed()) {
      out << to_string(grounded(load(file, limits).framework, limits)) << '\n';
      return kYes;
    }
    if (accept_cmd->parsed()) {
      const auto f = load(file, limits);
      if (!ArgumentId::is_valid_name(arg_name) || !graph_of(f.framework).contains(ArgumentId(arg_name))) {
        throw UsageError("unknown argument '" + arg_name + "'");
      }
      const AcceptanceMode mode{
          mode_name == "credulous" ? Quantifier::credulous : Quantifier::skeptical,
          label_name == "in" ? Label::in : Label::out};
      const auto kind =
          semantics_name == "exact" ? SemanticsKind::exact : SemanticsKind::adf_grounded;
      const bool yes = accepted(f.framework, ArgumentId(arg_name), kind, mode, limits);
      out << (yes ? "yes" : "no") << '\n';
      return yes ? kYes : kNo;
    }
    if (abstract_cmd->parsed()) {
      const auto f = load(file, limits);
      const auto& adf = expect_adf(f);
      if (!all_minimal) {
        out << serialize(least_minimal_abstraction(adf));
        return kYes;
      }
      const auto all = minimal_abstractions(adf, limits);
      for (std::size_t i = 0; i < all.size(); ++i) {
        out << "# minimal abstraction " << i + 1 << " of " << all.size() << '\n'
            << serialize(all[i]);
      }
      return kYes;
    }
    if (concretize_cmd->parsed()) {
      const auto f = load(file, limits);
      const auto& mma = expect_mma(f);
      if (want_count) {
        const auto count = count_concretisations(mma, limits);
        for (const auto& [a, factor] : count.factors) {
          out << "factor " << a.name() << ' ' << factor.str() << '\n';
        }
        out << "total " << count.total.str() << '\n';
        return kYes;
      }
      if (want_canonical) {
        out << serialize(canonical_concretisation(mma, limits));
        return kYes;
      }
      if (enumerate_limit) {
        if (*enumerate_limit == 0) throw UsageError("--enumerate needs N >= 1");
        const auto all = enumerate_concretisations(mma, *enumerate_limit, limits);
        for (std::size_t i = 0; i < all.size(); ++i) {
          out << "# concretisation " << i + 1 << '\n' << serialize(all[i]);
        }
        return kYes;
      }
      if (!second_file.empty()) {
        const auto other = load(second_file, limits);
        const auto& adf = expect_adf(other);
        if (!(adf.graph() == mma.graph())) {
          throw UsageError("the two documents declare different attack graphs");
        }
        const bool yes = is_concretisation(adf, mma);
        out << (yes ? "yes" : "no") << '\n';
        return yes ? kYes : kNo;
      }
      throw UsageError("concretize needs one of --count, --canonical, --enumerate N, --check FILE");
    }
    if (transfer_cmd->parsed()) {
      const auto f = load(file, limits);
      out << format_transfer_report(transfer_report(expect_adf(f), limits));
      return kYes;
    }
    if (check_cmd->parsed()) {
      const auto f = load(file, limits);
      const auto& g = graph_of(f.framework);
      const bool is_mma = std::holds_alternative<MmaFramework>(f.framework);
      if (is_mma) {
        for (const auto& w : scale_warnings(std::get<MmaFramework>(f.framework))) {
          err << file << ": warning: " << w << '\n';
        }
      }
      out << "ok " << (is_mma ? "mma" : "adf") << ' ' << g.size() << " argument(s) "
          << g.attacks().size() << " attack(s)\n";
      return kYes;
    }
    if (fuzz_cmd->parsed()) {
      const auto outcome = fuzz(seed, fuzz_count, fuzz_max_args, limits);
      if (outcome.violation) {
        const auto& v = *outcome.violation;
        out << "violation: " << v.property;
        if (!v.detail.empty()) out << ": " << v.detail;
        out << "\n# counterexample (instance " << outcome.instances << ")\n"
            << v.counterexample;
        return kNo;
      }
      out << "fuzz: " << outcome.instances << " instance(s), no violations\n";
      return kYes;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const NonMonotoneStep& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mmadf::cli
