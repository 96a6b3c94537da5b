#pragma once

#include <span>
#include <variant>
#include <vector>

#include "mmadf/adf.hpp"
#include "mmadf/core.hpp"
#include "mmadf/mma.hpp"

namespace mmadf {

using Framework = std::variant<MmaFramework, AdfFramework>;

const AttackGraph& graph_of(const Framework& f) noexcept;

/// Labels designated for argument `a`; a singleton for ADFs.
LabelSet designated(const Framework& f, AttackGraph::Index a, std::span<const Label> dense);

bool is_exact(const Framework& f, const Labelling& l);

enum class SemanticsKind { exact, adf_grounded };

enum class Quantifier { credulous, skeptical };

struct AcceptanceMode {
  Quantifier quantifier = Quantifier::credulous;
  Label target = Label::in;  // in or out
};

/// Every exact labelling, by enumerating all 3^|A| total labellings.
/// Throws ResourceLimit above `limits.max_args` arguments.
LabellingSet exact_semantics(const Framework& f, const Limits& limits = {});

/// Consensus operator: an argument gets in (out) exactly when every in/out
/// completion of `l` designates only in (out) for it, and undec otherwise.
Labelling theta(const Framework& f, const Labelling& l, const Limits& limits = {});
std::vector<Label> theta(const Framework& f, std::span<const Label> l,
                         const Limits& limits = {});

/// Kleene iterates of `theta` from all-undec up to and including the
/// fixpoint. Throws NonMonotoneStep if some step is not increasing.
std::vector<Labelling> grounded_iterates(const Framework& f, const Limits& limits = {});

/// Least fixpoint of `theta`.
Labelling grounded(const Framework& f, const Limits& limits = {});

/// The semantics as a set: all exact labellings, or the singleton grounded
/// labelling.
LabellingSet semantics(const Framework& f, SemanticsKind kind, const Limits& limits = {});

bool accepted_in(const LabellingSet& semantics, const ArgumentId& a, AcceptanceMode mode);

/// Credulous: some member labels `a` with the target. Skeptical: credulous
/// and every member does, so an empty semantics answers false.
bool accepted(const Framework& f, const ArgumentId& a, SemanticsKind kind,
              AcceptanceMode mode, const Limits& limits = {});

}  // namespace mmadf
