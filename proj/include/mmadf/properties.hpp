#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mmadf/adf.hpp"
#include "mmadf/core.hpp"
#include "mmadf/mma.hpp"
#include "mmadf/random.hpp"
#include "mmadf/semantics.hpp"

namespace mmadf {

struct PropertyViolation {
  std::string property;
  std::string detail;
  std::string counterexample;  // serialized instance, replayable through the CLI
};

/// Exact semantics by decoding every base-3 number into a labelling map and
/// checking properness argument by argument.
LabellingSet brute_force_exact(const Framework& f);

/// Round trip, semantics oracle, fixpoint, abstraction soundness, minimality,
/// transfer and cardinality checks on one ADF.
std::optional<PropertyViolation> check_adf_properties(const AdfFramework& adf, Rng& rng,
                                                      const Limits& limits = {});

/// Round trip, semantics oracle, fixpoint, designation laws, concretisation
/// and monotonicity checks on one MMA.
std::optional<PropertyViolation> check_mma_properties(const MmaFramework& mma, Rng& rng,
                                                      const Limits& limits = {});

struct FuzzOutcome {
  std::size_t instances = 0;
  std::optional<PropertyViolation> violation;
};

/// `count` random ADF/MMA pairs with 0..max_args arguments; stops at the
/// first violation.
FuzzOutcome fuzz(std::uint64_t seed, std::size_t count, std::size_t max_args,
                 const Limits& limits = {});

}  // namespace mmadf
