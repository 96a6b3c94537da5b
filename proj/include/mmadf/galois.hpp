#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mmadf/adf.hpp"
#include "mmadf/core.hpp"
#include "mmadf/mma.hpp"
#include "mmadf/semantics.hpp"

namespace mmadf {

using BigCount = boost::multiprecision::cpp_int;

using MmaSet = std::set<MmaFramework>;
using AdfSet = std::set<AdfFramework>;

/// Labels a condition table may return on rows whose (out, in) counts fall
/// into `region`. Coincides with the MMA designation table.
inline LabelSet allowed_labels(ConditionPair region) noexcept {
  return designation_table(region);
}

/// Out- and in-counts of a condition-table row key.
std::pair<std::uint32_t, std::uint32_t> row_counts(std::span<const Label> key) noexcept;

// ---------------------------------------------------------------------------
// Concretisation

/// Every table row of `adf` picks a label the MMA designates for that row.
bool is_concretisation(const AdfFramework& adf, const MmaFramework& mma);

struct ConcretisationCount {
  BigCount total;
  std::vector<std::pair<ArgumentId, BigCount>> factors;  // in argument order
};

/// Size of the concretisation set: per argument, the product over all
/// attacker labellings of the number of designated labels.
ConcretisationCount count_concretisations(const MmaFramework& mma, const Limits& limits = {});

/// 3^(n * 3^n), the largest possible concretisation count over n arguments.
BigCount concretisation_upper_bound(std::size_t n);
/// ((n+2)(n+3)/2)^(2n), the largest possible abstraction count over n arguments.
BigCount abstraction_upper_bound(std::size_t n);

/// Deterministic enumeration of concretisations. Row choices follow label
/// order; the last row of the last argument varies fastest, so the first
/// element picks the least designated label everywhere.
class ConcretisationStream {
 public:
  explicit ConcretisationStream(MmaFramework mma, const Limits& limits = {});

  std::optional<AdfFramework> next();

 private:
  struct Digit {
    std::size_t argument;
    std::size_t row;
    std::vector<Label> choices;
  };

  MmaFramework mma_;
  std::vector<Digit> digits_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Label>> rows_;
  bool done_ = false;
};

std::vector<AdfFramework> enumerate_concretisations(const MmaFramework& mma, std::size_t limit,
                                                    const Limits& limits = {});

AdfFramework canonical_concretisation(const MmaFramework& mma, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Abstraction

struct ScaleCandidateSet {
  ArgumentId owner;
  std::vector<NuanceTuple> candidates;  // ascending
};

/// 0 <= may <= must <= k+1 on both scales.
bool within_abstraction_bounds(const NuanceTuple& q, std::size_t attackers) noexcept;

/// Every row of `table` returns a label allowed in its region under `q`.
/// Bounds are not checked.
bool table_fits_scale(const ConditionTable& table, const NuanceTuple& q);

/// All nuance tuples within the abstraction bounds that fit the table of `a`.
ScaleCandidateSet valid_scales(const AdfFramework& adf, const ArgumentId& a);
std::vector<NuanceTuple> valid_scales(const ConditionTable& table);

bool is_abstraction(const MmaFramework& mma, const AdfFramework& adf);

/// q1 is at least as tight as q2: higher (or equal) may-conditions and
/// lower (or equal) must-conditions on both scales.
bool nuance_leq(const NuanceTuple& q1, const NuanceTuple& q2) noexcept;
/// Pointwise nuance_leq; throws GraphMismatch for different graphs.
bool framework_leq(const MmaFramework& m1, const MmaFramework& m2);
/// Every member of `s1` lies below some member of `s2`.
bool set_leq(const MmaSet& s1, const MmaSet& s2);

/// Non-dominated members of `qs` under nuance_leq, ascending.
std::vector<NuanceTuple> minimal_scales(const std::vector<NuanceTuple>& qs);

/// Per argument, the tightest fitting scales; one MMA per combination.
std::vector<MmaFramework> minimal_abstractions(const AdfFramework& adf,
                                               const Limits& limits = {});

/// The minimal abstraction using the least minimal scale of every argument.
MmaFramework least_minimal_abstraction(const AdfFramework& adf);

// ---------------------------------------------------------------------------
// The adjoint pair

/// Union of the concretisation sets. Materialises every member, so throws
/// ResourceLimit when the union could exceed `max_size`.
AdfSet f_gamma(const MmaSet& s, std::size_t max_size, const Limits& limits = {});

/// Union of the minimal abstractions.
MmaSet f_alpha(const AdfSet& t, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Transfer of semantic facts

/// Exact labellings of `mma` under which every argument has exactly one
/// designated label.
LabellingSet label_one_exact(const MmaFramework& mma, const Limits& limits = {});

enum class FactStatus { certified, conditional };

struct AcceptanceFact {
  FactStatus status;
  SemanticsKind semantics;
  AcceptanceMode mode;
  ArgumentId argument;
};

struct TransferReport {
  MmaFramework abstraction;
  LabellingSet certified_exact;  // exact labellings of the ADF
  Labelling grounded_bound;      // below the ADF's grounded labelling
  std::vector<AcceptanceFact> facts;
  /// Conditional facts hold when the ADF has exactly this many exact
  /// labellings.
  std::size_t condition_exact_count = 0;
};

/// Facts about `adf` derived only from its least minimal abstraction.
TransferReport transfer_report(const AdfFramework& adf, const Limits& limits = {});

}  // namespace mmadf
