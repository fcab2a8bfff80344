#ifndef EAG_MAXIMALITY_HPP
#define EAG_MAXIMALITY_HPP

// Whether a unique elementary abelian action extends to a rank n+1
// elementary abelian action on the same surface.

#include "eag/generating_vector.hpp"
#include "eag/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eag {

/// An overgroup N = C_p^(n+1) acting with `n_signature`, together with a
/// basis of the index-p subgroup that reproduces the original action.
struct ExtensionWitness {
  Signature n_signature;
  GeneratingVector vector;
  std::vector<FpVector> subgroup_basis;
  std::string construction;  // which construction produced it
  friend bool operator==(const ExtensionWitness&, const ExtensionWitness&) = default;
};

/// True when `w` is a valid rank n+1 vector whose subgroup has the
/// signature and genus of `spec`.
bool witness_verifies(const EAActionSpec& spec, const ExtensionWitness& w);

/// Closed-form maximality label from the maximal / non-maximal tables and
/// the unramified cyclic rule. Throws PreconditionError if `spec` is not a
/// unique action.
struct TableLabel {
  bool maximal = true;
  std::string rule;
};
TableLabel maximality_label(const EAActionSpec& spec);

/// Smallest-a solution (a, b) of rho = a p + b (p-1)/2 + 1 with a >= -1, b >= 0.
std::optional<std::pair<int, int>> frobenius_representable(int p, int rho);

/// As above but skipping b = 1, which no generating vector realises: a single
/// elliptic image outside the subgroup cannot sum to zero modulo it.
std::optional<std::pair<int, int>> realizable_frobenius(int p, int rho);

/// Explicit witness for a non-maximal table row. Throws PreconditionError
/// when the row is maximal.
ExtensionWitness build_extension_witness(const EAActionSpec& spec);

/// Why no overgroup exists, if a counting argument rules every candidate
/// signature out; empty otherwise.
std::optional<std::string> extension_obstruction(const EAActionSpec& spec);

/// Exhaustive search for an overgroup over every solution of the extension
/// equation, independent of the tables.
struct SearchResult {
  enum class Status { found, exhausted, budget };
  Status status = Status::exhausted;
  std::optional<ExtensionWitness> witness;
  std::uint64_t work = 0;
};
SearchResult search_extension(const EAActionSpec& spec, std::uint64_t budget = 20'000'000);

struct MaximalityVerdict {
  EAActionSpec spec;
  bool maximal = true;
  std::optional<ExtensionWitness> witness;
  std::string rule;      // table row or text rule that labels the case
  std::string evidence;  // "obstruction", "search", "witness" or "table-only"
  std::string note;
  friend bool operator==(const MaximalityVerdict&, const MaximalityVerdict&) = default;
};

/// Decides maximality by two tracks and throws std::logic_error when the
/// closed-form labels and the independent evidence disagree.
MaximalityVerdict is_maximal(const EAActionSpec& spec, std::uint64_t search_budget = 20'000'000);

}  // namespace eag

#endif  // EAG_MAXIMALITY_HPP
