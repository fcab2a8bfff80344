#ifndef EAG_GENVEC_HPP
#define EAG_GENVEC_HPP

// Counting topological classes of elementary abelian actions, and the
// closed-form uniqueness predicates.

#include "eag/generating_vector.hpp"
#include "eag/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eag {

/// How an orbit count is obtained.
///  - canonical: lexicographic minimum over an enumerated acting group.
///  - bfs: breadth-first search along group generators.
///  - automatic: canonical when cheap enough, otherwise bfs.
enum class OrbitMethod { automatic, canonical, bfs };

/// Brute-force feasibility box for the class counts.
struct FeasibilityCaps {
  int max_rank = 4;                        // k for the purely ramified count
  int max_periods = 8;                     // r
  int max_orbit_genus = 3;                 // rho for the unramified count
  std::uint64_t max_subspaces = 20'000'000;   // points held by one enumeration
  std::uint64_t canonical_budget = 50'000'000;  // points * |group| for canonical forms
};

bool brute_force_prime(int p);

/// e_k: classes of (0; p^r) generating vectors of C_p^k under GL(k,p) x S_r.
/// e_0 = 1 iff r = 0 and e_k = 0 for k < 0.
std::int64_t count_pure_classes(int p, int k, int r, OrbitMethod method = OrbitMethod::automatic,
                                const FeasibilityCaps& caps = {});

/// h_k: classes of epimorphisms F_p^(2 rho) -> F_p^k under GL(k,p) x Sp(2 rho, p).
std::int64_t count_unramified_classes(int p, int k, int rho,
                                      OrbitMethod method = OrbitMethod::automatic,
                                      const FeasibilityCaps& caps = {});

/// Whether `method` is affordable for the given count without raising.
bool pure_method_feasible(int p, int k, int r, OrbitMethod method, const FeasibilityCaps& caps = {});
bool unramified_method_feasible(int p, int k, int rho, OrbitMethod method,
                                const FeasibilityCaps& caps = {});

/// Number of classes with rank-2 rho - d quotients predicted by the
/// symplectic radical argument; used as an independent oracle for h_k.
std::int64_t unramified_classes_closed_form(int k, int rho);

struct ClassCountReport {
  EAActionSpec spec;
  std::vector<std::pair<int, std::int64_t>> e_terms;  // (index, e value)
  std::vector<std::pair<int, std::int64_t>> h_terms;  // (index, h value)
  std::int64_t total = 0;
  std::string method;  // "closed-form", "brute-force" or "formula"
  std::string note;
  friend bool operator==(const ClassCountReport&, const ClassCountReport&) = default;
};

ClassCountReport count_classes(const EAActionSpec& spec, const FeasibilityCaps& caps = {});

/// Matching rows of the purely ramified uniqueness table (numbered 1..7).
std::vector<int> pure_uniqueness_rows(int p, int n, int r);

/// Matching rows of the full uniqueness table (numbered 1..14).
std::vector<int> uniqueness_rows(const EAActionSpec& spec);

struct UniquenessReport {
  EAActionSpec spec;
  Rational genus;
  bool unique = false;
  std::vector<int> rows;  // matching rows of the uniqueness table
  friend bool operator==(const UniquenessReport&, const UniquenessReport&) = default;
};

/// is_unique_action with the genus and the matching rows.
UniquenessReport uniqueness_report(const EAActionSpec& spec);

/// Closed-form uniqueness decision. Throws DomainError when the genus is
/// not an integer >= 2.
bool is_unique_action(const EAActionSpec& spec);

/// The two explicit inequivalent (0; p^r) vectors of C_p^n. Throws
/// PreconditionError when the class is unique or no action exists.
std::pair<GeneratingVector, GeneratingVector> build_inequivalent_pair(int p, int n, int r);

}  // namespace eag

#endif  // EAG_GENVEC_HPP
