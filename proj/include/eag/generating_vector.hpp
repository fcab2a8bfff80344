#ifndef EAG_GENERATING_VECTOR_HPP
#define EAG_GENERATING_VECTOR_HPP

#include "eag/fp.hpp"

#include <utility>
#include <vector>

namespace eag {

/// Images of the canonical generators a_1, b_1, ..., a_rho, b_rho,
/// c_1, ..., c_r of a Fuchsian group in the elementary abelian group C_p^n.
class GeneratingVector {
 public:
  using Pair = std::pair<FpVector, FpVector>;

  GeneratingVector(Prime p, int n, std::vector<Pair> hyperbolic, std::vector<FpVector> elliptic);

  Prime prime() const { return p_; }
  int rank() const { return n_; }
  int orbit_genus() const { return static_cast<int>(hyp_.size()); }
  int period_count() const { return static_cast<int>(ell_.size()); }
  const std::vector<Pair>& hyperbolic() const { return hyp_; }
  const std::vector<FpVector>& elliptic() const { return ell_; }

  friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) = default;

 private:
  Prime p_;
  int n_;
  std::vector<Pair> hyp_;
  std::vector<FpVector> ell_;
};

/// Generation, order and long-relation conditions. In an abelian target the
/// commutators vanish, so the relation is just sum(c_j) = 0.
bool validate(const GeneratingVector& v);

/// Sorted multiplicities of the distinct elliptic images.
using MultisetCharacter = std::vector<int>;
MultisetCharacter multiset_character(const GeneratingVector& v);

}  // namespace eag

#endif  // EAG_GENERATING_VECTOR_HPP
