#ifndef EAG_SIGNATURE_HPP
#define EAG_SIGNATURE_HPP

// Signatures, the Riemann-Hurwitz formula, and the bookkeeping for index-p
// extensions of elementary abelian actions.

#include "eag/generating_vector.hpp"
#include "eag/rational.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eag {

/// (rho; m_1, ..., m_r). Periods keep their order but compare as a multiset.
struct Signature {
  int orbit_genus = 0;
  std::vector<int> periods;

  Signature() = default;
  Signature(int rho, std::vector<int> m);

  /// Accepts "(2; 3,3,3)", "(2;3^3)", "(1; -)" and "(1;)".
  static Signature parse(std::string_view text);
  /// Canonical text form, "(rho; m1,m2,...)" or "(rho; -)".
  std::string str() const;

  bool unramified() const { return periods.empty(); }
  int period_count() const { return static_cast<int>(periods.size()); }

  friend bool operator==(const Signature& a, const Signature& b);
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) { return os << s.str(); }
};

/// Action of C_p^n with signature (rho; p^r).
struct EAActionSpec {
  int p = 2;
  int n = 1;
  int rho = 0;
  int r = 0;

  Signature signature() const;
  friend bool operator==(const EAActionSpec&, const EAActionSpec&) = default;
};

std::ostream& operator<<(std::ostream& os, const EAActionSpec& s);

/// Parameters of a rank-(n+1) overgroup N with signature (tau; p^s), where
/// l of the elliptic images leave the subgroup and m = s - l stay in it.
struct ExtensionParams {
  int tau = 0;
  int s = 0;
  int l = 0;
  int m = 0;
  friend bool operator==(const ExtensionParams&, const ExtensionParams&) = default;
};

/// sigma = 1 + |G|(rho - 1) + |G|/2 * sum(1 - 1/m_i).
Rational riemann_hurwitz_genus(const BigInt& group_order, const Signature& sig);

/// The closed form 1 + p^n (rho - 1) + r p^(n-1) (p - 1) / 2.
Rational ea_genus(const EAActionSpec& spec);

/// Throws DomainError unless the genus of `spec` is an integer >= 2.
int require_hyperbolic_genus(const EAActionSpec& spec);

/// Signature of the subgroup spanned by `subgroup_basis` acting on the same
/// surface as `v`.
Signature subgroup_signature(const GeneratingVector& v, std::span<const FpVector> subgroup_basis);

/// All solutions of 2 rho - 2 = 2p(tau - 1) + l(p - 1) with r = pm, s = l + m.
std::vector<ExtensionParams> solve_extension_params(int p, int rho, int r);

}  // namespace eag

#endif  // EAG_SIGNATURE_HPP
