#ifndef EAG_GROUP_TABLE_HPP
#define EAG_GROUP_TABLE_HPP

// Small finite groups given by Cayley tables, and genus-zero generating
// vectors over them.

#include "eag/signature.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eag {

/// Largest group order accepted.
inline constexpr int kMaxTableOrder = 60;

/// A finite group on {0, ..., n-1} with 0 the identity.
class GroupTable {
 public:
  /// Validates closure, identity, inverses and associativity.
  explicit GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

  /// Reads the text format: the order n, then n rows of n indices.
  static GroupTable read(std::istream& in);
  static GroupTable load(const std::string& path);
  void write(std::ostream& out) const;

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const { return ord_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  bool is_abelian() const;
  bool is_central(int a) const;
  /// Elements of the subgroup generated by `gens`, sorted.
  std::vector<int> generated(const std::vector<int>& gens) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::string> names_;
};

namespace groups {
GroupTable trivial();
GroupTable cyclic(int n);
/// Dihedral group of order 2n.
GroupTable dihedral(int n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable elementary_abelian(int p, int n);
/// Closure of permutations of {0..degree-1}, identity first.
GroupTable from_permutations(const std::vector<std::vector<int>>& gens);
GroupTable symmetric3();
GroupTable alternating4();
GroupTable symmetric4();
GroupTable alternating5();
}  // namespace groups

/// The same group with element i renamed perm[i]; perm must fix 0.
GroupTable relabel(const GroupTable& g, const std::vector<int>& perm);

/// Genus-zero generating vector (c_1, ..., c_r): orders equal the periods,
/// the product c_1 ... c_r is the identity, and the entries generate.
bool validate_tuple(const GroupTable& g, const std::vector<int>& c, const std::vector<int>& periods);

/// c_1 c_2 ... c_r.
int tuple_product(const GroupTable& g, const std::vector<int>& c);

/// (..., c_i, c_(i+1), ...) -> (..., c_(i+1), c_(i+1)^-1 c_i c_(i+1), ...),
/// with 0-based i, 0 <= i < r - 1.
std::vector<int> braid_move(const GroupTable& g, const std::vector<int>& c, int i);

using Permutation = std::vector<int>;

/// Every automorphism as a permutation of the elements.
std::vector<Permutation> automorphisms(const GroupTable& g);

struct OrbitCount {
  std::int64_t orbits = 0;
  std::int64_t vectors = 0;           // over every ordering of the periods
  std::int64_t vectors_in_order = 0;  // with the periods exactly as given
  std::vector<std::vector<int>> representatives;  // smallest tuple of each orbit
  friend bool operator==(const OrbitCount&, const OrbitCount&) = default;
};

/// Orbits of genus-zero generating vectors under Aut(G) and the braid
/// moves, taken over every ordering of the periods.
OrbitCount count_orbits(const GroupTable& g, const Signature& sig);

/// All generating vectors over every ordering of the periods.
std::vector<std::vector<int>> enumerate_vectors(const GroupTable& g, const Signature& sig);

/// Orbit index of each vector from `enumerate_vectors`, and the count.
std::pair<std::vector<int>, int> orbit_labels(const GroupTable& g, const Signature& sig,
                                              const std::vector<std::vector<int>>& vectors);

/// Number of points of the surface fixed by `h` for the action given by `c`.
std::int64_t fixed_point_count(const GroupTable& g, const std::vector<int>& c, int h);

/// Surface genus of the action, from the periods.
Rational tuple_genus(const GroupTable& g, const std::vector<int>& c);

enum class KKind { cyclic, dihedral, a4, s4, a5 };
std::string to_string(KKind k);

struct KPattern {
  KKind kind;
  int n = 0;                 // for C_n and D_n
  int nontrivial = 0;        // number of canonical generators with nontrivial image
  std::vector<int> profile;  // sorted image orders
};

/// The quotient type forced by the orders of the nontrivial images.
std::optional<KPattern> classify_k_pattern(std::vector<int> orders);

/// Possible orders of a canonical generator whose image has order a.
std::set<int> compatible_generator_orders(int p, int image_order);

using OrderProfile = std::vector<int>;
bool order_profiles_equal_kernels(const OrderProfile& a, const OrderProfile& b);

/// Explicit kernel comparison for two epimorphisms onto K given by the
/// images of the canonical generators: equal kernels iff an automorphism of
/// K carries one image tuple onto the other.
bool same_kernel(const GroupTable& k, const std::vector<int>& images1,
                 const std::vector<int>& images2);

}  // namespace eag

#endif  // EAG_GROUP_TABLE_HPP
