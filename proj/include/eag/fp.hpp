#ifndef EAG_FP_HPP
#define EAG_FP_HPP

// Exact linear algebra over small prime fields F_p, the matrix groups
// GL(n,p) and Sp(2g,p), and enumeration of subspaces in reduced row
// echelon form. Entries are stored as uint8_t residues in [0, p).

#include "eag/errors.hpp"
#include "eag/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace eag {

/// Largest prime accepted anywhere in the library.
inline constexpr int kMaxPrime = 13;

/// Default cap on the number of elements held by closure and orbit
/// structures before an enumeration is abandoned with CapExceeded.
inline constexpr std::size_t kDefaultElementCap = 100'000'000;

bool is_prime(int n);

/// A prime modulus p <= 13, validated at construction.
class Prime {
 public:
  explicit Prime(int p);
  int value() const { return p_; }
  operator int() const { return p_; }  // NOLINT(google-explicit-constructor)

 private:
  int p_;
};

/// Arithmetic tables for F_p.
class Field {
 public:
  explicit Field(Prime p);

  int p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % p_);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + p_ - b) % p_);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % p_);
  }
  std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  std::uint8_t reduce(long long v) const {
    long long r = v % p_;
    return static_cast<std::uint8_t>(r < 0 ? r + p_ : r);
  }
  /// Smallest generator of the multiplicative group F_p^x.
  std::uint8_t primitive_root() const { return root_; }

 private:
  int p_;
  std::uint8_t root_ = 1;
  std::array<std::uint8_t, 16> inv_{};
};

using Coeffs = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using Entries = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Element of the elementary abelian group C_p^n, written additively.
class FpVector {
 public:
  FpVector(Prime p, Coeffs coords);
  FpVector(Prime p, std::initializer_list<int> coords);

  static FpVector zero(Prime p, int dim);
  /// The i-th standard basis vector (0-based).
  static FpVector unit(Prime p, int dim, int i);

  Prime prime() const { return p_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const Coeffs& coords() const { return c_; }
  std::uint8_t operator[](int i) const { return c_(i); }
  bool is_zero() const;

  friend FpVector operator+(const FpVector& a, const FpVector& b);
  friend FpVector operator-(const FpVector& a, const FpVector& b);
  friend FpVector operator-(const FpVector& a);
  friend FpVector operator*(int k, const FpVector& a);
  FpVector& operator+=(const FpVector& b) { return *this = *this + b; }
  friend bool operator==(const FpVector& a, const FpVector& b);
  friend bool operator!=(const FpVector& a, const FpVector& b) { return !(a == b); }
  /// Lexicographic order on coordinates; used for canonical multisets.
  friend bool operator<(const FpVector& a, const FpVector& b);
  friend std::ostream& operator<<(std::ostream& os, const FpVector& v);

 private:
  Prime p_;
  Coeffs c_;
};

/// Dense matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(Prime p, Entries a);
  FpMatrix(Prime p, std::initializer_list<std::initializer_list<int>> rows);

  static FpMatrix zero(Prime p, int rows, int cols);
  static FpMatrix identity(Prime p, int n);
  /// Matrix whose rows are the given vectors.
  static FpMatrix from_rows(std::span<const FpVector> rows);

  Prime prime() const { return p_; }
  int rows() const { return static_cast<int>(a_.rows()); }
  int cols() const { return static_cast<int>(a_.cols()); }
  std::uint8_t operator()(int i, int j) const { return a_(i, j); }
  void set(int i, int j, long long v);
  const Entries& entries() const { return a_; }
  FpVector row(int i) const;
  FpVector col(int j) const;

  FpMatrix transpose() const;
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpVector operator*(const FpMatrix& a, const FpVector& v);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b);
  friend bool operator!=(const FpMatrix& a, const FpMatrix& b) { return !(a == b); }
  friend bool operator<(const FpMatrix& a, const FpMatrix& b);
  friend std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

  /// Hash over the row-major entry bytes.
  std::size_t hash() const;

 private:
  Prime p_;
  Entries a_;
};

struct FpMatrixHash {
  std::size_t operator()(const FpMatrix& m) const { return m.hash(); }
};

/// In-place reduced row echelon form; returns the rank. Works on any
/// Eigen-like matrix of residues.
template <typename Derived>
int rref_in_place(const Field& f, Eigen::MatrixBase<Derived>& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const std::uint8_t s = f.inv(m(r, c));
    if (s != 1) {
      for (int j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), s);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint8_t k = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(k, m(r, j)));
    }
    ++r;
  }
  return r;
}

FpMatrix rref(const FpMatrix& m, int* rank_out = nullptr);
int rank(const FpMatrix& m);
int rank(std::span<const FpVector> vectors);
bool is_invertible(const FpMatrix& m);
FpMatrix inverse(const FpMatrix& m);

/// Matrices generating GL(n,p): the adjacent elementary transvections
/// together with diag(w,1,...,1) for a primitive root w. For n = 1 a single
/// generator of F_p^x.
std::vector<FpMatrix> gl_generators(int n, int p);

/// Gram matrix [[0, I], [-I, 0]] of the standard alternating form on
/// F_p^{2 rho}, basis ordered e_1..e_rho, f_1..f_rho.
FpMatrix standard_alternating_form(int rho, Prime p);

/// Symplectic transvections x -> x + w(x,v) v for v in {e_i, f_i, f_i - f_{i+1}};
/// these are the mod-p images of the Humphries twists and generate Sp(2 rho, p).
std::vector<FpMatrix> sp_generators(int rho, Prime p);

bool preserves_form(const FpMatrix& g, const FpMatrix& form);

/// Full multiplicative closure of a set of invertible square matrices,
/// identity included, returned in sorted order.
std::vector<FpMatrix> group_closure(std::span<const FpMatrix> gens,
                                    std::size_t cap = kDefaultElementCap);

/// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(int n, int k, int p);

// ---------------------------------------------------------------------------
// Small fixed-capacity blocks for the orbit enumerations. Subspaces are
// represented by their RREF basis, packed as a base-p number into a 128-bit
// key. Packing preserves the lexicographic order of the entries.

inline constexpr int kBlockMaxRows = 8;
inline constexpr int kBlockMaxCols = 16;
using Block = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor,
                            kBlockMaxRows, kBlockMaxCols>;
using SubspaceKey = unsigned __int128;

/// True when p^entries fits in a SubspaceKey.
bool key_fits(int p, int entries);
SubspaceKey pack_block(const Block& b, int p);
Block unpack_block(SubspaceKey key, int rows, int cols, int p);

/// Calls `fn(const Block&)` for every rows x cols matrix in reduced row
/// echelon form of full row rank, in a deterministic order.
void for_each_rref(const Field& f, int rows, int cols,
                   const std::function<void(const Block&)>& fn);

/// Same enumeration, stopping as soon as `fn` returns true. Returns whether
/// it stopped early.
bool for_each_rref_until(const Field& f, int rows, int cols,
                         const std::function<bool(const Block&)>& fn);

}  // namespace eag

#endif  // EAG_FP_HPP
