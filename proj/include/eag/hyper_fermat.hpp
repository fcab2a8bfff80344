#ifndef EAG_HYPER_FERMAT_HPP
#define EAG_HYPER_FERMAT_HPP

// Hyper-Fermat curves: preimages of a generic line in P^n under the
// coordinatewise p-th power map, with their branch points on P^1.
//
// Scalars are Rational, GaussRational (exact) or std::complex<double>.

#include "eag/errors.hpp"
#include "eag/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace eag {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mobius = Eigen::Matrix<T, 2, 2>;

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
inline constexpr bool is_exact_v = !std::is_same_v<T, Complex>;

inline double magnitude(const Rational& x) { return std::abs(to_double(x)); }
inline double magnitude(const GaussRational& z) { return std::abs(to_complex(z)); }
inline double magnitude(const Complex& z) { return std::abs(z); }

/// Exact zero test, or |x| <= tol * scale for floating scalars.
template <class T>
bool is_zero(const T& x, double scale = 1.0, double tol = kDefaultTolerance) {
  if constexpr (is_exact_v<T>)
    return x == T(0);
  else
    return magnitude(x) <= tol * scale;
}

template <class T>
Mat<Complex> to_complex_matrix(const Mat<T>& m) {
  return m.unaryExpr([](const T& x) { return to_complex(x); });
}

namespace detail {

// Index of the pivot in column `col` at or below `row`, or -1.
template <class T>
Eigen::Index pick_pivot(const Mat<T>& a, Eigen::Index row, Eigen::Index col) {
  Eigen::Index best = -1;
  double best_mag = 0;
  for (Eigen::Index i = row; i < a.rows(); ++i) {
    if constexpr (is_exact_v<T>) {
      if (a(i, col) != T(0)) return i;
    } else if (magnitude(a(i, col)) > best_mag) {
      best_mag = magnitude(a(i, col));
      best = i;
    }
  }
  return best;
}

}  // namespace detail

/// Determinant by Gaussian elimination (first nonzero pivot when exact,
/// partial pivoting otherwise).
template <class T>
T determinant(Mat<T> a) {
  if (a.rows() != a.cols()) throw UsageError("determinant of a non-square matrix");
  T det(1);
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index piv = detail::pick_pivot(a, c, c);
    if (piv < 0 || a(piv, c) == T(0)) return T(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      const T f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solution of the square system a x = b; PreconditionError when singular.
template <class T>
Vec<T> solve(Mat<T> a, Vec<T> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index piv = detail::pick_pivot(a, c, c);
    if (piv < 0 || a(piv, c) == T(0)) throw PreconditionError("singular linear system");
    a.row(piv).swap(a.row(c));
    std::swap(b(piv), b(c));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == T(0)) continue;
      const T f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b(i) -= f * b(c);
    }
  }
  Vec<T> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
  return x;
}

/// C with columns i and j removed.
template <class T>
Mat<T> drop_columns(const Mat<T>& c, Eigen::Index i, Eigen::Index j) {
  Mat<T> out(c.rows(), c.cols() - (i == j ? 1 : 2));
  Eigen::Index k = 0;
  for (Eigen::Index col = 0; col < c.cols(); ++col)
    if (col != i && col != j) out.col(k++) = c.col(col);
  return out;
}

// ---------------------------------------------------------------------------
// Points of the projective line.

/// (x : y) with infinity = (1 : 0). Finite points are stored as (v : 1).
template <class T>
struct ProjPoint {
  T x{1};
  T y{0};

  static ProjPoint finite(T v) { return {std::move(v), T(1)}; }
  static ProjPoint infinity() { return {T(1), T(0)}; }
  /// Normalizes a homogeneous pair; both coordinates zero is an error.
  static ProjPoint from_pair(const T& a, const T& b, double tol = kDefaultTolerance) {
    const double scale = std::max(magnitude(a), magnitude(b));
    if (is_zero(a, 1.0, tol) && is_zero(b, 1.0, tol)) throw PreconditionError("degenerate projective point");
    if (is_zero(b, scale, tol)) return infinity();
    return finite(a / b);
  }

  bool at_infinity() const { return y == T(0); }
  const T& value() const {
    if (at_infinity()) throw PreconditionError("point at infinity has no affine value");
    return x;
  }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x && a.y == b.y; }
};

template <class T>
ProjPoint<Complex> to_complex(const ProjPoint<T>& p) {
  return {to_complex(p.x), to_complex(p.y)};
}

/// Spherical chordal distance, in [0, 1].
double chordal_distance(const ProjPoint<Complex>& a, const ProjPoint<Complex>& b);

template <class T>
ProjPoint<T> mobius_apply(const Mobius<T>& m, const ProjPoint<T>& z, double tol = kDefaultTolerance) {
  return ProjPoint<T>::from_pair(m(0, 0) * z.x + m(0, 1) * z.y, m(1, 0) * z.x + m(1, 1) * z.y, tol);
}

/// The Moebius map sending src[k] to dst[k] for k = 0, 1, 2.
template <class T>
Mobius<T> mobius_three_points(const std::array<ProjPoint<T>, 3>& src, const std::array<ProjPoint<T>, 3>& dst) {
  // Matrix sending (1:0), (0:1), (1:1) to the three given points.
  auto frame = [](const std::array<ProjPoint<T>, 3>& v) {
    const T det = v[0].x * v[1].y - v[1].x * v[0].y;
    if (is_zero(det)) throw PreconditionError("Moebius data points are not distinct");
    const T alpha = (v[2].x * v[1].y - v[1].x * v[2].y) / det;
    const T beta = (v[0].x * v[2].y - v[2].x * v[0].y) / det;
    if (is_zero(alpha) || is_zero(beta)) throw PreconditionError("Moebius data points are not distinct");
    Mobius<T> f;
    f << alpha * v[0].x, beta * v[1].x, alpha * v[0].y, beta * v[1].y;
    return f;
  };
  const Mobius<T> a = frame(src);
  const Mobius<T> b = frame(dst);
  const T det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  // b * a^-1 written out: Eigen's scalar promotion cannot handle a
  // multiprecision scalar next to a matrix operand.
  Mobius<T> out;
  out << (b(0, 0) * a(1, 1) - b(0, 1) * a(1, 0)) / det, (b(0, 1) * a(0, 0) - b(0, 0) * a(0, 1)) / det,
      (b(1, 0) * a(1, 1) - b(1, 1) * a(1, 0)) / det, (b(1, 1) * a(0, 0) - b(1, 0) * a(0, 1)) / det;
  return out;
}

/// (a, b; c, d) = ((a - c)(b - d)) / ((a - d)(b - c)) in homogeneous form.
template <class T>
ProjPoint<T> cross_ratio(const ProjPoint<T>& a, const ProjPoint<T>& b, const ProjPoint<T>& c,
                         const ProjPoint<T>& d) {
  auto br = [](const ProjPoint<T>& u, const ProjPoint<T>& v) { return u.x * v.y - v.x * u.y; };
  return ProjPoint<T>::from_pair(br(a, c) * br(b, d), br(a, d) * br(b, c));
}

/// The six values of the cross ratio under reordering: l, 1-l, 1/l, ...
template <class T>
std::array<T, 6> cross_ratio_orbit(const T& l) {
  const T one(1);
  return {l, one - l, one / l, one / (one - l), (l - one) / l, l / (l - one)};
}

// ---------------------------------------------------------------------------
// Lines in P^n.

/// Rows (w_0^j, ..., w_n^j) for j = 0, ..., n - 2.
template <class T>
Mat<T> vandermonde_line(const std::vector<T>& w) {
  const auto m = static_cast<Eigen::Index>(w.size());
  if (m < 3) throw UsageError("a line in P^n needs n + 1 >= 3 parameters");
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      if (is_zero(T(w[i] - w[j]), std::max(magnitude(w[i]), magnitude(w[j]))))
        throw UsageError("Vandermonde parameters must be distinct");
  Mat<T> c(m - 2, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    T power(1);
    for (Eigen::Index row = 0; row < m - 2; ++row) {
      c(row, j) = power;
      power *= w[j];
    }
  }
  return c;
}

template <class T>
int line_rank_n(const Mat<T>& c) {
  if (c.cols() < 3 || c.rows() != c.cols() - 2)
    throw UsageError("a line in P^n is cut out by an (n-1) x (n+1) matrix with n >= 2");
  return static_cast<int>(c.cols() - 1);
}

/// Every minor left after deleting two distinct columns is invertible.
/// Floating determinants are compared with tol times the Hadamard bound.
template <class T>
bool is_generic_line(const Mat<T>& c, double tol = kDefaultTolerance) {
  line_rank_n(c);
  for (Eigen::Index i = 0; i < c.cols(); ++i)
    for (Eigen::Index j = i + 1; j < c.cols(); ++j) {
      const Mat<T> minor = drop_columns(c, i, j);
      double bound = 1.0;
      if constexpr (!is_exact_v<T>)
        for (Eigen::Index r = 0; r < minor.rows(); ++r) bound *= minor.row(r).norm();
      if (is_zero(determinant(minor), bound, tol)) return false;
    }
  return true;
}

/// Column i is Q_i: the point of the line with x_i = 0, scaled so that its
/// first nonzero coordinate is 1.
template <class T>
Mat<T> intersection_points(const Mat<T>& c, double tol = kDefaultTolerance) {
  if (!is_generic_line(c, tol)) throw PreconditionError("line is not generic");
  const Eigen::Index m = c.cols();
  Mat<T> q(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index j = i == 0 ? 1 : 0;  // first coordinate other than i
    const Vec<T> rest = solve<T>(drop_columns(c, i, j), Vec<T>(-c.col(j)));
    Eigen::Index k = 0;
    for (Eigen::Index col = 0; col < m; ++col) {
      if (col == i) q(col, i) = T(0);
      else if (col == j) q(col, i) = T(1);
      else q(col, i) = rest(k++);
    }
  }
  return q;
}

template <class T>
struct BranchSet {
  std::vector<ProjPoint<T>> lambdas;
  std::array<ProjPoint<T>, 3> pins;  // images of indices 0, 1, 2
  Mat<T> q;                          // intersection points, one per column
  Vec<T> c, d;                       // Q_i = c_i Q_0 + d_i Q_1
  std::optional<T> u1;               // only when every pin is finite
};

/// Coefficients with Q_i = c_i Q_0 + d_i Q_1. Coordinates 0 and 1 are always
/// independent because Q_0(0) = Q_1(1) = 0 while Q_0(1), Q_1(0) are nonzero.
template <class T>
std::pair<Vec<T>, Vec<T>> span_coefficients(const Mat<T>& q, double tol = kDefaultTolerance) {
  const Eigen::Index m = q.cols();
  Vec<T> c(m), d(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    c(i) = q(1, i) / q(1, 0);
    d(i) = q(0, i) / q(0, 1);
    const Vec<T> residual = q.col(i) - c(i) * q.col(0) - d(i) * q.col(1);
    for (Eigen::Index k = 0; k < m; ++k)
      if (!is_zero(residual(k), std::max(1.0, magnitude(q(k, i))), tol))
        throw std::logic_error("intersection point outside the span of Q_0, Q_1");
  }
  return {c, d};
}

/// Branch parameters lambda_i with lambda_0, lambda_1, lambda_2 pinned.
/// Finite pins use u_1 = c_2 (l_0 - l_2) / (d_2 (l_2 - l_1)) and
/// lambda_i = (l_1 u_1 Q_0(i) - l_0 Q_1(i)) / (u_1 Q_0(i) - Q_1(i));
/// a pin at infinity uses the Moebius map sending (1:0), (0:1), (c_2:d_2)
/// to the pins, which is the limit of the same expression. The columns of
/// `q` are the intersection points in any scaling.
template <class T>
BranchSet<T> branch_points_from_points(const Mat<T>& q, const std::array<ProjPoint<T>, 3>& pins,
                                       double tol = kDefaultTolerance) {
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (is_zero(T(pins[a].x * pins[b].y - pins[b].x * pins[a].y),
                  std::max(magnitude(pins[a].x), 1.0) * std::max(magnitude(pins[b].x), 1.0), tol))
        throw PreconditionError("pinned branch values must be distinct");
  BranchSet<T> out;
  out.pins = pins;
  out.q = q;
  std::tie(out.c, out.d) = span_coefficients(out.q, tol);
  const Eigen::Index m = q.cols();
  const T& c2 = out.c(2);
  const T& d2 = out.d(2);
  out.lambdas.assign(pins.begin(), pins.end());
  const bool finite = !pins[0].at_infinity() && !pins[1].at_infinity() && !pins[2].at_infinity();
  if (finite) {
    const T& l0 = pins[0].x;
    const T& l1 = pins[1].x;
    const T& l2 = pins[2].x;
    const T u1 = c2 * (l0 - l2) / (d2 * (l2 - l1));
    out.u1 = u1;
    for (Eigen::Index i = 3; i < m; ++i) {
      const T num = l1 * u1 * out.q(i, 0) - l0 * out.q(i, 1);
      const T den = u1 * out.q(i, 0) - out.q(i, 1);
      out.lambdas.push_back(ProjPoint<T>::from_pair(num, den, tol));
    }
  } else {
    const Mobius<T> mob = mobius_three_points<T>(
        {ProjPoint<T>{T(1), T(0)}, ProjPoint<T>{T(0), T(1)}, ProjPoint<T>{c2, d2}}, pins);
    for (Eigen::Index i = 3; i < m; ++i)
      out.lambdas.push_back(mobius_apply(mob, ProjPoint<T>{out.c(i), out.d(i)}, tol));
  }
  return out;
}

/// As above, from the line itself with the normalized intersection points.
template <class T>
BranchSet<T> branch_points(const Mat<T>& line, const std::array<ProjPoint<T>, 3>& pins,
                           double tol = kDefaultTolerance) {
  return branch_points_from_points(intersection_points(line, tol), pins, tol);
}

/// sum_{j=1..n} w_j^s prod_{k != 0, j} (w_j - w_k)^-1, which vanishes for
/// 0 <= s <= n - 2 and equals 1 at s = n - 1.
template <class T>
T residue_sum(const std::vector<T>& w, int s) {
  const auto n = static_cast<int>(w.size()) - 1;
  if (n < 1 || s < 0) throw UsageError("residue sum needs n >= 1 and s >= 0");
  T total(0);
  for (int j = 1; j <= n; ++j) {
    T term(1);
    for (int e = 0; e < s; ++e) term *= w[j];
    for (int k = 1; k <= n; ++k)
      if (k != j) term /= (w[j] - w[k]);
    total += term;
  }
  return total;
}

/// |residue_sum(w, s)|.
template <class T>
double residue_identity_check(const std::vector<T>& w, int s) {
  return magnitude(residue_sum(w, s));
}

/// Q_i(j) = prod_{k != i, j} (w_j - w_k)^-1 for j != i, and Q_i(i) = 0.
template <class T>
Mat<T> vandermonde_intersection_points(const std::vector<T>& w) {
  const auto m = static_cast<Eigen::Index>(w.size());
  Mat<T> q(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      T v(i == j ? 0 : 1);
      if (i != j)
        for (Eigen::Index k = 0; k < m; ++k)
          if (k != i && k != j) v /= (w[j] - w[k]);
      q(j, i) = v;
    }
  return q;
}

// ---------------------------------------------------------------------------
// The curve.

/// 1 + p^(n-1) ((n-1) p - (n+1)) / 2, from Riemann-Hurwitz for (0; p^(n+1)).
Rational hyper_fermat_genus(int p, int n);

struct HyperFermatSpec {
  int p = 2;
  Mat<Complex> line;  // (n-1) x (n+1)
  int n() const { return static_cast<int>(line.cols()) - 1; }
  Rational genus() const { return hyper_fermat_genus(p, n()); }
};

/// Validates primality and genericity.
HyperFermatSpec make_hyper_fermat(int p, const Mat<Complex>& line, double tol = kDefaultTolerance);

struct SmoothnessSample {
  std::vector<Complex> point;  // homogeneous coordinates on the curve
  double equation_residual = 0;     // max_i |f_i(X)| relative to the scale
  double smallest_singular = 0;     // of the Jacobian, relative to the largest
  int jacobian_rank = 0;
  double minor_error = 0;           // relative error of the minor formula
  bool ok = false;
};

struct SmoothnessReport {
  int samples = 0;
  int passed = 0;
  bool generic = true;
  double worst_residual = 0;
  double worst_minor_error = 0;
  std::optional<SmoothnessSample> offending;  // first failure
  bool all_passed() const { return passed == samples; }
};

/// Samples points on the line, lifts them through p-th roots to the curve,
/// and checks f_i(X) = 0 and rank n - 1 of the Jacobian
/// p c_(i,j) x_j^(p-1). For a non-generic line the point with two zero
/// coordinates is added to the sample, where the rank drops.
SmoothnessReport sample_and_check_smoothness(int p, const Mat<Complex>& line, int count, std::uint64_t seed,
                                             double tol = kDefaultTolerance);

/// True iff some Moebius map carries b1 onto b2 as sets.
bool moduli_equivalent(const std::vector<ProjPoint<Complex>>& b1, const std::vector<ProjPoint<Complex>>& b2,
                       double tol = kDefaultTolerance);

/// Images of lambda_3, ..., lambda_n after sending lambda_0, lambda_1,
/// lambda_2 to 0, 1, infinity: the n - 2 moduli.
std::vector<ProjPoint<Complex>> moduli_coordinates(const std::vector<ProjPoint<Complex>>& b,
                                                   double tol = kDefaultTolerance);

/// Everything the command-line front end reports about one curve.
struct FermatReport {
  int p = 2;
  int n = 2;
  Mat<Complex> line;
  bool generic = true;
  Rational genus;
  std::vector<ProjPoint<Complex>> lambdas;
  std::vector<std::string> lambdas_exact;  // "inf" or a rational; exact input only
  std::vector<double> residue_checks;      // |residue sum| for s = 0, ..., n - 2
  int samples = 0;
  int samples_passed = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const FermatReport& a, const FermatReport& b);
};

/// Curve over the Vandermonde line of rational parameters w, computed
/// exactly, with pins (w_0, w_1, w_2).
FermatReport fermat_vandermonde(int p, const std::vector<Rational>& w, int samples, std::uint64_t seed);

/// Curve over a floating line. Throws PreconditionError if not generic.
FermatReport fermat_line(int p, const Mat<Complex>& line, const std::array<ProjPoint<Complex>, 3>& pins,
                         int samples, std::uint64_t seed);

}  // namespace eag

#endif  // EAG_HYPER_FERMAT_HPP
