#include "eag/hyper_fermat.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace eag {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Complex principal_root(Complex z, int p, int branch) {
  if (z == Complex(0)) return 0;
  const double r = std::pow(std::abs(z), 1.0 / p);
  const double theta = (std::arg(z) + 2 * std::numbers::pi * branch) / p;
  return std::polar(r, theta);
}

// Kernel of an (n-1) x (n+1) matrix of rank n-1, as two columns.
Mat<Complex> line_basis(const Mat<Complex>& c) {
  Eigen::FullPivLU<Mat<Complex>> lu(c);
  lu.setThreshold(kDefaultTolerance);
  Mat<Complex> k = lu.kernel();
  if (k.cols() != 2) throw PreconditionError("matrix does not cut out a line");
  return k;
}

SmoothnessSample check_point(int p, const Mat<Complex>& c, const Vec<Complex>& x, bool check_minor, double tol) {
  const Eigen::Index m = c.cols();
  const int n = static_cast<int>(m) - 1;
  SmoothnessSample s;
  s.point.assign(x.data(), x.data() + m);

  Vec<Complex> xp(m), xp1(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    xp1(j) = std::pow(x(j), p - 1);
    xp(j) = xp1(j) * x(j);
  }
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    double scale = 0;
    for (Eigen::Index j = 0; j < m; ++j) scale += std::abs(c(i, j)) * std::abs(xp(j));
    const double f = std::abs((c.row(i) * xp)(0));
    s.equation_residual = std::max(s.equation_residual, scale > 0 ? f / scale : f);
  }

  Mat<Complex> g = static_cast<double>(p) * c * xp1.asDiagonal();
  Eigen::JacobiSVD<Mat<Complex>> svd(g);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  s.jacobian_rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (top > 0 && sv(k) > tol * top) ++s.jacobian_rank;
  s.smallest_singular = top > 0 ? sv(sv.size() - 1) / top : 0.0;

  if (check_minor) {
    // Drop the two smallest coordinates so the kept ones are nonzero.
    std::vector<Eigen::Index> idx(m);
    for (Eigen::Index j = 0; j < m; ++j) idx[j] = j;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return std::abs(x(a)) < std::abs(x(b)); });
    const Eigen::Index i = std::min(idx[0], idx[1]), j = std::max(idx[0], idx[1]);
    const Complex lhs = determinant<Complex>(drop_columns(g, i, j));
    Complex rhs = std::pow(static_cast<double>(p), n - 1) * determinant<Complex>(drop_columns(c, i, j));
    for (Eigen::Index k = 0; k < m; ++k)
      if (k != i && k != j) rhs *= xp1(k);
    const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    s.minor_error = std::abs(lhs - rhs) / denom;
  }
  s.ok = s.equation_residual <= tol && s.jacobian_rank == n - 1 && s.minor_error <= 1e-8;
  return s;
}

}  // namespace

double chordal_distance(const ProjPoint<Complex>& a, const ProjPoint<Complex>& b) {
  const double na = std::hypot(std::abs(a.x), std::abs(a.y));
  const double nb = std::hypot(std::abs(b.x), std::abs(b.y));
  return std::abs(a.x * b.y - b.x * a.y) / (na * nb);
}

Rational hyper_fermat_genus(int p, int n) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (n < 2) throw UsageError("hyper-Fermat curves need n >= 2");
  BigInt power = 1;
  for (int i = 0; i < n - 1; ++i) power *= p;
  return Rational(1) + Rational(power) * Rational((n - 1) * p - (n + 1)) / 2;
}

HyperFermatSpec make_hyper_fermat(int p, const Mat<Complex>& line, double tol) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  line_rank_n(line);
  if (!is_generic_line(line, tol)) throw PreconditionError("line is not generic");
  return {p, line};
}

SmoothnessReport sample_and_check_smoothness(int p, const Mat<Complex>& line, int count, std::uint64_t seed,
                                             double tol) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (count < 0) throw UsageError("sample count must be non-negative");
  line_rank_n(line);
  const Eigen::Index m = line.cols();
  const Mat<Complex> basis = line_basis(line);

  SmoothnessReport report;
  report.generic = is_generic_line(line, tol);
  auto record = [&](SmoothnessSample s) {
    ++report.samples;
    if (s.ok) ++report.passed;
    else if (!report.offending) report.offending = s;
    report.worst_residual = std::max(report.worst_residual, s.equation_residual);
    report.worst_minor_error = std::max(report.worst_minor_error, s.minor_error);
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> branch(0, p - 1);
  for (int k = 0; k < count; ++k) {
    const Complex s(normal(rng), normal(rng)), t(normal(rng), normal(rng));
    Vec<Complex> y = s * basis.col(0) + t * basis.col(1);
    y /= y.cwiseAbs().maxCoeff();
    Vec<Complex> x(m);
    for (Eigen::Index j = 0; j < m; ++j) x(j) = principal_root(y(j), p, branch(rng));
    record(check_point(p, line, x, report.generic, tol));
  }

  if (!report.generic) {
    // A point of the line with two vanishing coordinates.
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) {
        const Mat<Complex> minor = drop_columns(line, i, j);
        Eigen::FullPivLU<Mat<Complex>> lu(minor);
        lu.setThreshold(tol);
        if (lu.rank() == minor.cols()) continue;
        const Vec<Complex> z = lu.kernel().col(0);
        Vec<Complex> x = Vec<Complex>::Zero(m);
        for (Eigen::Index col = 0, k = 0; col < m; ++col)
          if (col != i && col != j) x(col) = principal_root(z(k++), p, 0);
        record(check_point(p, line, x, false, tol));
        return report;
      }
  }
  return report;
}

std::vector<ProjPoint<Complex>> moduli_coordinates(const std::vector<ProjPoint<Complex>>& b, double tol) {
  if (b.size() < 3) throw UsageError("need at least three branch points");
  const auto mob = mobius_three_points<Complex>(
      {b[0], b[1], b[2]},
      {ProjPoint<Complex>::finite(0), ProjPoint<Complex>::finite(1), ProjPoint<Complex>::infinity()});
  std::vector<ProjPoint<Complex>> out;
  for (std::size_t i = 3; i < b.size(); ++i) out.push_back(mobius_apply(mob, b[i], tol));
  return out;
}

bool moduli_equivalent(const std::vector<ProjPoint<Complex>>& b1, const std::vector<ProjPoint<Complex>>& b2,
                       double tol) {
  if (b1.size() != b2.size()) return false;
  const std::size_t m = b1.size();
  if (m <= 3) return true;  // the Moebius group is triply transitive
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        const auto mob = mobius_three_points<Complex>({b1[0], b1[1], b1[2]}, {b2[a], b2[b], b2[c]});
        std::vector<char> used(m, 0);
        used[a] = used[b] = used[c] = 1;
        bool ok = true;
        for (std::size_t i = 3; i < m && ok; ++i) {
          const auto img = mobius_apply(mob, b1[i], tol);
          ok = false;
          for (std::size_t k = 0; k < m; ++k)
            if (!used[k] && chordal_distance(img, b2[k]) <= tol) {
              used[k] = 1;
              ok = true;
              break;
            }
        }
        if (ok) return true;
      }
  return false;
}

bool operator==(const FermatReport& a, const FermatReport& b) {
  const bool same_line = a.line.rows() == b.line.rows() && a.line.cols() == b.line.cols() && a.line == b.line;
  return a.p == b.p && a.n == b.n && same_line && a.generic == b.generic && a.genus == b.genus &&
         a.lambdas == b.lambdas && a.lambdas_exact == b.lambdas_exact && a.residue_checks == b.residue_checks &&
         a.samples == b.samples && a.samples_passed == b.samples_passed && a.seed == b.seed;
}

FermatReport fermat_vandermonde(int p, const std::vector<Rational>& w, int samples, std::uint64_t seed) {
  const Mat<Rational> line = vandermonde_line(w);
  FermatReport out;
  out.p = p;
  out.n = line_rank_n(line);
  out.line = to_complex_matrix(line);
  out.generic = is_generic_line(line);
  out.genus = hyper_fermat_genus(p, out.n);
  const auto b = branch_points<Rational>(
      line, {ProjPoint<Rational>::finite(w[0]), ProjPoint<Rational>::finite(w[1]), ProjPoint<Rational>::finite(w[2])});
  for (const auto& l : b.lambdas) {
    out.lambdas.push_back(to_complex(l));
    out.lambdas_exact.push_back(l.at_infinity() ? "inf" : l.x.str());
  }
  for (int s = 0; s <= out.n - 2; ++s) out.residue_checks.push_back(residue_identity_check(w, s));
  const auto smooth = sample_and_check_smoothness(p, out.line, samples, seed);
  out.samples = smooth.samples;
  out.samples_passed = smooth.passed;
  out.seed = seed;
  return out;
}

FermatReport fermat_line(int p, const Mat<Complex>& line, const std::array<ProjPoint<Complex>, 3>& pins,
                         int samples, std::uint64_t seed) {
  const HyperFermatSpec spec = make_hyper_fermat(p, line);
  FermatReport out;
  out.p = p;
  out.n = spec.n();
  out.line = line;
  out.generic = true;
  out.genus = spec.genus();
  out.lambdas = branch_points<Complex>(line, pins).lambdas;
  const auto smooth = sample_and_check_smoothness(p, line, samples, seed);
  out.samples = smooth.samples;
  out.samples_passed = smooth.passed;
  out.seed = seed;
  return out;
}

}  // namespace eag
