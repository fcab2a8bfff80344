#include "eag/fp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace eag {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(int p) : p_(p) {
  if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw CapExceeded("prime " + std::to_string(p) + " exceeds the supported bound " +
                            std::to_string(kMaxPrime));
  }
}

Field::Field(Prime p) : p_(p) {
  for (int a = 1; a < p_; ++a) {
    for (int b = 1; b < p_; ++b) {
      if ((a * b) % p_ == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  for (int g = 1; g < p_; ++g) {
    int x = 1;
    int order = 0;
    do {
      x = (x * g) % p_;
      ++order;
    } while (x != 1);
    if (order == p_ - 1) {
      root_ = static_cast<std::uint8_t>(g);
      break;
    }
  }
}

// ---------------------------------------------------------------- FpVector

FpVector::FpVector(Prime p, Coeffs coords) : p_(p), c_(std::move(coords)) {
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    if (c_(i) >= p_) throw PreconditionError("coordinate out of range for F_p");
  }
}

FpVector::FpVector(Prime p, std::initializer_list<int> coords) : p_(p), c_(coords.size()) {
  const Field f(p);
  int i = 0;
  for (int v : coords) c_(i++) = f.reduce(v);
}

FpVector FpVector::zero(Prime p, int dim) { return FpVector(p, Coeffs::Zero(dim)); }

FpVector FpVector::unit(Prime p, int dim, int i) {
  Coeffs c = Coeffs::Zero(dim);
  c(i) = 1;
  return FpVector(p, std::move(c));
}

bool FpVector::is_zero() const { return (c_.array() == 0).all(); }

namespace {
void require_same_shape(const FpVector& a, const FpVector& b) {
  if (a.prime() != b.prime() || a.dim() != b.dim()) {
    throw PreconditionError("vectors over different fields or of different rank");
  }
}
}  // namespace

FpVector operator+(const FpVector& a, const FpVector& b) {
  require_same_shape(a, b);
  Coeffs c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c(i) = static_cast<std::uint8_t>((a.c_(i) + b.c_(i)) % a.p_);
  return FpVector(a.p_, std::move(c));
}

FpVector operator-(const FpVector& a) {
  Coeffs c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c(i) = static_cast<std::uint8_t>((a.p_ - a.c_(i)) % a.p_);
  return FpVector(a.p_, std::move(c));
}

FpVector operator-(const FpVector& a, const FpVector& b) { return a + (-b); }

FpVector operator*(int k, const FpVector& a) {
  const Field f(a.p_);
  const std::uint8_t s = f.reduce(k);
  Coeffs c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c(i) = f.mul(s, a.c_(i));
  return FpVector(a.p_, std::move(c));
}

bool operator==(const FpVector& a, const FpVector& b) {
  return a.p_ == b.p_ && a.c_.size() == b.c_.size() && a.c_ == b.c_;
}

bool operator<(const FpVector& a, const FpVector& b) {
  return std::lexicographical_compare(a.c_.data(), a.c_.data() + a.c_.size(), b.c_.data(),
                                      b.c_.data() + b.c_.size());
}

std::ostream& operator<<(std::ostream& os, const FpVector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? "," : "") << int(v[i]);
  return os << ')';
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(Prime p, Entries a) : p_(p), a_(std::move(a)) {
  for (Eigen::Index i = 0; i < a_.size(); ++i) {
    if (a_.data()[i] >= p_) throw PreconditionError("matrix entry out of range for F_p");
  }
}

FpMatrix::FpMatrix(Prime p, std::initializer_list<std::initializer_list<int>> rows) : p_(p) {
  const Field f(p);
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = nr ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  a_.resize(nr, nc);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != nc) throw PreconditionError("ragged matrix rows");
    Eigen::Index j = 0;
    for (int v : row) a_(i, j++) = f.reduce(v);
    ++i;
  }
}

FpMatrix FpMatrix::zero(Prime p, int rows, int cols) {
  return FpMatrix(p, Entries::Zero(rows, cols));
}

FpMatrix FpMatrix::identity(Prime p, int n) { return FpMatrix(p, Entries::Identity(n, n)); }

FpMatrix FpMatrix::from_rows(std::span<const FpVector> rows) {
  if (rows.empty()) throw PreconditionError("from_rows needs at least one row");
  Entries a(rows.size(), rows.front().dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != rows.front().dim() || rows[i].prime() != rows.front().prime()) {
      throw PreconditionError("rows of differing rank or field");
    }
    a.row(static_cast<Eigen::Index>(i)) = rows[i].coords().transpose();
  }
  return FpMatrix(rows.front().prime(), std::move(a));
}

void FpMatrix::set(int i, int j, long long v) { a_(i, j) = Field(p_).reduce(v); }

FpVector FpMatrix::row(int i) const { return FpVector(p_, a_.row(i).transpose()); }
FpVector FpMatrix::col(int j) const { return FpVector(p_, a_.col(j)); }

FpMatrix FpMatrix::transpose() const { return FpMatrix(p_, a_.transpose()); }

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch");
  const int p = a.p_;
  Entries c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      int s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a.a_(i, k) * b.a_(k, j);
      c(i, j) = static_cast<std::uint8_t>(s % p);
    }
  }
  return FpMatrix(a.p_, std::move(c));
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError("matrix shape mismatch");
  }
  Entries c(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c.data()[i] = static_cast<std::uint8_t>((a.a_.data()[i] + b.a_.data()[i]) % a.p_);
  }
  return FpMatrix(a.p_, std::move(c));
}

FpVector operator*(const FpMatrix& a, const FpVector& v) {
  if (a.p_ != v.prime() || a.cols() != v.dim()) throw PreconditionError("matrix shape mismatch");
  Coeffs c(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    int s = 0;
    for (int k = 0; k < a.cols(); ++k) s += a.a_(i, k) * v[k];
    c(i) = static_cast<std::uint8_t>(s % a.p_);
  }
  return FpVector(a.p_, std::move(c));
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.p_ == b.p_ && a.rows() == b.rows() && a.cols() == b.cols() && a.a_ == b.a_;
}

bool operator<(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  return std::lexicographical_compare(a.a_.data(), a.a_.data() + a.a_.size(), b.a_.data(),
                                      b.a_.data() + b.a_.size());
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << int(m(i, j));
  }
  return os << ']';
}

std::size_t FpMatrix::hash() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::size_t>(a_.rows()));
  mix(static_cast<std::size_t>(a_.cols()));
  for (Eigen::Index i = 0; i < a_.size(); ++i) mix(a_.data()[i]);
  return h;
}

// ---------------------------------------------------------------- elimination

FpMatrix rref(const FpMatrix& m, int* rank_out) {
  Entries a = m.entries();
  const int r = rref_in_place(Field(m.prime()), a);
  if (rank_out) *rank_out = r;
  return FpMatrix(m.prime(), std::move(a));
}

int rank(const FpMatrix& m) {
  int r = 0;
  rref(m, &r);
  return r;
}

int rank(std::span<const FpVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(FpMatrix::from_rows(vectors));
}

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

FpMatrix inverse(const FpMatrix& m) {
  if (!is_invertible(m)) throw PreconditionError("matrix is singular");
  const int n = m.rows();
  Entries aug(n, 2 * n);
  aug.leftCols(n) = m.entries();
  aug.rightCols(n) = Entries::Identity(n, n);
  rref_in_place(Field(m.prime()), aug);
  return FpMatrix(m.prime(), aug.rightCols(n));
}

// ---------------------------------------------------------------- groups

std::vector<FpMatrix> gl_generators(int n, int p_raw) {
  if (n < 1) throw PreconditionError("gl_generators needs n >= 1");
  const Prime p(p_raw);
  const Field f(p);
  std::vector<FpMatrix> gens;
  FpMatrix d = FpMatrix::identity(p, n);
  d.set(0, 0, f.primitive_root());
  if (n == 1 || p != 2) gens.push_back(d);
  for (int i = 0; i + 1 < n; ++i) {
    FpMatrix up = FpMatrix::identity(p, n);
    up.set(i, i + 1, 1);
    FpMatrix down = FpMatrix::identity(p, n);
    down.set(i + 1, i, 1);
    gens.push_back(up);
    gens.push_back(down);
  }
  return gens;
}

FpMatrix standard_alternating_form(int rho, Prime p) {
  FpMatrix j = FpMatrix::zero(p, 2 * rho, 2 * rho);
  for (int i = 0; i < rho; ++i) {
    j.set(i, rho + i, 1);
    j.set(rho + i, i, -1);
  }
  return j;
}

std::vector<FpMatrix> sp_generators(int rho, Prime p) {
  if (rho < 1) throw PreconditionError("sp_generators needs rho >= 1");
  const int dim = 2 * rho;
  const FpMatrix jt = standard_alternating_form(rho, p).transpose();
  auto transvection = [&](const FpVector& v) {
    // T = I + v v^T J^T, so that T x = x + w(x, v) v with w(x, y) = x^T J y.
    const FpMatrix col = FpMatrix::from_rows(std::span(&v, 1)).transpose();
    return FpMatrix::identity(p, dim) + col * col.transpose() * jt;
  };
  std::vector<FpMatrix> gens;
  for (int i = 0; i < rho; ++i) gens.push_back(transvection(FpVector::unit(p, dim, i)));
  for (int i = 0; i < rho; ++i) gens.push_back(transvection(FpVector::unit(p, dim, rho + i)));
  for (int i = 0; i + 1 < rho; ++i) {
    gens.push_back(
        transvection(FpVector::unit(p, dim, rho + i) - FpVector::unit(p, dim, rho + i + 1)));
  }
  return gens;
}

bool preserves_form(const FpMatrix& g, const FpMatrix& form) {
  return g.transpose() * form * g == form;
}

std::vector<FpMatrix> group_closure(std::span<const FpMatrix> gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionError("group_closure needs at least one generator");
  const int n = gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n || g.prime() != gens.front().prime()) {
      throw PreconditionError("generators must be square matrices of equal size");
    }
    if (!is_invertible(g)) throw PreconditionError("generator is not invertible");
  }
  std::unordered_set<FpMatrix, FpMatrixHash> seen;
  std::deque<FpMatrix> queue;
  const FpMatrix id = FpMatrix::identity(gens.front().prime(), n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const FpMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      FpMatrix y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<FpMatrix> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  BigInt pp = p;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(pp, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(pp, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

// ---------------------------------------------------------------- blocks

bool key_fits(int p, int entries) {
  SubspaceKey limit = ~SubspaceKey{0};
  for (int i = 0; i < entries; ++i) {
    if (limit < static_cast<SubspaceKey>(p)) return false;
    limit /= static_cast<SubspaceKey>(p);
  }
  return true;
}

SubspaceKey pack_block(const Block& b, int p) {
  if (!key_fits(p, static_cast<int>(b.rows() * b.cols()))) {
    throw CapExceeded("subspace too large for a 128-bit key");
  }
  SubspaceKey key = 0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) key = key * static_cast<unsigned>(p) + b(i, j);
  }
  return key;
}

Block unpack_block(SubspaceKey key, int rows, int cols, int p) {
  Block b(rows, cols);
  for (int i = rows - 1; i >= 0; --i) {
    for (int j = cols - 1; j >= 0; --j) {
      b(i, j) = static_cast<std::uint8_t>(key % static_cast<unsigned>(p));
      key /= static_cast<unsigned>(p);
    }
  }
  return b;
}

void for_each_rref(const Field& f, int rows, int cols,
                   const std::function<void(const Block&)>& fn) {
  for_each_rref_until(f, rows, cols, [&fn](const Block& b) {
    fn(b);
    return false;
  });
}

bool for_each_rref_until(const Field& f, int rows, int cols,
                         const std::function<bool(const Block&)>& fn) {
  if (rows < 0 || rows > cols || rows > kBlockMaxRows || cols > kBlockMaxCols) {
    throw PreconditionError("for_each_rref: unsupported shape");
  }
  const int p = f.p();
  std::vector<int> piv(rows);
  for (int i = 0; i < rows; ++i) piv[i] = i;
  Block b(rows, cols);
  while (true) {
    b.setZero();
    std::vector<bool> is_piv(cols, false);
    for (int i = 0; i < rows; ++i) {
      b(i, piv[i]) = 1;
      is_piv[piv[i]] = true;
    }
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < rows; ++i) {
      for (int c = piv[i] + 1; c < cols; ++c) {
        if (!is_piv[c]) free.emplace_back(i, c);
      }
    }
    std::vector<int> digit(free.size(), 0);
    while (true) {
      if (fn(b)) return true;
      std::size_t t = 0;
      while (t < digit.size()) {
        if (++digit[t] < p) {
          b(free[t].first, free[t].second) = static_cast<std::uint8_t>(digit[t]);
          break;
        }
        digit[t] = 0;
        b(free[t].first, free[t].second) = 0;
        ++t;
      }
      if (t == digit.size()) break;
    }
    // next combination of pivot columns
    int i = rows - 1;
    while (i >= 0 && piv[i] == cols - rows + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < rows; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace eag
