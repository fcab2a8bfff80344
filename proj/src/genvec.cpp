#include "eag/genvec.hpp"

#include "eag/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace eag {

// ---------------------------------------------------------------- vectors

GeneratingVector::GeneratingVector(Prime p, int n, std::vector<Pair> hyperbolic,
                                   std::vector<FpVector> elliptic)
    : p_(p), n_(n), hyp_(std::move(hyperbolic)), ell_(std::move(elliptic)) {
  if (n < 0) throw PreconditionError("rank must be non-negative");
  auto check = [&](const FpVector& v) {
    if (v.prime() != p_ || v.dim() != n_) {
      throw PreconditionError("generating vector entry is not an element of C_p^n");
    }
  };
  for (const auto& [a, b] : hyp_) {
    check(a);
    check(b);
  }
  for (const auto& c : ell_) check(c);
}

bool validate(const GeneratingVector& v) {
  const Prime p = v.prime();
  const int n = v.rank();
  FpVector sum = FpVector::zero(p, n);
  std::vector<FpVector> all;
  for (const auto& [a, b] : v.hyperbolic()) {
    all.push_back(a);
    all.push_back(b);
  }
  for (const auto& c : v.elliptic()) {
    if (c.is_zero()) return false;  // every period is p
    sum += c;
    all.push_back(c);
  }
  if (!sum.is_zero()) return false;
  if (n == 0) return true;
  return rank(all) == n;
}

MultisetCharacter multiset_character(const GeneratingVector& v) {
  std::map<FpVector, int> counts;
  for (const auto& c : v.elliptic()) ++counts[c];
  MultisetCharacter chi;
  for (const auto& [c, k] : counts) chi.push_back(k);
  std::sort(chi.begin(), chi.end());
  return chi;
}

// ---------------------------------------------------------------- orbits

namespace {

using Keys = std::vector<SubspaceKey>;

std::size_t index_of(const Keys& pts, SubspaceKey k) {
  auto it = std::lower_bound(pts.begin(), pts.end(), k);
  if (it == pts.end() || *it != k) {
    throw std::logic_error("group action left the enumerated point set");
  }
  return static_cast<std::size_t>(it - pts.begin());
}

// Connected components of the graph whose edges are the generator moves.
// For a finite group these are exactly the orbits.
template <typename Move>
std::int64_t orbits_by_bfs(const Keys& pts, int generator_count, Move&& move) {
  std::vector<bool> seen(pts.size(), false);
  std::int64_t orbits = 0;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (int g = 0; g < generator_count; ++g) {
        const std::size_t j = index_of(pts, move(g, pts[i]));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return orbits;
}

// Distinct orbit minima, each point's minimum taken over the whole group.
template <typename Canon>
std::int64_t orbits_by_canonical_form(const Keys& pts, Canon&& canon) {
  Keys minima;
  minima.reserve(pts.size());
  for (SubspaceKey k : pts) minima.push_back(canon(k));
  std::sort(minima.begin(), minima.end());
  return static_cast<std::int64_t>(std::unique(minima.begin(), minima.end()) - minima.begin());
}

std::uint64_t factorial(int r) {
  std::uint64_t f = 1;
  for (int i = 2; i <= r; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t saturating(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return x.convert_to<std::uint64_t>();
}

std::uint64_t sp_order(int rho, int p) {
  BigInt order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(rho * rho));
  for (int i = 1; i <= rho; ++i) {
    order *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(2 * i)) - 1;
  }
  return saturating(order);
}

// Groups enumerated element by element for canonical forms stay below this.
constexpr std::uint64_t kCanonicalGroupCap = 200'000;

// --- purely ramified: k-dim subspaces W of {sum x = 0} in F_p^r with no
// identically zero coordinate, permuted by S_r.

Keys pure_points(const Field& f, int k, int r) {
  Keys pts;
  const int p = f.p();
  for_each_rref(f, k, r - 1, [&](const Block& m) {
    Block w(k, r);
    w.leftCols(r - 1) = m;
    for (int i = 0; i < k; ++i) {
      int s = 0;
      for (int j = 0; j < r - 1; ++j) s += m(i, j);
      w(i, r - 1) = f.reduce(-s);
    }
    for (int j = 0; j < r; ++j) {
      bool zero = true;
      for (int i = 0; i < k && zero; ++i) zero = w(i, j) == 0;
      if (zero) return;
    }
    pts.push_back(pack_block(w, p));
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

SubspaceKey permute_columns(const Field& f, SubspaceKey key, int k, int r,
                            const std::vector<int>& perm) {
  const Block w = unpack_block(key, k, r, f.p());
  Block out(k, r);
  for (int j = 0; j < r; ++j) out.col(j) = w.col(perm[j]);
  rref_in_place(f, out);
  return pack_block(out, f.p());
}

void check_pure_caps(int p, int k, int r, const FeasibilityCaps& caps) {
  if (!brute_force_prime(p)) {
    throw CapExceeded("brute-force counts support p in {2,3,5}, got " + std::to_string(p));
  }
  if (k > caps.max_rank) throw CapExceeded("rank " + std::to_string(k) + " above the cap");
  if (r > caps.max_periods) throw CapExceeded("r = " + std::to_string(r) + " above the cap");
  if (saturating(gaussian_binomial(r - 1, k, p)) > caps.max_subspaces) {
    throw CapExceeded("subspace enumeration above the cap");
  }
  if (!key_fits(p, k * r)) throw CapExceeded("subspace key overflow");
}

void check_unramified_caps(int p, int k, int rho, const FeasibilityCaps& caps) {
  if (!brute_force_prime(p)) {
    throw CapExceeded("brute-force counts support p in {2,3,5}, got " + std::to_string(p));
  }
  if (rho > caps.max_orbit_genus) {
    throw CapExceeded("rho = " + std::to_string(rho) + " above the cap");
  }
  if (saturating(gaussian_binomial(2 * rho, k, p)) > caps.max_subspaces) {
    throw CapExceeded("subspace enumeration above the cap");
  }
  if (!key_fits(p, k * 2 * rho)) throw CapExceeded("subspace key overflow");
}

bool canonical_affordable(std::uint64_t points, std::uint64_t group, const FeasibilityCaps& caps) {
  if (group > kCanonicalGroupCap) return false;
  if (points != 0 && group > caps.canonical_budget / points) return false;
  return true;
}

}  // namespace

bool brute_force_prime(int p) { return p == 2 || p == 3 || p == 5; }

bool pure_method_feasible(int p, int k, int r, OrbitMethod method, const FeasibilityCaps& caps) {
  if (k <= 0 || r < 2 || k > r - 1) return true;  // answered without enumeration
  try {
    check_pure_caps(p, k, r, caps);
  } catch (const CapExceeded&) {
    return false;
  }
  if (method != OrbitMethod::canonical) return true;
  return canonical_affordable(saturating(gaussian_binomial(r - 1, k, p)), factorial(r), caps);
}

bool unramified_method_feasible(int p, int k, int rho, OrbitMethod method,
                                const FeasibilityCaps& caps) {
  if (k < 0 || k > 2 * rho || rho == 0) return true;
  try {
    check_unramified_caps(p, k, rho, caps);
  } catch (const CapExceeded&) {
    return false;
  }
  if (method != OrbitMethod::canonical) return true;
  return canonical_affordable(saturating(gaussian_binomial(2 * rho, k, p)), sp_order(rho, p),
                              caps);
}

std::int64_t count_pure_classes(int p, int k, int r, OrbitMethod method,
                                const FeasibilityCaps& caps) {
  const Field f{Prime(p)};
  if (r < 0) throw PreconditionError("r must be non-negative");
  if (k < 0) return 0;
  if (k == 0) return r == 0 ? 1 : 0;
  if (r < 2 || k > r - 1) return 0;  // r elements summing to zero span at most r-1
  check_pure_caps(p, k, r, caps);
  if (method == OrbitMethod::automatic) {
    method = pure_method_feasible(p, k, r, OrbitMethod::canonical, caps) ? OrbitMethod::canonical
                                                                         : OrbitMethod::bfs;
  }
  const Keys pts = pure_points(f, k, r);
  if (method == OrbitMethod::bfs) {
    std::vector<std::vector<int>> swaps;
    for (int i = 0; i + 1 < r; ++i) {
      std::vector<int> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i], perm[i + 1]);
      swaps.push_back(std::move(perm));
    }
    return orbits_by_bfs(pts, r - 1, [&](int g, SubspaceKey key) {
      return permute_columns(f, key, k, r, swaps[g]);
    });
  }
  if (!canonical_affordable(pts.size(), factorial(r), caps)) {
    throw CapExceeded("canonical-form count above the budget");
  }
  return orbits_by_canonical_form(pts, [&](SubspaceKey key) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    SubspaceKey best = key;
    do {
      best = std::min(best, permute_columns(f, key, k, r, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  });
}

std::int64_t count_unramified_classes(int p, int k, int rho, OrbitMethod method,
                                      const FeasibilityCaps& caps) {
  const Field f{Prime(p)};
  if (rho < 0) throw PreconditionError("rho must be non-negative");
  if (k < 0 || k > 2 * rho) return 0;
  if (rho == 0) return 1;  // only the trivial group
  check_unramified_caps(p, k, rho, caps);
  if (method == OrbitMethod::automatic) {
    method = unramified_method_feasible(p, k, rho, OrbitMethod::canonical, caps)
                 ? OrbitMethod::canonical
                 : OrbitMethod::bfs;
  }
  const int c = 2 * rho;
  Keys pts;
  for_each_rref(f, k, c, [&](const Block& b) { pts.push_back(pack_block(b, p)); });
  std::sort(pts.begin(), pts.end());

  auto act = [&](SubspaceKey key, const Entries& g) {
    const Block w = unpack_block(key, k, c, p);
    Block out(k, c);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < c; ++j) {
        int s = 0;
        for (int t = 0; t < c; ++t) s += w(i, t) * g(t, j);
        out(i, j) = static_cast<std::uint8_t>(s % p);
      }
    }
    rref_in_place(f, out);
    return pack_block(out, p);
  };

  const auto gens = sp_generators(rho, Prime(p));
  if (method == OrbitMethod::bfs) {
    return orbits_by_bfs(pts, static_cast<int>(gens.size()), [&](int g, SubspaceKey key) {
      return act(key, gens[static_cast<std::size_t>(g)].entries());
    });
  }
  if (!canonical_affordable(pts.size(), sp_order(rho, p), caps)) {
    throw CapExceeded("canonical-form count above the budget");
  }
  const auto group = group_closure(gens, kCanonicalGroupCap);
  return orbits_by_canonical_form(pts, [&](SubspaceKey key) {
    SubspaceKey best = key;
    for (const auto& g : group) best = std::min(best, act(key, g.entries()));
    return best;
  });
}

std::int64_t unramified_classes_closed_form(int k, int rho) {
  // A k-dim subspace is classified by the dimension t of its radical:
  // t <= min(k, 2 rho - k) and k - t even.
  if (k < 0 || k > 2 * rho) return 0;
  std::int64_t count = 0;
  for (int t = 0; t <= std::min(k, 2 * rho - k); ++t) {
    if ((k - t) % 2 == 0) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- counts

ClassCountReport count_classes(const EAActionSpec& spec, const FeasibilityCaps& caps) {
  Prime checked(spec.p);
  if (spec.n < 0 || spec.rho < 0 || spec.r < 0) {
    throw PreconditionError("n, rho and r must be non-negative");
  }
  ClassCountReport rep;
  rep.spec = spec;
  const int p = spec.p;
  const int n = spec.n;
  const int rho = spec.rho;
  const int r = spec.r;
  if (r == 1 || n > 2 * rho + r - 1 + (r == 0 ? 1 : 0)) {
    rep.method = "closed-form";
    rep.note = "no action exists with these parameters";
    return rep;
  }
  if (rho == 0) {
    const auto e = count_pure_classes(p, n, r, OrbitMethod::automatic, caps);
    rep.e_terms.emplace_back(n, e);
    rep.total = e;
    rep.method = "brute-force";
    return rep;
  }
  if (r == 0) {
    const auto h = count_unramified_classes(p, n, rho, OrbitMethod::automatic, caps);
    rep.h_terms.emplace_back(n, h);
    rep.total = h;
    rep.method = "brute-force";
    return rep;
  }
  for (int k = 0; k <= n; ++k) {
    const auto h = count_unramified_classes(p, k, rho, OrbitMethod::automatic, caps);
    const int idx = r - (k + 1);
    const auto e = count_pure_classes(p, idx, r, OrbitMethod::automatic, caps);
    rep.h_terms.emplace_back(k, h);
    rep.e_terms.emplace_back(idx, e);
    rep.total += h * e;
  }
  rep.method = "formula";
  rep.note =
      "mixed signature: evaluates sum_{k=0}^{n} h_k e_{r-(k+1)} as printed; the index "
      "convention is ambiguous, so uniqueness is decided by the closed-form table instead";
  return rep;
}

// ---------------------------------------------------------------- tables

std::vector<int> pure_uniqueness_rows(int p, int n, int r) {
  std::vector<int> rows;
  if (p == 2 && n == 1 && r % 2 == 0 && r >= 2) rows.push_back(1);
  if (p == 2 && n == 3 && r == 5) rows.push_back(2);
  if (p == 2 && n == 2 && (r == 4 || r == 5)) rows.push_back(3);
  if (p == 3 && n == 1 && (r == 3 || r == 4 || r == 5 || r == 7)) rows.push_back(4);
  if (p == 5 && n == 1 && r == 3) rows.push_back(5);
  if (n == 1 && r == 2) rows.push_back(6);
  if (n >= 1 && n == r - 1) rows.push_back(7);
  return rows;
}

std::vector<int> uniqueness_rows(const EAActionSpec& s) {
  std::vector<int> rows;
  const int p = s.p, n = s.n, rho = s.rho, r = s.r;
  if (rho == 0 && n == r - 1 && r >= 2) rows.push_back(1);
  if (r == 0 && n == 1) rows.push_back(2);
  if (r == 0 && n == 2 * rho) rows.push_back(3);
  if (r == 2 && n == 1 && rho >= 1) rows.push_back(4);
  if (r >= 2 && n == r + 2 * rho - 1) rows.push_back(5);
  if (p == 5 && r == 3 && n == 1) rows.push_back(6);
  if (p == 2 && r >= 2 && r % 2 == 0 && n == 1) rows.push_back(7);
  if (p == 3 && r == 3 && n == 1) rows.push_back(8);
  if (p == 3 && r == 4 && n == 1) rows.push_back(9);
  if (p == 3 && r == 5 && n == 1) rows.push_back(10);
  if (p == 3 && r == 7 && n == 1) rows.push_back(11);
  if (r == 0 && n == 2 * rho - 1) rows.push_back(12);
  if (rho == 0 && p == 2 && r == 5 && n == 3) rows.push_back(13);
  if (p == 2 && r == 5 && n == 2) rows.push_back(14);
  return rows;
}

bool is_unique_action(const EAActionSpec& spec) {
  Prime checked(spec.p);
  require_hyperbolic_genus(spec);
  if (spec.n < 1) return false;
  if (spec.r == 1) return false;
  const int max_rank = spec.r == 0 ? 2 * spec.rho : 2 * spec.rho + spec.r - 1;
  if (spec.n > max_rank) return false;
  return !uniqueness_rows(spec).empty();
}

UniquenessReport uniqueness_report(const EAActionSpec& spec) {
  UniquenessReport out;
  out.spec = spec;
  out.unique = is_unique_action(spec);
  out.genus = ea_genus(spec);
  if (out.unique) out.rows = uniqueness_rows(spec);
  return out;
}

// ---------------------------------------------------------------- witnesses

namespace {

class Builder {
 public:
  Builder(int p, int n) : p_(p), n_(n) {}
  // Element sum_i coeffs[i] X_{i+1}.
  FpVector x(std::initializer_list<long long> coeffs) const {
    Coeffs c = Coeffs::Zero(n_);
    const Field f(p_);
    int i = 0;
    for (long long v : coeffs) c(i++) = f.reduce(v);
    return FpVector(p_, std::move(c));
  }
  FpVector unit(int i) const { return FpVector::unit(p_, n_, i); }
  void push(const FpVector& v, int times = 1) { ell_.insert(ell_.end(), times, v); }
  // Appends the element making the elliptic sum vanish.
  void close() {
    FpVector s = FpVector::zero(p_, n_);
    for (const auto& v : ell_) s += v;
    ell_.push_back(-s);
  }
  GeneratingVector take() {
    GeneratingVector v(p_, n_, {}, std::move(ell_));
    ell_.clear();
    return v;
  }

 private:
  Prime p_;
  int n_;
  std::vector<FpVector> ell_;
};

}  // namespace

std::pair<GeneratingVector, GeneratingVector> build_inequivalent_pair(int p, int n, int r) {
  Prime checked(p);
  if (n < 1 || r < n + 1) throw PreconditionError("need n >= 1 and r >= n + 1");
  if (!pure_uniqueness_rows(p, n, r).empty()) {
    throw PreconditionError("unique class: (p, n, r) is a row of the purely ramified table");
  }
  if (p == 2 && n == 1) throw PreconditionError("no (0; 2^r) action of C_2 exists for odd r");
  Builder b(p, n);
  if (n >= 3) {
    for (int i = 0; i < n; ++i) b.push(b.unit(i));
    b.push(b.unit(0), r - n - 1);
    b.close();
    auto eta1 = b.take();
    for (int i = 0; i < n; ++i) b.push(b.unit(i));
    b.push(b.unit(0) + b.unit(1), r - n - 1);
    b.close();
    return {eta1, b.take()};
  }
  if (n == 2 && p != 2) {
    b.push(b.x({1, 0}));
    b.push(b.x({0, 1}));
    b.push(b.x({1, 0}), r - 3);
    b.close();
    auto eta1 = b.take();
    b.push(b.x({1, 0}));
    b.push(b.x({0, 1}));
    if ((r - 2) % p == 0) {
      b.push(b.x({2, 2}), r - 3);
      b.push(b.x({1, 1}));
    } else if ((r - 1) % p == 0 && r == 4) {
      b.push(b.x({-1, 0}));
      b.push(b.x({0, -1}));
    } else if ((r - 1) % p == 0) {
      b.push(b.x({1, 1}), r - 4);
      b.push(b.x({1, 0}));
      b.push(b.x({1, 2}));
    } else {
      b.push(b.x({1, 1}), r - 3);
      b.close();
    }
    return {eta1, b.take()};
  }
  if (n == 2) {  // p = 2, r >= 6
    if (r % 2 == 0) {
      b.push(b.x({1, 0}), 2);
      b.push(b.x({0, 1}), r - 2);
      auto eta1 = b.take();
      b.push(b.x({1, 0}), 2);
      b.push(b.x({0, 1}), 2);
      b.push(b.x({1, 1}), r - 4);
      return {eta1, b.take()};
    }
    b.push(b.x({1, 0}), 3);
    b.push(b.x({0, 1}));
    b.push(b.x({1, 1}), r - 4);
    auto eta1 = b.take();
    b.push(b.x({1, 0}));
    b.push(b.x({0, 1}));
    b.push(b.x({1, 1}), r - 2);
    return {eta1, b.take()};
  }
  // n = 1
  if (p == 3) {
    if (r % 3 == 0) {
      b.push(b.x({1}), r);
      auto eta1 = b.take();
      b.push(b.x({2}), r - 3);
      b.push(b.x({1}), 3);
      return {eta1, b.take()};
    }
    if (r % 3 == 1) {
      b.push(b.x({1}), r - 2);
      b.push(b.x({2}), 2);
      auto eta1 = b.take();
      b.push(b.x({1}), r - 5);
      b.push(b.x({2}), 5);
      return {eta1, b.take()};
    }
    b.push(b.x({1}), r - 1);
    b.push(b.x({2}));
    auto eta1 = b.take();
    b.push(b.x({1}), r - 4);
    b.push(b.x({2}), 4);
    return {eta1, b.take()};
  }
  // p > 3
  auto standard_eta1 = [&] {
    b.push(b.x({1}), r - 1);
    b.close();
    return b.take();
  };
  auto standard_eta2 = [&] {
    b.push(b.x({1}), r - 2);
    b.push(b.x({2}));
    b.close();
    return b.take();
  };
  if ((r - 1) % p == 0) {
    b.push(b.x({1}), r - 3);
    b.push(b.x({2}), 2);
    b.push(b.x({-2}));
    auto eta1 = b.take();
    return {eta1, standard_eta2()};
  }
  if (r % p == 0) {
    auto eta1 = standard_eta1();
    b.push(b.x({1}), r - 2);
    b.push(b.x({4}));
    b.push(b.x({-2}));
    return {eta1, b.take()};
  }
  if ((r + 1) % p == 0) {
    auto eta1 = standard_eta1();
    b.push(b.x({1}), r - 2);
    b.push(b.x({4}));
    b.close();
    return {eta1, b.take()};
  }
  auto eta1 = standard_eta1();
  return {eta1, standard_eta2()};
}

}  // namespace eag
