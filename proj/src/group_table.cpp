#include "eag/group_table.hpp"

#include "eag/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace eag {

namespace {

constexpr std::size_t kMaxVectors = 5'000'000;
constexpr std::size_t kMaxAutomorphisms = 100'000;
constexpr int kMaxTupleLength = 10;  // 6 bits per entry in a 64-bit key

std::uint64_t pack(const std::vector<int>& c) {
  std::uint64_t key = 0;
  for (int x : c) key = (key << 6) | static_cast<std::uint64_t>(x);
  return key;
}


struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Small generating set, chosen greedily in element order.
std::vector<int> generating_set(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> sub{0};
  for (int x = 1; x < g.order(); ++x) {
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = g.generated(gens);
    if (static_cast<int>(sub.size()) == g.order()) break;
  }
  return gens;
}

Permutation compose(const Permutation& a, const Permutation& b) {  // a then b
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

// Generators of the group of permutations in `all`, chosen greedily.
std::vector<Permutation> permutation_generators(const std::vector<Permutation>& all) {
  std::vector<Permutation> gens;
  std::set<Permutation> closure;
  if (all.empty()) return gens;
  Permutation id(all.front().size());
  std::iota(id.begin(), id.end(), 0);
  closure.insert(id);
  for (const auto& a : all) {
    if (closure.count(a)) continue;
    gens.push_back(a);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          auto y = compose(x, s);
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    if (closure.size() == all.size()) break;
  }
  return gens;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : mul_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (n < 1) throw UsageError("group table is empty");
  if (n > kMaxTableOrder)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxTableOrder));
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw UsageError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw UsageError("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a) throw UsageError("element 0 is not the identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0 || mul_[inv_[a]][a] != 0) throw UsageError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw UsageError("group table is not associative");
  ord_.assign(n, 1);
  for (int a = 1; a < n; ++a)
    for (int x = a; x != 0; x = mul_[x][a]) ++ord_[a];
  if (names_.empty()) {
    names_.push_back("e");
    for (int a = 1; a < n; ++a) names_.push_back("g" + std::to_string(a));
  }
  if (static_cast<int>(names_.size()) != n) throw UsageError("wrong number of element names");
}

GroupTable GroupTable::read(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw UsageError("group file: expected the order on the first line");
  if (n > kMaxTableOrder)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxTableOrder));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (auto& row : t)
    for (auto& x : row)
      if (!(in >> x)) throw UsageError("group file: truncated table");
  return GroupTable(std::move(t));
}

GroupTable GroupTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open group file " + path);
  return read(in);
}

void GroupTable::write(std::ostream& out) const {
  out << order() << '\n';
  for (const auto& row : mul_) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    if (!is_central(a)) return false;
  return true;
}

bool GroupTable::is_central(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

std::vector<int> GroupTable::generated(const std::vector<int>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : gens) {
      int y = mul_[x][s];
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < order(); ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

namespace groups {

GroupTable trivial() { return GroupTable(std::vector<std::vector<int>>{{0}}); }

GroupTable cyclic(int n) {
  if (n < 1) throw UsageError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names{"e"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  for (int a = 1; a < n; ++a) names.push_back(a == 1 ? "a" : "a^" + std::to_string(a));
  return GroupTable(std::move(t), std::move(names));
}

GroupTable dihedral(int n) {
  if (n < 1) throw UsageError("dihedral parameter must be positive");
  // r^k s^e is stored as k + n e.
  const int size = 2 * n;
  std::vector<std::vector<int>> t(size, std::vector<int>(size));
  std::vector<std::string> names(size);
  for (int x = 0; x < size; ++x) {
    int a = x % n, e = x / n;
    std::string rot = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    names[x] = x == 0 ? "e" : rot + (e ? "s" : "");
    for (int y = 0; y < size; ++y) {
      int b = y % n, f = y / n;
      int k = ((a + (e ? -b : b)) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  }
  return GroupTable(std::move(t), std::move(names));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int m = g.order(), k = h.order();
  if (m * k > kMaxTableOrder) throw CapExceeded("direct product order exceeds " + std::to_string(kMaxTableOrder));
  std::vector<std::vector<int>> t(m * k, std::vector<int>(m * k));
  std::vector<std::string> names(m * k);
  for (int x = 0; x < m * k; ++x) {
    names[x] = x == 0 ? "e" : "(" + g.name(x / k) + "," + h.name(x % k) + ")";
    for (int y = 0; y < m * k; ++y) t[x][y] = g.mul(x / k, y / k) * k + h.mul(x % k, y % k);
  }
  return GroupTable(std::move(t), std::move(names));
}

GroupTable elementary_abelian(int p, int n) {
  if (n < 0) throw UsageError("rank must be non-negative");
  GroupTable out = trivial();
  for (int i = 0; i < n; ++i) out = direct_product(out, cyclic(p));
  return out;
}

GroupTable from_permutations(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return trivial();
  const std::size_t degree = gens.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        if (s.size() != degree) throw UsageError("permutations of different degrees");
        auto y = compose(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
        if (seen.size() > static_cast<std::size_t>(kMaxTableOrder))
          throw CapExceeded("permutation group order exceeds " + std::to_string(kMaxTableOrder));
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());  // identity sorts first
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return GroupTable(std::move(t));
}

GroupTable symmetric3() { return dihedral(3); }
GroupTable alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }
GroupTable symmetric4() { return from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}); }
GroupTable alternating5() { return from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}); }

}  // namespace groups

GroupTable relabel(const GroupTable& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<int> check(perm);
  std::sort(check.begin(), check.end());
  if (static_cast<int>(perm.size()) != n || perm[0] != 0 || check != [&] {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return v;
      }())
    throw UsageError("relabelling must be a permutation fixing 0");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[perm[a]] = g.name(a);
    for (int b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[g.mul(a, b)];
  }
  return GroupTable(std::move(t), std::move(names));
}

int tuple_product(const GroupTable& g, const std::vector<int>& c) {
  int x = 0;
  for (int y : c) x = g.mul(x, y);
  return x;
}

bool validate_tuple(const GroupTable& g, const std::vector<int>& c, const std::vector<int>& periods) {
  if (c.size() != periods.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.order()) return false;
    if (g.element_order(c[i]) != periods[i]) return false;
  }
  if (tuple_product(g, c) != 0) return false;
  return static_cast<int>(g.generated(c).size()) == g.order();
}

std::vector<int> braid_move(const GroupTable& g, const std::vector<int>& c, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(c.size())) throw UsageError("braid index out of range");
  std::vector<int> out(c);
  int a = c[i], b = c[i + 1];
  out[i] = b;
  out[i + 1] = g.mul(g.mul(g.inv(b), a), b);
  return out;
}

std::vector<Permutation> automorphisms(const GroupTable& g) {
  const int n = g.order();
  const auto gens = generating_set(g);
  const int k = static_cast<int>(gens.size());
  std::vector<Permutation> out;
  if (k == 0) return {Permutation{0}};

  // Partial map on the subgroup generated by the first j generators; -1 is
  // unassigned. Extending by one generator either succeeds consistently or
  // shows the chosen image cannot be part of a homomorphism.
  std::vector<int> image(k);
  auto extend = [&](std::vector<int> phi, int j) -> std::optional<std::vector<int>> {
    phi[gens[j]] = image[j];
    std::vector<int> stack;
    for (int x = 0; x < n; ++x)
      if (phi[x] >= 0) stack.push_back(x);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int t = 0; t <= j; ++t) {
        int y = g.mul(x, gens[t]);
        int want = g.mul(phi[x], image[t]);
        if (phi[y] < 0) {
          phi[y] = want;
          stack.push_back(y);
        } else if (phi[y] != want) {
          return std::nullopt;
        }
      }
    }
    std::vector<char> used(n, 0);
    for (int x = 0; x < n; ++x)
      if (phi[x] >= 0) {
        if (used[phi[x]]) return std::nullopt;
        used[phi[x]] = 1;
      }
    return phi;
  };

  std::vector<int> start(n, -1);
  start[0] = 0;
  auto rec = [&](auto&& self, const std::vector<int>& phi, int j) -> void {
    if (j == k) {
      out.push_back(phi);
      if (out.size() > kMaxAutomorphisms)
        throw CapExceeded("automorphism group larger than " + std::to_string(kMaxAutomorphisms));
      return;
    }
    for (int y = 1; y < n; ++y) {
      if (g.element_order(y) != g.element_order(gens[j])) continue;
      image[j] = y;
      if (auto next = extend(phi, j)) self(self, *next, j + 1);
    }
  };
  rec(rec, start, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_vectors(const GroupTable& g, const Signature& sig) {
  if (sig.orbit_genus != 0) throw PreconditionError("only genus-zero quotients are supported");
  const int r = sig.period_count();
  if (r > kMaxTupleLength) throw CapExceeded("at most " + std::to_string(kMaxTupleLength) + " periods supported");
  std::vector<std::vector<int>> out;
  if (r == 0) {
    if (g.order() == 1) out.push_back({});
    return out;
  }
  std::map<int, std::vector<int>> by_order;
  for (int x = 0; x < g.order(); ++x) by_order[g.element_order(x)].push_back(x);

  std::vector<int> order(sig.periods);
  std::sort(order.begin(), order.end());
  std::vector<int> c(r);
  do {
    auto rec = [&](auto&& self, int i, int prefix) -> void {
      if (i == r - 1) {
        int last = g.inv(prefix);
        if (g.element_order(last) != order[i]) return;
        c[i] = last;
        if (static_cast<int>(g.generated(c).size()) != g.order()) return;
        out.push_back(c);
        if (out.size() > kMaxVectors)
          throw CapExceeded("more than " + std::to_string(kMaxVectors) + " generating vectors");
        return;
      }
      for (int x : by_order[order[i]]) {
        c[i] = x;
        self(self, i + 1, g.mul(prefix, x));
      }
    };
    rec(rec, 0, 0);
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return pack(a) < pack(b); });
  return out;
}

std::pair<std::vector<int>, int> orbit_labels(const GroupTable& g, const Signature& sig,
                                              const std::vector<std::vector<int>>& vectors) {
  const int r = sig.period_count();
  std::vector<std::uint64_t> keys;
  keys.reserve(vectors.size());
  for (const auto& v : vectors) keys.push_back(pack(v));
  if (!std::is_sorted(keys.begin(), keys.end())) throw std::logic_error("vectors must be sorted");
  auto index_of = [&](const std::vector<int>& v) {
    auto it = std::lower_bound(keys.begin(), keys.end(), pack(v));
    if (it == keys.end() || *it != pack(v)) throw std::logic_error("vector set not closed under the moves");
    return static_cast<int>(it - keys.begin());
  };
  const auto aut_gens = permutation_generators(automorphisms(g));
  UnionFind uf(vectors.size());
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    const auto& v = vectors[idx];
    for (int i = 0; i + 1 < r; ++i) uf.unite(static_cast<int>(idx), index_of(braid_move(g, v, i)));
    for (const auto& a : aut_gens) {
      std::vector<int> w(r);
      for (int i = 0; i < r; ++i) w[i] = a[v[i]];
      uf.unite(static_cast<int>(idx), index_of(w));
    }
  }
  std::vector<int> labels(vectors.size());
  std::unordered_map<int, int> root_label;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    int root = uf.find(static_cast<int>(idx));
    auto [it, fresh] = root_label.try_emplace(root, static_cast<int>(root_label.size()));
    labels[idx] = it->second;
  }
  return {labels, static_cast<int>(root_label.size())};
}

OrbitCount count_orbits(const GroupTable& g, const Signature& sig) {
  const auto vectors = enumerate_vectors(g, sig);
  const auto [labels, count] = orbit_labels(g, sig, vectors);
  OrbitCount out;
  out.orbits = count;
  out.vectors = static_cast<std::int64_t>(vectors.size());
  out.representatives.assign(count, {});
  std::vector<char> have(count, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    bool in_order = true;
    for (int j = 0; j < sig.period_count(); ++j)
      if (g.element_order(vectors[i][j]) != sig.periods[j]) in_order = false;
    if (in_order) ++out.vectors_in_order;
    if (!have[labels[i]]) {  // vectors are in increasing key order
      have[labels[i]] = 1;
      out.representatives[labels[i]] = vectors[i];
    }
  }
  return out;
}

std::int64_t fixed_point_count(const GroupTable& g, const std::vector<int>& c, int h) {
  if (h == 0) throw UsageError("the identity fixes every point");
  std::vector<char> conj(g.order(), 0);
  std::int64_t centraliser = 0;
  for (int x = 0; x < g.order(); ++x) {
    conj[g.mul(g.mul(g.inv(x), h), x)] = 1;
    if (g.mul(x, h) == g.mul(h, x)) ++centraliser;
  }
  Rational total = 0;
  for (int ci : c) {
    std::int64_t hits = 0;
    const int m = g.element_order(ci);
    for (int k = 1, y = ci; k < m; ++k, y = g.mul(y, ci))
      if (conj[y]) ++hits;
    total += Rational(centraliser * hits, m);
  }
  if (!is_integral(total)) throw std::logic_error("non-integral fixed point count");
  return static_cast<std::int64_t>(numerator(total));
}

Rational tuple_genus(const GroupTable& g, const std::vector<int>& c) {
  std::vector<int> periods;
  for (int x : c) periods.push_back(g.element_order(x));
  return riemann_hurwitz_genus(BigInt(g.order()), Signature(0, periods));
}

std::string to_string(KKind k) {
  switch (k) {
    case KKind::cyclic: return "cyclic";
    case KKind::dihedral: return "dihedral";
    case KKind::a4: return "A4";
    case KKind::s4: return "S4";
    case KKind::a5: return "A5";
  }
  return "?";
}

std::optional<KPattern> classify_k_pattern(std::vector<int> orders) {
  std::sort(orders.begin(), orders.end());
  for (int o : orders)
    if (o < 2) return std::nullopt;
  KPattern k{KKind::cyclic, 0, static_cast<int>(orders.size()), orders};
  if (orders.size() == 2) {
    if (orders[0] != orders[1]) return std::nullopt;
    k.n = orders[0];
    return k;
  }
  if (orders.size() != 3) return std::nullopt;
  if (orders[0] == 2 && orders[1] == 2) {
    k.kind = KKind::dihedral;
    k.n = orders[2];
    return k;
  }
  if (orders[0] == 2 && orders[1] == 3) {
    if (orders[2] == 3) k.kind = KKind::a4;
    else if (orders[2] == 4) k.kind = KKind::s4;
    else if (orders[2] == 5) k.kind = KKind::a5;
    else return std::nullopt;
    return k;
  }
  return std::nullopt;
}

std::set<int> compatible_generator_orders(int p, int image_order) {
  if (image_order < 1) throw UsageError("image order must be positive");
  if (image_order == 1) return {p};
  return {image_order, image_order * p};
}

bool order_profiles_equal_kernels(const OrderProfile& a, const OrderProfile& b) {
  if (a.size() != b.size()) throw UsageError("order profiles have different lengths");
  return a == b;
}

bool same_kernel(const GroupTable& k, const std::vector<int>& images1, const std::vector<int>& images2) {
  if (images1.size() != images2.size()) throw UsageError("image tuples have different lengths");
  for (const auto* im : {&images1, &images2})
    if (static_cast<int>(k.generated(*im).size()) != k.order())
      throw PreconditionError("images do not generate the quotient");
  for (const auto& a : automorphisms(k)) {
    bool ok = true;
    for (std::size_t i = 0; i < images1.size() && ok; ++i) ok = a[images2[i]] == images1[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace eag
