#include "eag/maximality.hpp"

#include "eag/errors.hpp"
#include "eag/genvec.hpp"

#include <sstream>
#include <stdexcept>

namespace eag {

namespace {

// Basis of the kernel of the functional v -> phi . v.
std::vector<FpVector> kernel_basis(const FpVector& phi) {
  const Prime p = phi.prime();
  const Field f(p);
  const int d = phi.dim();
  int q = 0;
  while (q < d && phi[q] == 0) ++q;
  if (q == d) throw std::logic_error("kernel_basis: zero functional");
  const std::uint8_t inv = f.inv(phi[q]);
  std::vector<FpVector> basis;
  for (int j = 0; j < d; ++j) {
    if (j == q) continue;
    Coeffs c = Coeffs::Zero(d);
    c(j) = 1;
    c(q) = f.neg(f.mul(phi[j], inv));
    basis.emplace_back(p, std::move(c));
  }
  return basis;
}

// Elements of C_p^d written as sums of basis vectors x_1..x_d (1-based).
class Elements {
 public:
  Elements(int p, int d) : p_(p), d_(d) {}
  FpVector e() const { return FpVector::zero(p_, d_); }
  FpVector x(int i) const { return FpVector::unit(p_, d_, i - 1); }
  FpVector sum(int from, int to) const {
    FpVector s = e();
    for (int i = from; i <= to; ++i) s += x(i);
    return s;
  }
  Prime prime() const { return p_; }
  int dim() const { return d_; }

 private:
  Prime p_;
  int d_;
};

ExtensionWitness make_witness(const Elements& el, int tau, std::vector<GeneratingVector::Pair> hyp,
                              std::vector<FpVector> ell, std::vector<FpVector> basis,
                              std::string construction) {
  while (static_cast<int>(hyp.size()) < tau) hyp.emplace_back(el.e(), el.e());
  const int s = static_cast<int>(ell.size());
  GeneratingVector v(el.prime(), el.dim(), std::move(hyp), std::move(ell));
  return {Signature(tau, std::vector<int>(s, el.prime())), std::move(v), std::move(basis),
          std::move(construction)};
}

// Even-weight subspace of F_2^d: x_1 + x_j for j = 2..last.
std::vector<FpVector> even_weight_basis(const Elements& el, int last) {
  std::vector<FpVector> b;
  for (int j = 2; j <= last; ++j) b.push_back(el.x(1) + el.x(j));
  return b;
}

ExtensionWitness first_verified(const EAActionSpec& spec, std::vector<ExtensionWitness> candidates) {
  for (auto& w : candidates) {
    if (witness_verifies(spec, w)) return std::move(w);
  }
  std::ostringstream os;
  os << "no candidate extension witness verifies for " << spec;
  throw std::logic_error(os.str());
}

}  // namespace

bool witness_verifies(const EAActionSpec& spec, const ExtensionWitness& w) {
  const auto& v = w.vector;
  if (v.prime() != spec.p || v.rank() != spec.n + 1) return false;
  if (static_cast<int>(w.subgroup_basis.size()) != spec.n) return false;
  if (!validate(v)) return false;
  if (w.n_signature != Signature(v.orbit_genus(), std::vector<int>(v.period_count(), spec.p))) {
    return false;
  }
  try {
    if (subgroup_signature(v, w.subgroup_basis) != spec.signature()) return false;
  } catch (const PreconditionError&) {
    return false;
  }
  const BigInt order = boost::multiprecision::pow(BigInt(spec.p), static_cast<unsigned>(spec.n + 1));
  return riemann_hurwitz_genus(order, w.n_signature) == ea_genus(spec);
}

std::optional<std::pair<int, int>> frobenius_representable(int p, int rho) {
  if (p % 2 == 0) throw PreconditionError("the criterion needs an odd prime");
  const int half = (p - 1) / 2;
  for (int a = -1; a * p <= rho - 1; ++a) {
    const int rest = rho - 1 - a * p;
    if (rest >= 0 && rest % half == 0) return std::make_pair(a, rest / half);
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> realizable_frobenius(int p, int rho) {
  if (p % 2 == 0) throw PreconditionError("the criterion needs an odd prime");
  const int half = (p - 1) / 2;
  for (int a = -1; a * p <= rho - 1; ++a) {
    const int rest = rho - 1 - a * p;
    if (rest >= 0 && rest % half == 0 && rest / half != 1) return std::make_pair(a, rest / half);
  }
  return std::nullopt;
}

TableLabel maximality_label(const EAActionSpec& s) {
  if (!is_unique_action(s)) {
    std::ostringstream os;
    os << s << " is not a unique action";
    throw PreconditionError(os.str());
  }
  const int p = s.p, n = s.n, rho = s.rho, r = s.r;
  if (r == 0) {
    if (n == 1 && p == 2) return {false, "unramified n=1, p=2"};
    if (n == 1) {
      return realizable_frobenius(p, rho)
                 ? TableLabel{false, "unramified n=1, rho = ap + b(p-1)/2 + 1, b != 1"}
                 : TableLabel{true, "unramified n=1, rho not representable with b != 1"};
    }
    if (n == 2 * rho) return p == 2 ? TableLabel{false, "T4.1"} : TableLabel{true, "T3.2"};
    if (n == 2 * rho - 1) return p == 2 ? TableLabel{false, "T4.6"} : TableLabel{true, "case-12"};
  }
  if (p == 2 && r == 2 && n == 1) return {false, "T4.2"};
  if (p == 2 && r == 2 && n == 2 * rho + 1) return {false, "T4.3"};
  if (p == 2 && r % 2 == 0 && n == 1) return {false, "T4.4"};
  if (p == 3 && r == 3 && n == 1) return {false, "T4.5"};
  if (rho == 0 && n == r - 1) return {true, "T3.1"};
  if (n == r + 2 * rho - 1) return {true, "T3.4"};
  if (r == 2 && n == 1) return {true, "T3.3"};
  if (p == 5 && r == 3 && n == 1) return {true, "T3.5"};
  if (p == 3 && r == 4 && n == 1) return {true, "T3.6"};  // printed twice, rows 6 and 7
  if (p == 3 && r == 5 && n == 1) return {true, "T3.8"};
  if (p == 3 && r == 7 && n == 1) return {true, "T3.9"};
  if (rho == 0 && p == 2 && r == 5 && n == 3) return {true, "T3.10"};
  if (p == 2 && r == 5 && n == 2) return {true, "T3.11"};
  std::ostringstream os;
  os << "unique action " << s << " has no maximality label";
  throw std::logic_error(os.str());
}

ExtensionWitness build_extension_witness(const EAActionSpec& s) {
  const TableLabel label = maximality_label(s);
  if (label.maximal) throw PreconditionError("action is maximal (" + label.rule + ")");
  const int p = s.p, n = s.n, rho = s.rho;
  const Elements el(p, n + 1);
  const std::string& rule = label.rule;
  const auto x = el.x(1);
  const auto y = n + 1 >= 2 ? el.x(2) : el.e();

  if (rule == "T4.2") {
    if (rho % 2 == 1) {
      return first_verified(s, {make_witness(el, (rho - 1) / 2, {}, {x, x, x, x + y, y}, {y},
                                             "(e,...,e,x,x,x,xy,y)")});
    }
    return first_verified(s, {make_witness(el, rho / 2, {}, {x, x + y, y}, {y}, "(e,...,e,x,xy,y)")});
  }
  if (rule == "T4.4") {
    const int k = s.r / 2;
    std::vector<FpVector> ell(k, y);
    if (k % 2 == 1) {
      ell.push_back(x);
      ell.push_back(x + y);
      ell.insert(ell.end(), 2 * rho, x);
    } else {
      ell.insert(ell.end(), 2 * rho + 2, x);
    }
    return first_verified(s, {make_witness(el, 0, {}, ell, {y}, "(y^k, ...) over (0; 2^(k+2rho+2))")});
  }
  if (rule == "T4.5") {
    std::vector<FpVector> ell;
    switch (rho % 3) {
      case 0: ell = {y, x - y, -x}; break;
      case 1: ell = {y, x + y, x + y}; break;
      default: ell = {y, -x + y, -x + y}; break;
    }
    ell.insert(ell.end(), rho, x);
    return first_verified(s, {make_witness(el, 0, {}, ell, {y}, "rho mod 3 construction")});
  }
  if (rule == "T4.1") {
    const int d = 2 * rho + 1;
    std::vector<FpVector> ell;
    for (int i = 1; i <= d; ++i) ell.push_back(el.x(i));
    ell.push_back(el.sum(1, d));
    return first_verified(s, {make_witness(el, 0, {}, ell, even_weight_basis(el, d),
                                           "(x_1,...,x_(2rho+1), x_1...x_(2rho+1))")});
  }
  if (rule == "T4.6") {
    const int d = 2 * rho;
    std::vector<FpVector> ell;
    for (int i = 1; i <= d; ++i) ell.push_back(el.x(i));
    ell.push_back(el.x(1));
    ell.push_back(el.sum(2, d));
    // The printed subgroup basis stops at x_1 x_(2rho-1), one short of rank 2rho-1.
    return first_verified(
        s, {make_witness(el, 0, {}, ell, even_weight_basis(el, d - 1), "printed basis"),
            make_witness(el, 0, {}, ell, even_weight_basis(el, d), "even-weight subgroup")});
  }
  if (rule == "T4.3") {
    const int d = 2 * rho + 2;
    std::vector<FpVector> printed;
    for (int i = 1; i <= 2 * rho - 1; ++i) printed.push_back(el.x(i));
    printed.push_back(el.x(1) + el.x(2) + el.x(d));
    printed.push_back(el.sum(3, d));
    std::vector<FpVector> ell;
    for (int i = 1; i <= d; ++i) ell.push_back(el.x(i));
    ell.push_back(el.sum(1, d));
    return first_verified(
        s, {make_witness(el, 0, {}, printed, even_weight_basis(el, d), "printed vector"),
            make_witness(el, 0, {}, ell, even_weight_basis(el, d),
                         "(x_1,...,x_(2rho+2), x_1...x_(2rho+2))")});
  }
  if (rule == "unramified n=1, p=2") {
    const int k = 2 * (rho - 1);
    std::vector<FpVector> printed{y, y};
    printed.insert(printed.end(), k - 2, x);
    return first_verified(
        s, {make_witness(el, 1, {{y, y}}, printed, {y}, "printed (y,y,y,y,x,...,x)"),
            make_witness(el, 1, {{y, y}}, std::vector<FpVector>(k, x), {y}, "(y,y; x^k)")});
  }
  // Unramified cyclic case with an odd prime.
  const auto ab = realizable_frobenius(p, rho);
  if (!ab) throw std::logic_error("unramified witness requested for a maximal action");
  const int tau = ab->first + 1;
  const int k = ab->second;
  std::vector<ExtensionWitness> candidates;
  if (k > 2) {
    std::vector<FpVector> first(k - 2, x);
    first.push_back(-x + y);
    first.push_back(2 * x - y);
    std::vector<FpVector> second(k - 2, x);
    second.push_back(x + y);
    second.push_back(-((k - 1) * x + y));
    candidates.push_back(make_witness(el, tau, {}, first, {y}, "(e,...,e,x,...,x,x^-1y,x^2y^-1)"));
    candidates.push_back(make_witness(el, tau, {}, second, {y}, "(e,...,e,x,...,x,xy,(x^(k-1)y)^-1)"));
  } else if (k == 2) {
    candidates.push_back(make_witness(el, tau, std::vector<GeneratingVector::Pair>(tau, {x + y, x + y}),
                                      {x, -x}, {y}, "(xy,...,xy,x,x^-1)"));
  } else {
    candidates.push_back(make_witness(el, tau, {{x, y}}, {}, {y}, "(x,y,e,...,e)"));
  }
  return first_verified(s, std::move(candidates));
}

std::optional<std::string> extension_obstruction(const EAActionSpec& s) {
  if (s.r % s.p != 0) return "p does not divide r";
  const auto params = solve_extension_params(s.p, s.rho, s.r);
  if (params.empty()) return "the extension equation has no solution";
  for (const auto& e : params) {
    const bool lone = e.l == 1 || e.s == 1;
    const int max_rank = 2 * e.tau + (e.s > 0 ? e.s - 1 : 0);
    if (!lone && s.n + 1 <= max_rank) return std::nullopt;
  }
  return "every solution of the extension equation exceeds the rank bound or leaves a lone "
         "elliptic image";
}

SearchResult search_extension(const EAActionSpec& spec, std::uint64_t budget) {
  const int p = spec.p;
  const int d = spec.n + 1;
  const Field f{Prime(p)};
  const Elements el(p, d);
  SearchResult res;

  for (const auto& e : solve_extension_params(p, spec.rho, spec.r)) {
    if (e.s == 0) {
      if (e.l == 0 && 2 * e.tau >= d) {
        std::vector<GeneratingVector::Pair> hyp;
        for (int i = 1; i <= d; i += 2) hyp.emplace_back(el.x(i), i + 1 <= d ? el.x(i + 1) : el.e());
        res.witness = make_witness(el, e.tau, std::move(hyp), {}, kernel_basis(el.x(1)), "search");
        res.status = SearchResult::Status::found;
        return res;
      }
      continue;
    }
    if (e.s > kBlockMaxCols) {
      res.status = SearchResult::Status::budget;
      continue;
    }
    // The elliptic images span a d_e-dimensional space; the hyperbolic
    // pairs supply the remaining d - d_e directions.
    for (int de = std::max(1, d - 2 * e.tau); de <= std::min(d, e.s - 1); ++de) {
      if (de > kBlockMaxRows) {
        res.status = SearchResult::Status::budget;
        continue;
      }
      std::uint64_t lambdas = 1;
      for (int i = 0; i < de; ++i) lambdas *= static_cast<std::uint64_t>(p);
      bool out_of_budget = false;
      std::optional<ExtensionWitness> found;
      for_each_rref_until(f, de, e.s - 1, [&](const Block& m) {
        res.work += lambdas;
        if (res.work > budget) {
          out_of_budget = true;
          return true;
        }
        Block w(de, e.s);
        w.leftCols(e.s - 1) = m;
        for (int i = 0; i < de; ++i) {
          int t = 0;
          for (int j = 0; j < e.s - 1; ++j) t += m(i, j);
          w(i, e.s - 1) = f.reduce(-t);
        }
        for (int j = 0; j < e.s; ++j) {
          bool zero = true;
          for (int i = 0; i < de && zero; ++i) zero = w(i, j) == 0;
          if (zero) return false;
        }
        // Functionals on the elliptic span are the combinations lambda of its rows.
        std::vector<int> lambda(de, 0);
        for (std::uint64_t idx = 0; idx < lambdas; ++idx) {
          std::uint64_t t = idx;
          bool nonzero = false;
          for (int i = 0; i < de; ++i) {
            lambda[i] = static_cast<int>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
            nonzero = nonzero || lambda[i] != 0;
          }
          if (!nonzero && de == d) continue;  // the functional must be nonzero on N
          int weight = 0;
          for (int j = 0; j < e.s; ++j) {
            int v = 0;
            for (int i = 0; i < de; ++i) v += lambda[i] * w(i, j);
            if (v % p != 0) ++weight;
          }
          if (weight != e.l) continue;
          std::vector<FpVector> ell;
          for (int j = 0; j < e.s; ++j) {
            Coeffs c = Coeffs::Zero(d);
            for (int i = 0; i < de; ++i) c(i) = w(i, j);
            ell.emplace_back(Prime(p), std::move(c));
          }
          std::vector<GeneratingVector::Pair> hyp;
          for (int i = de + 1; i <= d; i += 2) {
            hyp.emplace_back(el.x(i), i + 1 <= d ? el.x(i + 1) : el.e());
          }
          Coeffs phi = Coeffs::Zero(d);
          if (nonzero) {
            for (int i = 0; i < de; ++i) phi(i) = static_cast<std::uint8_t>(lambda[i]);
          } else {
            phi(de) = 1;
          }
          found = make_witness(el, e.tau, std::move(hyp), std::move(ell),
                               kernel_basis(FpVector(Prime(p), std::move(phi))), "search");
          return true;
        }
        return false;
      });
      if (found) {
        res.witness = std::move(found);
        res.status = SearchResult::Status::found;
        return res;
      }
      if (out_of_budget) {
        res.status = SearchResult::Status::budget;
        return res;
      }
    }
  }
  return res;
}

MaximalityVerdict is_maximal(const EAActionSpec& spec, std::uint64_t search_budget) {
  MaximalityVerdict v;
  v.spec = spec;
  const TableLabel label = maximality_label(spec);
  v.rule = label.rule;
  v.maximal = label.maximal;
  const auto obstruction = extension_obstruction(spec);
  auto disagree = [&](const std::string& why) {
    std::ostringstream os;
    os << "maximality tracks disagree for " << spec << " (" << label.rule << "): " << why;
    throw std::logic_error(os.str());
  };

  if (!label.maximal) {
    if (obstruction) disagree("table says extendable but " + *obstruction);
    v.witness = build_extension_witness(spec);
    v.evidence = "witness";
    const auto search = search_extension(spec, search_budget);
    if (search.status == SearchResult::Status::exhausted) disagree("exhaustive search finds no overgroup");
    v.note = search.status == SearchResult::Status::found ? "search also finds an overgroup"
                                                          : "search beyond budget";
    return v;
  }
  if (obstruction) {
    v.evidence = "obstruction";
    v.note = *obstruction;
    return v;
  }
  const auto search = search_extension(spec, search_budget);
  if (search.status == SearchResult::Status::found) {
    if (!witness_verifies(spec, *search.witness)) throw std::logic_error("search produced a bad witness");
    disagree("exhaustive search finds an overgroup");
  }
  if (search.status == SearchResult::Status::exhausted) {
    v.evidence = "search";
    v.note = "exhaustive search over all extension signatures finds no overgroup";
  } else {
    v.evidence = "table-only";
    v.note = "search beyond budget";
  }
  return v;
}

}  // namespace eag
