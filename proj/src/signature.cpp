#include "eag/signature.hpp"

#include "eag/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace eag {

Signature::Signature(int rho, std::vector<int> m) : orbit_genus(rho), periods(std::move(m)) {
  if (rho < 0) throw PreconditionError("orbit genus must be non-negative");
  for (int x : periods) {
    if (x < 2) throw PreconditionError("periods must be at least 2");
  }
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad integer '" + std::string(s) + "' in signature");
  }
  return v;
}

}  // namespace

Signature Signature::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.size() < 3 || t.front() != '(' || t.back() != ')') {
    throw UsageError("signature must look like (rho; m1,m2,...)");
  }
  const std::string_view body(t.data() + 1, t.size() - 2);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos) throw UsageError("signature is missing ';'");
  const int rho = parse_int(body.substr(0, semi));
  std::string_view rest = body.substr(semi + 1);
  std::vector<int> periods;
  if (!rest.empty() && rest != "-") {
    while (true) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      const auto caret = item.find('^');
      if (caret == std::string_view::npos) {
        periods.push_back(parse_int(item));
      } else {
        const int m = parse_int(item.substr(0, caret));
        const int k = parse_int(item.substr(caret + 1));
        if (k < 0) throw UsageError("negative exponent in signature");
        periods.insert(periods.end(), k, m);
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  try {
    return Signature(rho, std::move(periods));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

std::string Signature::str() const {
  std::ostringstream os;
  os << '(' << orbit_genus << "; ";
  if (periods.empty()) os << '-';
  for (std::size_t i = 0; i < periods.size(); ++i) os << (i ? "," : "") << periods[i];
  os << ')';
  return os.str();
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.orbit_genus != b.orbit_genus || a.periods.size() != b.periods.size()) return false;
  auto x = a.periods;
  auto y = b.periods;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Signature EAActionSpec::signature() const { return Signature(rho, std::vector<int>(r, p)); }

std::ostream& operator<<(std::ostream& os, const EAActionSpec& s) {
  return os << "p=" << s.p << " n=" << s.n << ' ' << s.signature();
}

Rational riemann_hurwitz_genus(const BigInt& group_order, const Signature& sig) {
  if (group_order < 1) throw PreconditionError("group order must be positive");
  const Rational g(group_order);
  Rational sum = 0;
  for (int m : sig.periods) sum += Rational(1) - Rational(1, m);
  return Rational(1) + g * (sig.orbit_genus - 1) + g * sum / 2;
}

Rational ea_genus(const EAActionSpec& spec) {
  const BigInt p = spec.p;
  const BigInt pn = boost::multiprecision::pow(p, static_cast<unsigned>(spec.n));
  if (spec.n == 0) {
    // p^(n-1) is 1/p here; keep the displayed formula exact.
    return Rational(1) + Rational(pn) * (spec.rho - 1) + Rational(spec.r * (spec.p - 1), 2 * spec.p);
  }
  const BigInt pn1 = pn / p;
  return Rational(1) + Rational(pn) * (spec.rho - 1) + Rational(pn1 * spec.r * (spec.p - 1), 2);
}

int require_hyperbolic_genus(const EAActionSpec& spec) {
  const Rational sigma = ea_genus(spec);
  if (!is_integral(sigma)) {
    throw DomainError("genus " + to_string(sigma) + " is not an integer for " +
                      spec.signature().str());
  }
  if (sigma < 2) {
    throw DomainError("genus " + to_string(sigma) + " < 2 for " + spec.signature().str());
  }
  if (sigma > 1'000'000'000) throw DomainError("genus too large");
  return sigma.convert_to<int>();
}

Signature subgroup_signature(const GeneratingVector& v, std::span<const FpVector> basis) {
  const int n = v.rank();
  const int a = rank(basis);
  if (a != static_cast<int>(basis.size())) throw PreconditionError("subgroup basis is dependent");
  if (a >= n) throw PreconditionError("subgroup must be proper");
  for (const auto& b : basis) {
    if (b.dim() != n || b.prime() != v.prime()) throw PreconditionError("basis in wrong group");
  }
  const int p = v.prime();
  int l = 0;
  std::vector<FpVector> rows(basis.begin(), basis.end());
  for (const auto& c : v.elliptic()) {
    rows.push_back(c);
    if (rank(rows) > a) ++l;
    rows.pop_back();
  }
  const int m = v.period_count() - l;
  const BigInt index = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - a));
  const Rational rho = Rational(1) + Rational(index) * (v.orbit_genus() - 1) +
                       Rational(index) * l * Rational(p - 1, p) / 2;
  if (!is_integral(rho) || rho < 0) {
    throw PreconditionError("inconsistent data: subgroup orbit genus " + to_string(rho));
  }
  const BigInt periods = index * m;
  return Signature(rho.convert_to<int>(), std::vector<int>(periods.convert_to<std::size_t>(), p));
}

std::vector<ExtensionParams> solve_extension_params(int p, int rho, int r) {
  if (rho < 0 || r < 0) throw PreconditionError("rho and r must be non-negative");
  Prime checked(p);
  std::vector<ExtensionParams> out;
  if (r % p != 0) return out;
  const int m = r / p;
  for (int tau = 0; tau <= rho + 1; ++tau) {
    const int rhs = 2 * rho - 2 - 2 * p * (tau - 1);
    if (rhs < 0 || rhs % (p - 1) != 0) continue;
    const int l = rhs / (p - 1);
    out.push_back({tau, l + m, l, m});
  }
  return out;
}

}  // namespace eag
