#include "eag/genvec.hpp"
#include "eag/maximality.hpp"

#include <doctest.h>

using namespace eag;

namespace {

std::optional<std::pair<int, int>> brute_representation(int p, int rho, bool skip_b1) {
  for (int a = -1; a * p <= rho; ++a)
    for (int b = 0; b * (p - 1) / 2 <= rho + p; ++b)
      if (!(skip_b1 && b == 1) && 2 * (a * p + 1) + b * (p - 1) == 2 * rho) return std::pair{a, b};
  return std::nullopt;
}

// C_p with signature (rho; -) sits in C_p^2 = <x, y> with signature
// (tau; p^l), all l elliptic images outside <y>, iff
// 2 rho - 2 = 2p(tau - 1) + l(p - 1) has a solution with l != 1 that can
// generate: l = 0 needs tau >= 1, and l >= 2 elliptic images outside <y>
// can always be chosen to sum to zero.
bool unramified_cyclic_extends(int p, int rho) {
  for (int tau = 0; tau <= rho; ++tau)
    for (int l = 0; l <= 2 * rho; ++l) {
      if (2 * rho - 2 != 2 * p * (tau - 1) + l * (p - 1)) continue;
      if (l == 1) continue;
      if (l == 0 && tau == 0) continue;
      if (tau == 0 && l == 2) continue;  // c, -c span only a line
      return true;
    }
  return false;
}

// Signature of <basis> from membership counts alone.
Signature subgroup_signature_by_counting(const GeneratingVector& v, const std::vector<FpVector>& basis) {
  const int p = v.prime();
  const int n = static_cast<int>(basis.size());
  int inside = 0;
  for (const auto& c : v.elliptic()) {
    std::vector<FpVector> span = basis;
    span.push_back(c);
    if (rank(span) == n) ++inside;
  }
  const int outside = v.period_count() - inside;
  // rho_A - 1 = p (tau - 1) + outside (p - 1) / 2 for an index-p subgroup.
  const int twice = 2 * p * (v.orbit_genus() - 1) + outside * (p - 1);
  return Signature(twice / 2 + 1, std::vector<int>(p * inside, p));
}

}  // namespace

TEST_CASE("documented verdicts") {
  const auto v = is_maximal({2, 3, 0, 5});
  CHECK(v.maximal);
  CHECK(v.rule == "T3.10");
  CHECK(v.evidence != "table-only");
  CHECK_THROWS_AS(is_maximal({3, 1, 1, 6}), PreconditionError);
  CHECK_THROWS_AS(is_maximal({2, 1, 0, 2}), DomainError);
}

TEST_CASE("Frobenius representation matches brute force") {
  CHECK(frobenius_representable(3, 2) == std::pair{-1, 4});
  for (int p : {3, 5, 7, 11, 13})
    for (int rho = 2; rho <= 60; ++rho) {
      CAPTURE(p);
      CAPTURE(rho);
      CHECK(frobenius_representable(p, rho) == brute_representation(p, rho, false));
      CHECK(realizable_frobenius(p, rho) == brute_representation(p, rho, true));
    }
}

TEST_CASE("unramified cyclic maximality follows realizability") {
  for (int p : {3, 5, 7, 11})
    for (int rho = 2; rho <= 30; ++rho) {
      CAPTURE(p);
      CAPTURE(rho);
      CHECK(is_maximal({p, 1, rho, 0}).maximal == !unramified_cyclic_extends(p, rho));
    }
  for (int rho = 2; rho <= 10; ++rho) CHECK_FALSE(is_maximal({2, 1, rho, 0}).maximal);
}

TEST_CASE("witnesses for non-maximal rows") {
  int checked = 0;
  for (int p : {2, 3, 5})
    for (int rho = 0; rho <= 4; ++rho)
      for (int r = 0; r <= 8; ++r)
        for (int n = 1; n <= 2 * rho + r; ++n) {
          const EAActionSpec s{p, n, rho, r};
          const Rational g = ea_genus(s);
          if (!is_integral(g) || g < 2 || g > 1'000'000'000) continue;
          if (!is_unique_action(s) || maximality_label(s).maximal) continue;
          CAPTURE(s);
          const auto w = build_extension_witness(s);
          CHECK(witness_verifies(s, w));
          CHECK(validate(w.vector));
          CHECK(subgroup_signature_by_counting(w.vector, w.subgroup_basis) == s.signature());
          const auto v = is_maximal(s);
          CHECK_FALSE(v.maximal);
          REQUIRE(v.witness.has_value());
          CHECK(witness_verifies(s, *v.witness));
          ++checked;
        }
  CHECK(checked > 20);
}

TEST_CASE("maximal rows admit no extension under exhaustive search") {
  for (int p : {2, 3, 5})
    for (int rho = 0; rho <= 2; ++rho)
      for (int r = 0; r <= 7; ++r)
        for (int n = 1; n <= 2 * rho + r; ++n) {
          const EAActionSpec s{p, n, rho, r};
          const Rational g = ea_genus(s);
          if (!is_integral(g) || g < 2 || g > 1'000'000'000) continue;
          if (!is_unique_action(s) || !maximality_label(s).maximal) continue;
          CAPTURE(s);
          const auto res = search_extension(s);
          CHECK(res.status != SearchResult::Status::found);
          CHECK_FALSE(res.witness.has_value());
        }
}

TEST_CASE("building a witness for a maximal row is refused") {
  CHECK_THROWS_AS(build_extension_witness({2, 3, 0, 5}), PreconditionError);
}
