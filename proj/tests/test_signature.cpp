#include "eag/signature.hpp"

#include <doctest.h>

#include <algorithm>

using namespace eag;

TEST_CASE("signature text round trip") {
  const Signature s(2, {3, 3, 3});
  CHECK(s.str() == "(2; 3,3,3)");
  CHECK(Signature::parse(s.str()) == s);
  CHECK(Signature::parse("(2;3^3)") == s);
  CHECK(Signature::parse("(1; -)") == Signature(1, {}));
  CHECK(Signature::parse("(1;)").unramified());
  CHECK(Signature::parse("(0; 2,5,10)") == Signature(0, {10, 2, 5}));  // multiset comparison
  CHECK_THROWS_AS(Signature::parse("(x; 2)"), UsageError);
  CHECK_THROWS_AS(Signature::parse("(0; 1)"), UsageError);
  CHECK_THROWS_AS(Signature::parse("0; 2,2"), UsageError);
}

TEST_CASE("closed-form genus agrees with Riemann-Hurwitz") {
  for (int p : {2, 3, 5, 7})
    for (int n = 1; n <= 5; ++n)
      for (int rho = 0; rho <= 4; ++rho)
        for (int r = 0; r <= 8; ++r) {
          const EAActionSpec s{p, n, rho, r};
          BigInt order = 1;
          for (int i = 0; i < n; ++i) order *= p;
          CHECK(ea_genus(s) == riemann_hurwitz_genus(order, s.signature()));
        }
  // Classical examples: C_2 with six branch points is genus 2.
  CHECK(riemann_hurwitz_genus(2, Signature(0, {2, 2, 2, 2, 2, 2})) == 2);
  CHECK(riemann_hurwitz_genus(10, Signature(0, {2, 5, 10})) == 2);
}

TEST_CASE("hyperbolic genus is required") {
  CHECK(require_hyperbolic_genus({2, 2, 1, 5}) == 6);
  CHECK_THROWS_AS(require_hyperbolic_genus({2, 1, 0, 2}), DomainError);
  CHECK_THROWS_AS(require_hyperbolic_genus({2, 1, 1, 0}), DomainError);
  CHECK_THROWS_AS(require_hyperbolic_genus({3, 1, 0, 3}), DomainError);  // genus 1
}

TEST_CASE("extension parameters are exactly the solutions of the extension equation") {
  for (int p : {2, 3, 5, 7})
    for (int rho = 0; rho <= 6; ++rho)
      for (int r = 0; r <= 10; ++r) {
        auto got = solve_extension_params(p, rho, r);
        std::vector<ExtensionParams> want;
        if (r % p == 0)
          for (int tau = 0; tau <= rho + 1; ++tau)
            for (int l = 0; l <= 2 * rho + 2; ++l)
              if (2 * rho - 2 == 2 * p * (tau - 1) + l * (p - 1)) want.push_back({tau, l + r / p, l, r / p});
        auto key = [](const ExtensionParams& e) { return std::tuple(e.tau, e.s, e.l, e.m); };
        auto less = [&](const auto& a, const auto& b) { return key(a) < key(b); };
        std::sort(got.begin(), got.end(), less);
        std::sort(want.begin(), want.end(), less);
        CHECK(got == want);
      }
}

TEST_CASE("subgroup signature is consistent with Riemann-Hurwitz") {
  // N = C_2^2 = <x, y> with (0; 2,2,2,2,2) elliptic images x,x,x,x+y,y.
  const Prime p(2);
  const FpVector x(p, {1, 0}), y(p, {0, 1});
  const GeneratingVector v(p, 2, {}, {x, x, x, x + y, y});
  REQUIRE(validate(v));
  const std::vector<FpVector> basis{y};
  const Signature sub = subgroup_signature(v, basis);
  CHECK(sub == Signature(1, {2, 2}));
  CHECK(riemann_hurwitz_genus(2, sub) == riemann_hurwitz_genus(4, Signature(0, {2, 2, 2, 2, 2})));
}
