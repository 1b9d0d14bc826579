#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lsac/cochain.hpp"
#include "testalgs.hpp"

using namespace lsac;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Cochain<Rational> unit_cochain(const CochainIndex& idx) {
  Cochain<Rational> c;
  c.degree = idx.degree();
  c.coeffs.emplace(idx, Rational(1));
  return c;
}

std::mt19937_64 rng(424242);

Cochain<Rational> random_cochain(const Subalgebra& g, const GModuleAction& V, int k) {
  auto basis = enumerate_basis(g, V, k);
  std::uniform_int_distribution<long> coeff(-4, 4);
  Cochain<Rational> c;
  c.degree = k;
  for (const auto& idx : basis) c.set(idx, Rational(coeff(rng)));
  return c;
}

}  // namespace

TEST_CASE("basis enumeration counts n * C(m, k)") {
  AlgebraInput ms7 = testalgs::load_data("ms7.alg");
  CHECK(enumerate_basis(ms7.g, ms7.module, 4).size() == 35);
  CHECK(enumerate_basis(ms7.g, ms7.module, 0).size() == 7);  // one per target
  CHECK(enumerate_basis(ms7.g, ms7.module, 6).empty());      // k > m

  AlgebraInput ams8 = testalgs::load_data("ams8.alg");
  CHECK(enumerate_basis(ams8.g, ams8.module, 2).size() == 24);

  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);
  for (int k = 0; k <= 4; ++k)
    CHECK(static_cast<long long>(enumerate_basis(whole, adj, k).size()) == 4 * binom(4, k));
}

TEST_CASE("canonical order reproduces the worked example's variable numbering") {
  // ms7 declares h = (l1, l2, d, t1, t2, t3, r) and g = (l1, l2, t1, t2, t3);
  // the 4-cochain variables then number x1..x35 with x29 = l2^t1^t2^t3 (x) l1.
  AlgebraInput ms7 = testalgs::load_data("ms7.alg");
  auto basis = enumerate_basis(ms7.g, ms7.module, 4);
  REQUIRE(basis.size() == 35);
  CHECK(basis[28].evens == std::vector<int>{1, 2, 3, 4});
  CHECK(basis[28].target == 0);
  CHECK(render_index(basis[28], ms7.g, ms7.module) == "l2*^t1*^t2*^t3*⊗l1");
  CHECK(basis[0].evens == std::vector<int>{0, 1, 2, 3});
  CHECK(basis[0].target == 0);
  CHECK(std::is_sorted(basis.begin(), basis.end(),
                       [](const CochainIndex& a, const CochainIndex& b) { return a < b; }));
}

TEST_CASE("mixed-parity enumeration puts larger even parts first") {
  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);
  auto basis = enumerate_basis(whole, adj, 2);
  REQUIRE(basis.size() == 4 * 6);
  CHECK(basis.front().evens == std::vector<int>{0, 1});  // (e1,e2 | )
  CHECK(basis.front().odds.empty());
  CHECK(basis.back().evens.empty());                     // ( | o3,o4)
  CHECK(basis.back().odds == std::vector<int>{2, 3});
}

TEST_CASE("evaluation signs") {
  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);

  Cochain<Rational> even_pair = unit_cochain({{0, 1}, {}, 2});
  std::vector<int> swapped = {1, 0};
  auto v = evaluate(whole, even_pair, std::span<const int>(swapped));
  REQUIRE(v.count(2));
  CHECK(v[2] == Rational(-1));  // even-even transposition is skew

  std::vector<int> repeated = {0, 0};
  CHECK(evaluate(whole, even_pair, std::span<const int>(repeated)).empty());

  Cochain<Rational> odd_pair = unit_cochain({{}, {2, 3}, 0});
  std::vector<int> odd_swapped = {3, 2};
  auto w = evaluate(whole, odd_pair, std::span<const int>(odd_swapped));
  REQUIRE(w.count(0));
  CHECK(w[0] == Rational(1));  // odd-odd transposition is symmetric

  std::vector<int> mixed = {2, 0};  // (o3, e1) -> -(e1, o3)
  Cochain<Rational> eo = unit_cochain({{0}, {2}, 1});
  auto u = evaluate(whole, eo, std::span<const int>(mixed));
  REQUIRE(u.count(1));
  CHECK(u[1] == Rational(-1));

  std::vector<int> repeated_odd = {2, 2};
  CHECK(evaluate(whole, odd_pair, std::span<const int>(repeated_odd)).empty());
}

TEST_CASE("evaluate is super skew under random adjacent transpositions") {
  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);
  std::uniform_int_distribution<int> member(0, 3);
  for (int k = 2; k <= 4; ++k) {
    Cochain<Rational> phi = random_cochain(whole, adj, k);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> args(k);
      for (int& a : args) a = member(rng);
      std::uniform_int_distribution<int> slot(0, k - 2);
      int s = slot(rng);
      std::vector<int> swapped = args;
      std::swap(swapped[s], swapped[s + 1]);
      int sign = (whole.parity(args[s]) == Parity::odd &&
                  whole.parity(args[s + 1]) == Parity::odd)
                     ? 1
                     : -1;
      auto a = evaluate(whole, phi, std::span<const int>(args));
      auto b = evaluate(whole, phi, std::span<const int>(swapped));
      for (auto& [l, c] : b) c *= Rational(sign);
      vov_prune(b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("standard differential matches hand-expanded coboundary relations") {
  // For a general 1-cochain Psi on the graded 8-dim example,
  //   (d Psi)(t, h1) = (2 psi[d,h1] - 4 psi[h2,t]) t + ...
  //   (d Psi)(h1, h2) has j-component -4 psi[j,t].
  AlgebraInput ams8 = testalgs::load_data("ams8.alg");
  auto basis1 = enumerate_basis(ams8.g, ams8.module, 1);
  REQUIRE(basis1.size() == 24);
  Cochain<LinearForm> psi = symbolic_cochain(basis1, 1);

  auto pos = [&](int member, int target) {
    CochainIndex idx{{member}, {}, target};
    for (int i = 0; i < 24; ++i)
      if (basis1[i] == idx) return i;
    FAIL("index not found");
    return -1;
  };

  std::vector<int> th1 = {0, 1};  // (t, h1)
  auto d1 = differential_standard(ams8.g, ams8.module, psi, std::span<const int>(th1));
  {
    LinearForm expected;                          // targets: t h1 h2 d r i1 i2 j
    expected.add(pos(1, 3), Rational(2));         // 2 psi(h1* (x) d)
    expected.add(pos(0, 2), Rational(-4));        // -4 psi(t* (x) h2)
    REQUIRE(d1.count(0));
    CHECK(d1[0] == expected);
  }
  {
    LinearForm expected;                          // h1-component: psi(h1*(x)i1) - psi(t*(x)d)
    expected.add(pos(1, 5), Rational(1));
    expected.add(pos(0, 3), Rational(-1));
    REQUIRE(d1.count(1));
    CHECK(d1[1] == expected);
  }
  std::vector<int> h1h2 = {1, 2};
  auto d2 = differential_standard(ams8.g, ams8.module, psi, std::span<const int>(h1h2));
  {
    LinearForm expected;
    expected.add(pos(0, 7), Rational(-4));        // -4 psi(t* (x) j)
    REQUIRE(d2.count(7));
    CHECK(d2[7] == expected);
  }
}

TEST_CASE("standard differential vanishes on an abelian algebra with trivial action") {
  LieSuperAlgebra ab({"a", "b", "c"}, std::vector<Parity>(3, Parity::even), {});
  Subalgebra g(ab, {0, 1, 2});
  GModuleAction trivial({"v"}, std::vector<std::vector<SparseVec>>(3, std::vector<SparseVec>(1)));
  for (int k = 0; k <= 2; ++k) {
    Cochain<Rational> phi = random_cochain(g, trivial, k);
    for (const ArgTuple& t : enumerate_arg_tuples(g, k + 1))
      CHECK(differential_standard(g, trivial, phi, std::span<const int>(t.evens)).empty());
  }
}

TEST_CASE("super differential on one even and one odd basis vector with [o,o] = e") {
  LieSuperAlgebra oh = testalgs::odd_heisenberg();
  Subalgebra g(oh, {0, 1});
  GModuleAction trivial({"v"}, std::vector<std::vector<SparseVec>>(2, std::vector<SparseVec>(1)));
  // Phi = e* (x) v; (d Phi)(o, o) = Phi([o,o]) = Phi(e) = v (odd-odd sum, sign +1)
  Cochain<Rational> phi = unit_cochain({{0}, {}, 0});
  std::vector<int> evens = {};
  std::vector<int> odds = {1, 1};
  auto v = differential_super(g, trivial, phi, std::span<const int>(evens),
                              std::span<const int>(odds));
  REQUIRE(v.count(0));
  CHECK(v[0] == Rational(1));

  CHECK_THROWS_AS(differential_super(g, trivial, phi, std::span<const int>(odds),
                                     std::span<const int>(evens)),
                  ParityMismatch);
  std::vector<int> eo = {0, 1};
  CHECK_THROWS_AS(differential_standard(g, trivial, phi, std::span<const int>(eo)),
                  ParityMismatch);
}

TEST_CASE("super differential restricted to even arguments is minus the standard one") {
  std::mt19937_64 local(777);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = testalgs::random_case(local, 5);
    const int m = c.g.dim();
    for (int k = 1; k <= std::min(3, m - 1); ++k) {
      Cochain<Rational> phi = random_cochain(c.g, c.module, k);
      for (const ArgTuple& t : enumerate_arg_tuples(c.g, k + 1)) {
        auto std_val = differential_standard(c.g, c.module, phi, std::span<const int>(t.evens));
        auto sup_val = differential_super(c.g, c.module, phi, std::span<const int>(t.evens),
                                          std::span<const int>(t.odds));
        for (auto& [l, coeff] : sup_val) coeff = -coeff;
        vov_prune(sup_val);
        CHECK(std_val == sup_val);
      }
    }
  }
}

TEST_CASE("differential output is super skew in its arguments") {
  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);
  std::uniform_int_distribution<int> even_member(0, 1);
  std::uniform_int_distribution<int> odd_member(2, 3);
  Cochain<Rational> phi = random_cochain(whole, adj, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> evens = {even_member(rng), even_member(rng)};
    std::vector<int> odds = {odd_member(rng)};
    auto base = differential_super(whole, adj, phi, std::span<const int>(evens),
                                   std::span<const int>(odds));
    // swapping the two evens flips the sign
    std::vector<int> swapped = {evens[1], evens[0]};
    auto flipped = differential_super(whole, adj, phi, std::span<const int>(swapped),
                                      std::span<const int>(odds));
    for (auto& [l, coeff] : flipped) coeff = -coeff;
    vov_prune(flipped);
    auto pruned = base;
    vov_prune(pruned);
    CHECK(pruned == flipped);
  }
  // swapping two odds leaves the value unchanged
  Cochain<Rational> phi3 = random_cochain(whole, adj, 2);
  std::vector<int> evens1 = {0};
  std::vector<int> odds2 = {2, 3};
  std::vector<int> odds2r = {3, 2};
  CHECK(differential_super(whole, adj, phi3, std::span<const int>(evens1),
                           std::span<const int>(odds2)) ==
        differential_super(whole, adj, phi3, std::span<const int>(evens1),
                           std::span<const int>(odds2r)));
}

TEST_CASE("dd vanishes symbolically on valid inputs") {
  AlgebraInput ms7 = testalgs::load_data("ms7.alg");
  for (int k = 0; k <= 3; ++k) CHECK(compose_check(ms7.g, ms7.module, k).ok());

  AlgebraInput ams8 = testalgs::load_data("ams8.alg");
  for (int k = 0; k <= 1; ++k) CHECK(compose_check(ams8.g, ams8.module, k).ok());

  LieSuperAlgebra g11 = testalgs::gl11();
  Subalgebra whole(g11, {0, 1, 2, 3});
  GModuleAction adj = GModuleAction::adjoint(whole);
  for (int k = 0; k <= 3; ++k) CHECK(compose_check(whole, adj, k).ok());
}

TEST_CASE("dd detects a Jacobi violation") {
  // [e1,e2] = e3, [e1,e3] = e1: not a Lie algebra; validation skipped on purpose.
  LieSuperAlgebra bad({"e1", "e2", "e3"}, std::vector<Parity>(3, Parity::even),
                      {{0, 1, {{2, Rational(1)}}}, {0, 2, {{0, Rational(1)}}}});
  REQUIRE(!bad.validate().empty());
  Subalgebra g(bad, {0, 1, 2});
  GModuleAction adj = GModuleAction::adjoint(g);
  bool nonzero = false;
  for (int k = 0; k <= 1; ++k)
    if (!compose_check(g, adj, k).ok()) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("dd vanishes on random valid algebras") {
  std::mt19937_64 local(5150);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = testalgs::random_case(local, 5);
    CAPTURE(c.description);
    for (int k = 0; k <= std::min(2, c.g.dim() - 1); ++k)
      CHECK(compose_check(c.g, c.module, k).ok());
  }
}

TEST_CASE("cochain rendering") {
  AlgebraInput ms7 = testalgs::load_data("ms7.alg");
  auto basis = enumerate_basis(ms7.g, ms7.module, 4);
  Cochain<Rational> c;
  c.degree = 4;
  c.coeffs.emplace(basis[27], Rational(1));   // l1^t1^t2^t3 (x) r
  c.coeffs.emplace(basis[30], Rational(-3));  // l2^t1^t2^t3 (x) d
  CHECK(render_cochain(c, ms7.g, ms7.module) ==
        "l1*^t1*^t2*^t3*⊗r - 3*l2*^t1*^t2*^t3*⊗d");
  CHECK(render_cochain(Cochain<Rational>{}, ms7.g, ms7.module) == "0");
}
