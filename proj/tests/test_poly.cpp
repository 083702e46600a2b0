#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ci2/conditions.hpp"
#include "ci2/poly.hpp"
#include "ci2/upoly.hpp"
#include "support/mk.hpp"

#include <algorithm>

using namespace ci2;

namespace {

Poly<Fp> random_poly(const FieldSpec& f, size_t nvars, uint32_t deg, Rng& rng) {
  Poly<Fp> r(nvars);
  for (const auto& m : monomials_of_degree(nvars, deg))
    if (rng.below(2) == 0) r.add_term(m, FieldOps<Fp>::random(f, rng));
  return r;
}

}  // namespace

TEST_CASE("evaluation fixtures") {
  // x0*x1 + x2^2 at (1,1,0) -> 1, at origin -> 0
  auto f = mkq(3, {{1, {1, 1, 0}}, {1, {0, 0, 2}}});
  CHECK(f.eval({BigRat(1), BigRat(1), BigRat(0)}) == 1);
  CHECK(f.eval({BigRat(0), BigRat(0), BigRat(0)}) == 0);
  CHECK(f.eval({BigRat(2), BigRat(3), BigRat(5)}) == 31);
  // x0^2 over F5 at x0 = 3 -> 9 = 4
  auto g = mkp(5, 1, {{1, {2}}});
  CHECK(g.eval({Fp(3, 5)}).value() == 4);
}

TEST_CASE("ring axioms on random triples") {
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(f101, 3, 1 + rng.below(3), rng);
    auto b = random_poly(f101, 3, 1 + rng.below(3), rng);
    auto c = random_poly(f101, 3, 1 + rng.below(3), rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly<Fp>::zero(3));
    CHECK(a + Poly<Fp>::zero(3) == a);
  }
}

TEST_CASE("degree of a product adds over a field") {
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(f101, 3, rng.below(4), rng);
    auto b = random_poly(f101, 3, rng.below(4), rng);
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).is_zero());
      continue;
    }
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("products of homogeneous polynomials stay homogeneous") {
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Poly<Fp> a(4), b(4);
    for (const auto& m : monomials_of_degree(4, 2)) a.add_term(m, FieldOps<Fp>::random(f101, rng));
    for (const auto& m : monomials_of_degree(4, 3)) b.add_term(m, FieldOps<Fp>::random(f101, rng));
    CHECK(a.is_homogeneous());
    CHECK(b.is_homogeneous());
    auto ab = a * b;
    CHECK(ab.is_homogeneous());
    if (!ab.is_zero()) CHECK(ab.degree() == 5);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(f101, 3, 1 + rng.below(3), rng);
    auto b = random_poly(f101, 3, 1 + rng.below(3), rng);
    std::vector<Fp> x;
    for (int i = 0; i < 3; ++i) x.push_back(FieldOps<Fp>::random(f101, rng));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("squarefree detection by line restriction") {
  FieldSpec q = FieldSpec::rationals();
  Rng rng(21);
  // x0*x1 is squarefree
  auto f = mkq(2, {{1, {1, 1}}});
  CHECK(squarefree_probabilistic(f, q, 8, rng).verdict == Verdict::pass);
  // (x0 + x1)^2 has a repeated factor
  auto l = mkq(2, {{1, {1, 0}}, {1, {0, 1}}});
  CHECK(squarefree_probabilistic(l * l, q, 8, rng).verdict == Verdict::fail);
  // x0^2*x1 + x0*x1^2 = x0*x1*(x0+x1) over F101 with 8 trials
  auto g = mkp(101, 2, {{1, {2, 1}}, {1, {1, 2}}});
  Rng rng2(5);
  auto sq = squarefree_probabilistic(g, FieldSpec::prime_field(101), 8, rng2);
  CHECK(sq.verdict == Verdict::pass);
  // the certifying line restriction really has full degree and trivial gcd
  UPoly<Fp> r = g.restrict_to_line(sq.witness_a, sq.witness_b);
  CHECK(r.degree() == g.degree());
  CHECK(upoly_gcd(r, r.derivative()).degree() == 0);
  // zero polynomial counts as a repeated-factor failure
  CHECK(squarefree_probabilistic(Poly<BigRat>::zero(2), q, 8, rng).verdict == Verdict::fail);
}

TEST_CASE("exact polynomial division") {
  // (x0 + x1)*(x0 - x1) = x0^2 - x1^2
  auto s = mkq(2, {{1, {1, 0}}, {1, {0, 1}}});
  auto d = mkq(2, {{1, {1, 0}}, {-1, {0, 1}}});
  auto prod = mkq(2, {{1, {2, 0}}, {-1, {0, 2}}});
  CHECK(s * d == prod);
  Poly<BigRat> quot;
  CHECK(poly_divides(s, prod, &quot));
  CHECK(quot == d);
  CHECK(!poly_divides(s, mkq(2, {{1, {2, 0}}, {1, {0, 2}}})));
  CHECK_THROWS_AS(poly_divides(Poly<BigRat>::zero(2), prod), std::invalid_argument);
  // divisibility over a prime field
  auto a = mkp(101, 3, {{3, {1, 1, 0}}, {5, {0, 0, 2}}});
  auto b = mkp(101, 3, {{7, {2, 0, 1}}, {1, {0, 1, 0}}});
  Poly<Fp> q2;
  CHECK(poly_divides(a, a * b, &q2));
  CHECK(q2 == b);
}

TEST_CASE("derivatives") {
  // d/dx0 (x0^3 x1 + x1^2) = 3 x0^2 x1
  auto f = mkq(2, {{1, {3, 1}}, {1, {0, 2}}});
  CHECK(f.derivative(0) == mkq(2, {{3, {2, 1}}}));
  CHECK(f.derivative(1) == mkq(2, {{1, {3, 0}}, {2, {0, 1}}}));
  // char p kills exponent-p terms: d/dx (x^5) = 0 over F5
  auto g = mkp(5, 1, {{1, {5}}});
  CHECK(g.derivative(0).is_zero());
}

TEST_CASE("substitution") {
  // f(x0, x1) = x0^2 + x1 with x0 -> y0 + y1, x1 -> y0*y1
  auto f = mkq(2, {{1, {2, 0}}, {1, {0, 1}}});
  auto s0 = mkq(2, {{1, {1, 0}}, {1, {0, 1}}});
  auto s1 = mkq(2, {{1, {1, 1}}});
  auto g = f.subst({s0, s1});
  // (y0+y1)^2 + y0 y1 = y0^2 + 3 y0 y1 + y1^2
  CHECK(g == mkq(2, {{1, {2, 0}}, {3, {1, 1}}, {1, {0, 2}}}));
  // single-variable substitution keeps the ambient ring
  auto h = f.subst_var(1, mkq(2, {{2, {1, 0}}}));  // x1 -> 2 x0
  CHECK(h == mkq(2, {{1, {2, 0}}, {2, {1, 0}}}));
  CHECK(h.nvars() == 2);
  // substitution respects evaluation
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(f101, 2, 1 + rng.below(3), rng);
    auto u = random_poly(f101, 2, 1 + rng.below(2), rng);
    auto v = random_poly(f101, 2, 1 + rng.below(2), rng);
    std::vector<Fp> y{FieldOps<Fp>::random(f101, rng), FieldOps<Fp>::random(f101, rng)};
    CHECK(a.subst({u, v}).eval(y) == a.eval({u.eval(y), v.eval(y)}));
  }
}

TEST_CASE("grevlex order and leading terms") {
  // at equal degree the later variables weigh against a monomial
  Monomial x0sq({2, 0, 0}), x0x1({1, 1, 0}), x1sq({0, 2, 0}), x2sq({0, 0, 2});
  GrevlexLess less;
  CHECK(less(x2sq, x1sq));
  CHECK(less(x1sq, x0x1));
  CHECK(less(x0x1, x0sq));
  CHECK(!less(x0sq, x0sq));
  CHECK(less(x0sq, Monomial({3, 0, 0})));
  auto f = mkq(3, {{1, {2, 0, 0}}, {1, {0, 0, 2}}, {5, {1, 1, 0}}});
  CHECK(f.leading_monomial() == x0sq);
  CHECK(f.leading_coeff() == 1);
}

TEST_CASE("homogeneous components and monomial counts") {
  auto f = mkq(2, {{1, {2, 0}}, {4, {1, 0}}, {7, {0, 0}}});
  CHECK(f.homogeneous_component(2) == mkq(2, {{1, {2, 0}}}));
  CHECK(f.homogeneous_component(1) == mkq(2, {{4, {1, 0}}}));
  CHECK(f.homogeneous_component(3).is_zero());
  // count of degree-d monomials in n variables is binom(n+d-1, d)
  for (size_t n = 1; n <= 4; ++n)
    for (uint32_t d = 0; d <= 5; ++d) {
      auto ms = monomials_of_degree(n, d);
      CHECK(BigInt(ms.size()) == binomial(static_cast<long>(n + d - 1), static_cast<long>(d)));
      CHECK(std::is_sorted(ms.begin(), ms.end(), GrevlexLess{}));
    }
}

TEST_CASE("univariate arithmetic and gcd") {
  using U = UPoly<BigRat>;
  U a(std::vector<BigRat>{BigRat(-1), BigRat(0), BigRat(1)});  // t^2 - 1
  U b(std::vector<BigRat>{BigRat(1), BigRat(1)});              // t + 1
  auto [q, r] = a.divmod(b);
  CHECK(r.is_zero());
  CHECK(q == U(std::vector<BigRat>{BigRat(-1), BigRat(1)}));
  CHECK(upoly_gcd(a, b) == b.monic());
  // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
  U c(std::vector<BigRat>{BigRat(1), BigRat(-2), BigRat(1)});
  CHECK(upoly_gcd(a, c) == U(std::vector<BigRat>{BigRat(-1), BigRat(1)}));
  CHECK(a.eval(BigRat(3)) == 8);
  CHECK(a.derivative() == U(std::vector<BigRat>{BigRat(0), BigRat(2)}));
}

TEST_CASE("line restriction") {
  // f = x0^2 + x1 along x = (1,0) + t(0,1): f(1, t) = 1 + t
  auto f = mkq(2, {{1, {2, 0}}, {1, {0, 1}}});
  auto u = f.restrict_to_line({BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)});
  CHECK(u == UPoly<BigRat>(std::vector<BigRat>{BigRat(1), BigRat(1)}));
  // restriction respects evaluation at sampled t
  FieldSpec f101 = FieldSpec::prime_field(101);
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_poly(f101, 3, 1 + rng.below(3), rng);
    std::vector<Fp> a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(FieldOps<Fp>::random(f101, rng));
      b.push_back(FieldOps<Fp>::random(f101, rng));
    }
    auto rl = g.restrict_to_line(a, b);
    Fp t = FieldOps<Fp>::random(f101, rng);
    std::vector<Fp> x;
    for (int i = 0; i < 3; ++i) x.push_back(a[i] + t * b[i]);
    CHECK(rl.eval(t) == g.eval(x));
  }
}

TEST_CASE("printing") {
  auto f = mkq(3, {{3, {2, 1, 0}}, {1, {0, 0, 3}}, {7, {0, 0, 0}}});
  CHECK(f.str() == "3*x0^2*x1 + x2^3 + 7");
  CHECK(Poly<BigRat>::zero(2).str() == "0");
}
