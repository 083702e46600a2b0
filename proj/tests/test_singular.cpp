#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ci2/singular.hpp"
#include "support/mk.hpp"

#include <algorithm>

using namespace ci2;

namespace {

const std::vector<BigRat> kE0{BigRat(1), BigRat(0), BigRat(0), BigRat(0),
                              BigRat(0), BigRat(0), BigRat(0)};
const FieldSpec kF101 = FieldSpec::prime_field(101);

SymMat<BigRat> diag(std::initializer_list<long long> d) {
  SymMat<BigRat> A(d.size(), BigRat(0));
  size_t i = 0;
  for (long long v : d) {
    A.at(i, i) = BigRat(v);
    ++i;
  }
  return A;
}

}  // namespace

TEST_CASE("point trichotomy") {
  auto setup = AmbientSetup::make(4, 2, 4);
  // independent linear parts z0, z1
  auto f1 = mkq(7, {{1, {1, 1}}, {1, {0, 0, 0, 2}}});
  auto f2 = mkq(7, {{1, {3, 0, 1}}, {1, {0, 0, 0, 0, 4}}});
  auto smooth = classify_point(homogeneous_expansion(setup, f1, f2, kE0));
  CHECK(smooth.kind == PointClass::smooth);
  CHECK(std::string(point_class_name(smooth.kind)) == "smooth");

  // proportional linear parts z0 and 3*z0
  auto g2 = mkq(7, {{3, {3, 1}}, {1, {0, 0, 0, 0, 4}}});
  auto quad = classify_point(homogeneous_expansion(setup, f1, g2, kE0));
  CHECK(quad.kind == PointClass::quadratic);
  CHECK(quad.star_gen == 0);
  CHECK(quad.lambda == 3);

  // both linear parts vanish
  auto h1 = mkq(7, {{1, {0, 2}}, {1, {0, 0, 1, 1}}});
  auto h2 = mkq(7, {{1, {2, 1, 1}}, {1, {0, 0, 0, 0, 4}}});
  auto biq = classify_point(homogeneous_expansion(setup, h1, h2, kE0));
  CHECK(biq.kind == PointClass::biquadratic);
  CHECK(std::string(point_class_name(biq.kind)) == "biquadratic");

  // off-variety expansions are rejected upstream of classification
  std::vector<BigRat> off{BigRat(1), BigRat(1), BigRat(0), BigRat(0),
                          BigRat(0), BigRat(0), BigRat(0)};
  auto pe = expand_pair(setup, f1, f2, off);
  CHECK_THROWS_AS(classify_point(pe), std::invalid_argument);
}

TEST_CASE("quadratic form ranks") {
  BigRat z(0);
  CHECK(quadratic_rank(mkq(3, {{1, {1, 1}}, {1, {0, 0, 2}}}), z) == 3);  // x0*x1 + x2^2
  CHECK(quadratic_rank(Poly<BigRat>::zero(4), z) == 0);
  CHECK(quadratic_rank(mkq(6, {{1, {1, 1}}, {1, {0, 0, 1, 1}}, {1, {0, 0, 0, 0, 2}}}), z) == 5);
  CHECK(quadratic_rank(mkq(2, {{1, {2}}}), z) == 1);
  // off-diagonal pivot fold handles the hyperbolic plane over any odd field
  CHECK(quadratic_rank(mkp(101, 2, {{1, {1, 1}}}), Fp::zero(101)) == 2);
  CHECK_THROWS_AS(from_quadratic_poly(mkq(2, {{1, {1}}}), z), std::invalid_argument);
}

TEST_CASE("point rank at quadratic points") {
  auto setup = AmbientSetup::make(4, 2, 4);
  // lead linear part z0, quad generator linear part zero, quad quadratic part
  // z1*z2 + z3*z4 of rank 4
  auto f1 = mkq(7, {{1, {1, 1}}, {1, {0, 0, 2}}});
  auto f2 = mkq(7, {{1, {2, 0, 1, 1}}, {1, {2, 0, 0, 0, 1, 1}}});
  auto pe = homogeneous_expansion(setup, f1, f2, kE0);
  CHECK(classify_point(pe).kind == PointClass::quadratic);
  CHECK(point_rank(pe) == 4);

  // lambda = 1 with q_{1,2} = z1^2, q_{2,2} = z1^2 + z2^2: difference has rank 1
  auto g1 = mkq(7, {{1, {1, 1}}, {1, {0, 0, 2}}});
  auto g2 = mkq(7, {{1, {3, 1}}, {1, {2, 0, 2}}, {1, {2, 0, 0, 2}}, {1, {0, 0, 0, 0, 4}}});
  auto pe2 = homogeneous_expansion(setup, g1, g2, kE0);
  CHECK(classify_point(pe2).lambda == 1);
  CHECK(point_rank(pe2) == 1);

  // lambda = 2 with q_{1,2} = z1*z2, q_{2,2} = z3^2: z3^2 - 2*z1*z2 has rank 3
  auto h1 = mkq(7, {{1, {1, 1}}, {1, {0, 0, 1, 1}}});
  auto h2 = mkq(7, {{2, {3, 1}}, {1, {2, 0, 0, 0, 2}}, {1, {0, 0, 0, 0, 0, 4}}});
  auto pe3 = homogeneous_expansion(setup, h1, h2, kE0);
  CHECK(classify_point(pe3).lambda == 2);
  CHECK(point_rank(pe3) == 3);

  // smooth points have no point rank
  auto s2 = mkq(7, {{1, {3, 0, 1}}, {1, {0, 0, 0, 0, 4}}});
  CHECK_THROWS_AS(point_rank(homogeneous_expansion(setup, f1, s2, kE0)),
                  std::invalid_argument);
}

TEST_CASE("point rank is symmetric in the generator order") {
  // equal degrees allow literally swapping the pair; lambda inverts
  auto setup = AmbientSetup::make(4, 3, 3);
  auto f1 = mkq(7, {{1, {2, 1}}, {1, {1, 0, 0, 1, 1}}});               // linear z0
  auto f2 = mkq(7, {{2, {2, 1}}, {1, {1, 0, 2}}, {1, {0, 0, 0, 0, 0, 3}}});
  auto pe12 = homogeneous_expansion(setup, f1, f2, kE0);
  auto pe21 = homogeneous_expansion(setup, f2, f1, kE0);
  auto c12 = classify_point(pe12);
  auto c21 = classify_point(pe21);
  CHECK(c12.kind == PointClass::quadratic);
  CHECK(c21.kind == PointClass::quadratic);
  CHECK(c12.lambda == 2);
  CHECK(c21.lambda == BigRat(1, 2));
  CHECK(point_rank(pe12) == point_rank(pe21));
}

TEST_CASE("singular locus dimensions") {
  GrobnerOptions opt;
  // V(x0*x1) in the plane: singular exactly at [0:0:1]
  CHECK(singular_locus_dimension({mkp(101, 3, {{1, {1, 1}}})}, 3, 1, opt).dim == 0);
  // a smooth conic
  CHECK(singular_locus_dimension({mkp(101, 3, {{1, {2}}, {1, {0, 2}}, {1, {0, 0, 2}}})},
                                 3, 1, opt).dim == -1);
  // the quadric cone in 3-space: singular at the vertex
  CHECK(singular_locus_dimension({mkp(101, 4, {{1, {1, 1}}, {-1, {0, 0, 2}}})}, 4, 1, opt)
            .dim == 0);
}

TEST_CASE("singular locus ideal shape") {
  auto f1 = mkq(4, {{1, {2}}});
  auto f2 = mkq(4, {{1, {0, 2}}});
  auto gens = singular_locus_ideal(std::vector<Poly<BigRat>>{f1, f2}, 4, 2);
  // 2 equations + C(2,2)*C(4,2) maximal minors of the 2x4 Jacobian
  CHECK(gens.size() == 2 + 6);
  CHECK(gens[0] == f1);
  CHECK(gens[1] == f2);
  // d(x0^2, x1^2)/d(x0, x1) minor: 2*x0 * 2*x1
  CHECK(gens[2] == mkq(4, {{4, {1, 1}}}));
  CHECK_THROWS_AS(singular_locus_ideal(std::vector<Poly<BigRat>>{f1}, 4, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(singular_locus_ideal(std::vector<Poly<BigRat>>{f1}, 4, 2),
                  std::invalid_argument);
}

TEST_CASE("jacobian and minors") {
  auto f = mkq(3, {{1, {1, 1}}, {1, {0, 0, 2}}});
  auto J = jacobian(std::vector<Poly<BigRat>>{f}, 3);
  REQUIRE(J.size() == 1);
  CHECK(J[0][0] == mkq(3, {{1, {0, 1}}}));
  CHECK(J[0][1] == mkq(3, {{1, {1}}}));
  CHECK(J[0][2] == mkq(3, {{2, {0, 0, 1}}}));

  std::vector<std::vector<Poly<BigRat>>> m{
      {mkq(1, {{1, {1}}}), mkq(1, {{2, {1}}})},
      {mkq(1, {{3, {1}}}), mkq(1, {{4, {1}}})}};
  auto ones = poly_matrix_minors(m, 1);
  CHECK(ones.size() == 4);
  auto dets = poly_matrix_minors(m, 2);
  REQUIRE(dets.size() == 1);
  CHECK(dets[0] == mkq(1, {{-2, {2}}}));  // (1*4 - 2*3) x^2
}

TEST_CASE("pencil profile of a split diagonal pair") {
  // g1 = sum of squares, g2 with weights 1..4: rank drops to 3 exactly at
  // the four weights
  Poly<BigRat> g1(4), g2(4);
  for (size_t i = 0; i < 4; ++i) {
    Monomial m(static_cast<size_t>(4));
    m.e[i] = 2;
    g1.add_term(m, BigRat(1));
    g2.add_term(m, BigRat(static_cast<long long>(i) + 1));
  }
  BigRat z(0);
  auto prof = pencil_rank_profile(from_quadratic_poly(g1, z), from_quadratic_poly(g2, z), 6, 9);
  CHECK(prof.exact);
  CHECK(prof.generic_rank == 4);
  CHECK(prof.rank_at_infinity == 4);
  CHECK(prof.min_rank == 3);
  CHECK(!prof.min_at_infinity);
  CHECK(prof.roots_complete);
  CHECK(prof.drop_members == std::vector<BigRat>{BigRat(1), BigRat(2), BigRat(3), BigRat(4)});
  CHECK(prof.min_observed >= 3);
  REQUIRE(prof.samples.size() == 8);  // member at infinity, lambda = 0, six draws
  CHECK(prof.samples[0].at_infinity);
  CHECK(prof.samples[0].rank == 4);
}

TEST_CASE("degenerate pencil collapses at its double point") {
  auto A = diag({1, 1, 1, 1});
  auto prof = pencil_rank_profile(A, A, 4, 5);
  CHECK(prof.exact);
  CHECK(prof.generic_rank == 4);
  CHECK(prof.min_rank == 0);  // the member at lambda = 1 vanishes identically
  CHECK(prof.drop_members == std::vector<BigRat>{BigRat(1)});
  CHECK(prof.critical_gcd.degree() == 1);
}

TEST_CASE("diagonal pencil minimum is the complement of the largest multiplicity") {
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    size_t n = 2 + rng.below(4);
    std::vector<long long> vals;
    for (size_t i = 0; i < n; ++i) vals.push_back(static_cast<long long>(rng.below(3)) + 1);
    SymMat<BigRat> A(n, BigRat(0)), B(n, BigRat(0));
    for (size_t i = 0; i < n; ++i) {
      A.at(i, i) = BigRat(1);
      B.at(i, i) = BigRat(vals[i]);
    }
    auto prof = pencil_rank_profile(A, B, 4, 77 + trial);
    // members are diag(vals[i] - lambda); the worst drop happens at the most
    // repeated value
    size_t worst = 0;
    for (long long v = 1; v <= 3; ++v) {
      size_t cnt = static_cast<size_t>(std::count(vals.begin(), vals.end(), v));
      worst = std::max(worst, cnt);
    }
    CHECK(prof.min_rank == static_cast<int>(n - worst));
    CHECK(prof.rank_at_infinity == static_cast<int>(n));
  }
}

TEST_CASE("sampled prime-field profile") {
  // full-rank pair over F101: every sampled member keeps full rank under the
  // frozen seed
  SymMat<Fp> A(4, Fp::zero(101)), B(4, Fp::zero(101));
  for (size_t i = 0; i < 4; ++i) {
    A.at(i, i) = Fp(1 + i, 101);
    B.at(i, i) = Fp(7 + 3 * i, 101);
  }
  A.set_sym(0, 1, Fp(5, 101));
  B.set_sym(2, 3, Fp(11, 101));
  auto prof = pencil_rank_profile(A, B, 20, 2);
  CHECK(!prof.exact);
  CHECK(prof.samples.size() == 22);
  CHECK(prof.min_observed == 4);
}

TEST_CASE("symmetric rank is a congruence invariant") {
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + rng.below(4);
    SymMat<Fp> A(n, Fp::zero(101));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        A.set_sym(i, j, FieldOps<Fp>::random(kF101, rng));
    // random invertible change of variables by rejection
    std::vector<std::vector<Fp>> P;
    for (;;) {
      P.assign(n, std::vector<Fp>(n, Fp::zero(101)));
      for (auto& row : P)
        for (auto& x : row) x = FieldOps<Fp>::random(kF101, rng);
      if (matrix_rank(P) == static_cast<int>(n)) break;
    }
    auto B = congruence_transform(A, P, Fp::zero(101));
    CHECK(symmetric_rank(A) == symmetric_rank(B));
  }
}

TEST_CASE("pencil profile of biquadratic points") {
  auto setup = AmbientSetup::make(4, 2, 4);
  auto f1 = mkq(7, {{1, {0, 2}}, {1, {0, 0, 1, 1}}});     // q_{1,2} = z0^2 + z1*z2
  auto f2 = mkq(7, {{1, {2, 0, 0, 0, 2}}, {1, {0, 0, 0, 0, 0, 4}}});  // q_{2,2} = z3^2
  auto pe = homogeneous_expansion(setup, f1, f2, kE0);
  auto prof = point_pencil_profile(pe, 5, 3);
  CHECK(prof.exact);
  CHECK(prof.rank_at_infinity == 3);  // rank of q_{1,2}
  CHECK(prof.samples.size() == 7);
  // quadratic points are rejected
  auto g2 = mkq(7, {{1, {3, 1}}, {1, {0, 0, 0, 0, 4}}});
  auto peq = homogeneous_expansion(setup, f1, g2, kE0);
  CHECK_THROWS_AS(point_pencil_profile(peq, 5, 3), std::invalid_argument);
}

TEST_CASE("matrix rank fixtures") {
  std::vector<std::vector<BigRat>> m{{BigRat(1), BigRat(2)}, {BigRat(2), BigRat(4)}};
  CHECK(matrix_rank(m) == 1);
  std::vector<std::vector<BigRat>> id{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}};
  CHECK(matrix_rank(id) == 2);
  CHECK(matrix_rank(std::vector<std::vector<BigRat>>{}) == 0);
}
