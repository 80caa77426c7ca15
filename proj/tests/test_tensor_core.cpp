#include <catch2/catch_amalgamated.hpp>

#include "compeig/oracles.hpp"
#include "compeig/random_gen.hpp"
#include "compeig/tensor_core.hpp"

using namespace compeig;

namespace {

ComplexMatrix sample_4x4() {
  return ComplexMatrix(4, 4,
                       {2, 1, 3, 0,  //
                        1, 4, 1, 2,  //
                        0, 2, 5, 1,  //
                        3, 1, 2, 4});
}

}  // namespace

TEST_CASE("minor determinant on a frozen 4x4") {
  const ComplexMatrix a = sample_4x4();
  // rows {1,2}, cols {3,4}: det [[3,0],[1,2]] = 6
  CHECK(std::abs(minor_det(a, MultiIndex({1, 2}, 4), MultiIndex({3, 4}, 4)) -
                 cplx{6.0, 0.0}) < 1e-14);
  CHECK(std::abs(minor_det(a, MultiIndex({2}, 4), MultiIndex({3}, 4)) -
                 cplx{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(minor_det(a, MultiIndex::empty(4), MultiIndex::empty(4)) -
                 cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("determinant routes agree with the permutation oracle") {
  Rng rng(kDefaultSeed);
  for (int n = 1; n <= 7; ++n) {
    const ComplexMatrix a = random_matrix(n, rng);
    const cplx ref = oracle::det_by_permutations(a);
    CHECK(std::abs(det(a) - ref) < 1e-10 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("adjugate of a frozen 2x2") {
  const ComplexMatrix a(2, 2, {1, 2, 3, 4});
  const ComplexMatrix adj = adjugate(a);
  CHECK(std::abs(adj.at(0, 0) - cplx{4.0, 0.0}) < 1e-14);
  CHECK(std::abs(adj.at(0, 1) - cplx{-2.0, 0.0}) < 1e-14);
  CHECK(std::abs(adj.at(1, 0) - cplx{-3.0, 0.0}) < 1e-14);
  CHECK(std::abs(adj.at(1, 1) - cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("A adj(A) = det(A) I") {
  Rng rng(7);
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix p = a * adjugate(a);
    const ComplexMatrix want = ComplexMatrix::identity(n) * det(a);
    CHECK((p - want).max_norm() < 1e-10 * (1.0 + want.max_norm()));
  }
}

TEST_CASE("complement matches the literal Kronecker-sum oracle") {
  Rng rng(11);
  for (int n = 2; n <= 5; ++n) {
    const ComplexMatrix a = random_matrix(n, rng);
    for (int s = 1; s <= n; ++s)
      for (int r = 1; r <= s; ++r)
        for (const MultiIndex& j : MultiIndex::subsets(n, r))
          for (const MultiIndex& i : MultiIndex::subsets(n, r)) {
            const cplx fast = complement(a, s, j, i);
            const cplx ref = oracle::complement_by_kronecker_sum(a, s, j, i);
            REQUIRE(std::abs(fast - ref) < 1e-10 * (1.0 + std::abs(ref)));
          }
  }
}

TEST_CASE("antisymmetry of minor and complement tensors") {
  Rng rng(13);
  const int n = 5;
  const ComplexMatrix a = random_matrix(n, rng);
  for (int r = 2; r <= 3; ++r) {
    const AntisymTensor mt = minor_tensor(a, r);
    const AntisymTensor ct = complement_tensor(a, r);
    // swapping the first two upper indices flips the sign; a repeat kills it
    std::vector<int> u(r), l(r);
    for (int k = 0; k < r; ++k) u[k] = l[k] = k + 1;
    std::vector<int> u_swapped = u;
    std::swap(u_swapped[0], u_swapped[1]);
    for (const AntisymTensor* t : {&mt, &ct}) {
      CHECK(std::abs(t->evaluate(u, l) + t->evaluate(u_swapped, l)) < 1e-12);
      std::vector<int> u_repeat = u;
      u_repeat[1] = u_repeat[0];
      CHECK(std::abs(t->evaluate(u_repeat, l)) == 0.0);
    }
  }
}

TEST_CASE("minor tensor reproduces minor_det at canonical indices") {
  Rng rng(17);
  const int n = 5;
  const ComplexMatrix a = random_matrix(n, rng);
  for (int s = 1; s <= n; ++s) {
    const AntisymTensor t = minor_tensor(a, s);
    for (const MultiIndex& j : MultiIndex::subsets(n, s))
      for (const MultiIndex& i : MultiIndex::subsets(n, s))
        REQUIRE(std::abs(t.at(j, i) - minor_det(a, j, i)) < 1e-14);
  }
}

TEST_CASE("complement of the 2x2 generic matrix") {
  const cplx b{2.0, 1.0}, c{-1.0, 3.0};
  const ComplexMatrix a(2, 2, {cplx{1.0, 0.0}, b, c, cplx{4.0, 0.0}});
  // order-one complement at (j, i) = (1, 2) picks the off-diagonal entry
  // of the adjugate: -b
  CHECK(std::abs(complement(a, 1, MultiIndex({1}, 2), MultiIndex({2}, 2)) +
                 b) < 1e-14);
  CHECK(std::abs(complement(a, 1, MultiIndex({2}, 2), MultiIndex({1}, 2)) +
                 c) < 1e-14);
}

TEST_CASE("full contraction of the order-s complement gives det A") {
  Rng rng(19);
  const int n = 4;
  const ComplexMatrix a = random_matrix(n, rng);
  for (int s = 1; s <= n; ++s) {
    const IdentityCheckResult c = check_corollary1(a, s, 1e-10);
    CHECK(c.pass);
  }
}

TEST_CASE("contraction identity at sampled free indices, 4x4 and 5x5") {
  Rng rng(23);
  for (int n : {4, 5}) {
    const ComplexMatrix a = random_matrix(n, rng);
    for (int s = 1; s <= 3; ++s)
      for (int r = 1; r <= s; ++r) {
        Lemma1Indices t;
        t.j = 1 + (s % n);
        t.i = 1 + ((s + 1) % n);
        for (int k = 0; k < r - 1; ++k) {
          t.upper_rest.push_back(1 + ((2 * k + 1) % n));
          t.lower_rest.push_back(1 + ((2 * k) % n));
        }
        const IdentityCheckResult c = check_lemma1(a, r, s, t, 1e-10);
        INFO("n=" << n << " r=" << r << " s=" << s);
        CHECK(c.pass);
      }
  }
}

TEST_CASE("contraction identity over all free indices, 3x3") {
  Rng rng(29);
  const ComplexMatrix a = random_matrix(3, rng);
  for (int s = 1; s <= 3; ++s)
    for (int r = 1; r <= s; ++r) CHECK(check_lemma1(a, r, s, 1e-10).pass);
}

TEST_CASE("product minors on rectangular integer matrices") {
  Rng rng(31);
  const ComplexMatrix a = random_integer_matrix(4, 6, rng);
  const ComplexMatrix b = random_integer_matrix(6, 4, rng);
  for (int s = 1; s <= 4; ++s)
    for (const MultiIndex& j : MultiIndex::subsets(4, s))
      for (const MultiIndex& i : MultiIndex::subsets(4, s)) {
        const IdentityCheckResult c = cauchy_binet(a, b, j, i, 1e-12);
        REQUIRE(c.pass);
        REQUIRE(c.max_abs_dev < 1e-8);  // integer inputs: exact up to rounding
      }
}

TEST_CASE("guards and argument validation") {
  const ComplexMatrix a(3);
  CHECK_THROWS_AS(complement(a, 4, MultiIndex({1}, 3), MultiIndex({1}, 3)),
                  OrderError);
  CHECK_THROWS_AS(complement(a, 1, MultiIndex({1, 2}, 3), MultiIndex({1}, 3)),
                  ShapeError);
  CHECK_THROWS_AS(minor_tensor(a, 4), OrderError);
  const ComplexMatrix big(13);
  CHECK_THROWS_AS(complement(big, 1, MultiIndex({1}, 13), MultiIndex({1}, 13)),
                  GuardError);
}
