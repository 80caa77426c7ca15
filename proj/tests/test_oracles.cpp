#include <catch2/catch_amalgamated.hpp>

#include "compeig/oracles.hpp"
#include "compeig/random_gen.hpp"
#include "compeig/tensor_core.hpp"

using namespace compeig;

TEST_CASE("permutation determinant on frozen matrices") {
  const ComplexMatrix a(2, 2, {1, 2, 3, 4});
  CHECK(std::abs(oracle::det_by_permutations(a) - cplx{-2.0, 0.0}) < 1e-14);
  const ComplexMatrix b(3, 3, {2, 0, 1, 0, 3, 0, 1, 0, 2});
  CHECK(std::abs(oracle::det_by_permutations(b) - cplx{9.0, 0.0}) < 1e-13);
  CHECK_THROWS_AS(oracle::det_by_permutations(ComplexMatrix(9)), GuardError);
}

TEST_CASE("Kronecker-sum complement oracle on a diagonal matrix") {
  // for A = diag(d1..dn) the order-one complement at (j, j) is the product
  // of the other diagonal entries
  const std::vector<cplx> d{cplx{2.0, 0.0}, cplx{3.0, 0.0}, cplx{5.0, 0.0}};
  const ComplexMatrix a = ComplexMatrix::diagonal(d);
  CHECK(std::abs(oracle::complement_by_kronecker_sum(
                     a, 1, MultiIndex({1}, 3), MultiIndex({1}, 3)) -
                 cplx{15.0, 0.0}) < 1e-12);
  CHECK(std::abs(oracle::complement_by_kronecker_sum(
                     a, 1, MultiIndex({1}, 3), MultiIndex({2}, 3))) < 1e-12);
  // order-two reduced to order one: sum over the shared second index
  const cplx want = d[1] + d[2];  // complements of {1,t} at t = 2, 3
  CHECK(std::abs(oracle::complement_by_kronecker_sum(
                     a, 2, MultiIndex({1}, 3), MultiIndex({1}, 3)) -
                 want) < 1e-12);
  CHECK_THROWS_AS(oracle::complement_by_kronecker_sum(
                      ComplexMatrix(9), 1, MultiIndex({1}, 9),
                      MultiIndex({1}, 9)),
                  GuardError);
}

TEST_CASE("Jacobi oracle on a known 2x2") {
  ComplexMatrix h(2, 2, {1, cplx{0.0, 1.0}, cplx{0.0, -1.0}, 1});
  const auto r = oracle::eig_oracle(h);
  // eigenvalues 0 and 2
  CHECK(std::abs(r.eigenvalues[0] - 0.0) < 1e-12);
  CHECK(std::abs(r.eigenvalues[1] - 2.0) < 1e-12);
  for (int k = 0; k < 2; ++k) {
    Vector v = r.vectors.column(k);
    Vector res = h * v;
    axpy(-cplx{r.eigenvalues[k], 0.0}, v, res);
    CHECK(vec_norm(res) < 1e-12);
  }
}

TEST_CASE("Jacobi oracle reconstructs planted spectra") {
  Rng rng(kDefaultSeed);
  for (const auto& eigs : std::vector<std::vector<double>>{
           {-2.0, 0.5, 1.0, 3.0}, {1.0, 1.0, -1.0}, {0.1, 0.2, 0.3, 0.4, 0.5}}) {
    const PlantedHermitian p = planted_hermitian(eigs, rng);
    const auto r = oracle::eig_oracle(p.h);
    std::vector<double> sorted = eigs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k)
      REQUIRE(std::abs(r.eigenvalues[k] - sorted[k]) < 1e-12);
    const ComplexMatrix gram = r.vectors.adjoint() * r.vectors;
    REQUIRE((gram - ComplexMatrix::identity(r.vectors.n())).max_norm() <
            1e-12);
  }
}

TEST_CASE("Jacobi oracle rejects non-Hermitian input") {
  ComplexMatrix m(2, 2, {1, 2, 3, 4});
  CHECK_THROWS_AS(oracle::eig_oracle(m), HermiticityError);
}

TEST_CASE("subspace angles") {
  const Vector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  SECTION("identical spans give zero angles") {
    const auto a = oracle::subspace_angles({e1, e2}, {e2, e1});
    REQUIRE(a.size() == 2);
    CHECK(a.back() < 1e-12);
  }
  SECTION("orthogonal spans give pi/2") {
    const auto a = oracle::subspace_angles({e1}, {e3});
    CHECK(std::abs(a[0] - M_PI / 2.0) < 1e-12);
  }
  SECTION("45 degree rotation") {
    const double r = 1.0 / std::sqrt(2.0);
    const Vector mixed{r, 0.0, r};
    const auto a = oracle::subspace_angles({e1}, {mixed});
    CHECK(std::abs(a[0] - M_PI / 4.0) < 1e-12);
  }
  SECTION("small angles keep full precision") {
    const double eps = 1e-9;
    const double norm = std::sqrt(1.0 + eps * eps);
    const Vector tilted{1.0 / norm, eps / norm, 0.0};
    const auto a = oracle::subspace_angles({e1}, {tilted});
    CHECK(std::abs(a[0] - eps) < 1e-13);
  }
  SECTION("non-orthonormal inputs are rejected") {
    CHECK_THROWS_AS(oracle::subspace_angles({e1, e1}, {e2}),
                    DegenerateInputError);
    CHECK_THROWS_AS(oracle::subspace_angles({scale(e1, 2.0)}, {e2}),
                    DegenerateInputError);
  }
}
