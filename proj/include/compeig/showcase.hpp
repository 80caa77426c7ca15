#pragma once

#include <array>
#include <cmath>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"

// Closed-form reference constructions for the two worked fixtures: the
// non-degenerate two-level system and the free Dirac equation with its
// twofold spin degeneracy.

namespace compeig::showcase {

// ---------------------------------------------------------------------------
// Two-level system
// ---------------------------------------------------------------------------

struct TwoLevelParams {
  double v11 = 0.0;
  double v22 = 0.0;
  cplx v12{};  // v21 = conj(v12)
};

inline ComplexMatrix two_level_hamiltonian(const TwoLevelParams& p) {
  ComplexMatrix h(2);
  h.at(0, 0) = p.v11;
  h.at(0, 1) = p.v12;
  h.at(1, 0) = std::conj(p.v12);
  h.at(1, 1) = p.v22;
  return h;
}

struct TwoLevelReference {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double omega = 0.0;
  ComplexMatrix p_plus;   // projector on the upper level
  ComplexMatrix p_minus;  // projector on the lower level
  Vector chi_plus;
  Vector chi_minus;
  ComplexMatrix adj_c_plus;   // adj C(lambda_+), closed form
  ComplexMatrix adj_c_minus;  // adj C(lambda_-), closed form
};

/// Closed-form eigenvalues, projectors and eigenvectors of the two-level
/// Hamiltonian.  Requires omega != 0 (non-degenerate levels).
inline TwoLevelReference two_level_reference(const TwoLevelParams& p) {
  const cplx v21 = std::conj(p.v12);
  const double diff = p.v11 - p.v22;
  const double omega2 = diff * diff + 4.0 * (p.v12 * v21).real();
  const double omega = std::sqrt(std::max(omega2, 0.0));
  if (omega == 0.0)
    throw DegenerateInputError("two-level system with coinciding levels");

  TwoLevelReference r;
  r.omega = omega;
  r.lambda_plus = 0.5 * (p.v11 + p.v22 + omega);
  r.lambda_minus = 0.5 * (p.v11 + p.v22 - omega);

  auto projector = [&](double sign) {
    ComplexMatrix m(2);
    m.at(0, 0) = 0.5 + sign * diff / (2.0 * omega);
    m.at(0, 1) = sign * p.v12 / omega;
    m.at(1, 0) = sign * v21 / omega;
    m.at(1, 1) = 0.5 - sign * diff / (2.0 * omega);
    return m;
  };
  r.p_plus = projector(+1.0);
  r.p_minus = projector(-1.0);

  // chi_+- from the projectors applied to the reference spinor (1,0); the
  // explicit component form carries a square root of the v21 phase.
  const cplx phase =
      (std::abs(v21) > 0.0) ? v21 / std::abs(v21) : cplx{1.0, 0.0};
  const cplx root_conj = std::sqrt(std::conj(phase));
  const cplx root = std::sqrt(phase);
  auto chi = [&](double sign) {
    Vector c(2);
    c[0] = root_conj * std::sqrt(std::max(0.5 + sign * diff / (2.0 * omega), 0.0));
    c[1] = sign * root *
           std::sqrt(std::max(0.5 - sign * diff / (2.0 * omega), 0.0));
    return c;
  };
  r.chi_plus = chi(+1.0);
  r.chi_minus = chi(-1.0);

  auto adj_c = [&](double sign) {
    ComplexMatrix m(2);
    m.at(0, 0) = 0.5 * (diff + sign * omega);
    m.at(0, 1) = p.v12;
    m.at(1, 0) = v21;
    m.at(1, 1) = 0.5 * (-diff + sign * omega);
    return m;
  };
  r.adj_c_plus = adj_c(+1.0);
  r.adj_c_minus = adj_c(-1.0);
  return r;
}

// ---------------------------------------------------------------------------
// Free Dirac equation (standard representation of the gamma matrices)
// ---------------------------------------------------------------------------

struct DiracParams {
  double m = 1.0;
  std::array<double, 3> p{0.0, 0.0, 0.0};

  double energy() const {
    return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
  }
};

inline ComplexMatrix pauli(int k) {
  ComplexMatrix s(2);
  switch (k) {
    case 1:
      s.at(0, 1) = 1.0;
      s.at(1, 0) = 1.0;
      break;
    case 2:
      s.at(0, 1) = cplx{0.0, -1.0};
      s.at(1, 0) = cplx{0.0, 1.0};
      break;
    case 3:
      s.at(0, 0) = 1.0;
      s.at(1, 1) = -1.0;
      break;
    default:
      throw InvalidIndexError("Pauli index must be 1..3");
  }
  return s;
}

namespace detail {

inline ComplexMatrix block_2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const ComplexMatrix& d) {
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(i, j + 2) = b.at(i, j);
      m.at(i + 2, j) = c.at(i, j);
      m.at(i + 2, j + 2) = d.at(i, j);
    }
  return m;
}

}  // namespace detail

inline ComplexMatrix gamma0() {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  return detail::block_2x2(i2, ComplexMatrix(2), ComplexMatrix(2),
                           i2 * cplx{-1.0, 0.0});
}

inline ComplexMatrix gamma(int k) {
  const ComplexMatrix s = pauli(k);
  return detail::block_2x2(ComplexMatrix(2), s, s * cplx{-1.0, 0.0},
                           ComplexMatrix(2));
}

/// H = alpha.p + beta m with alpha_k = gamma0 gamma_k and beta = gamma0.
inline ComplexMatrix dirac_hamiltonian(const DiracParams& d) {
  const ComplexMatrix g0 = gamma0();
  ComplexMatrix h = g0 * d.m;
  for (int k = 1; k <= 3; ++k) h = h + g0 * gamma(k) * d.p[k - 1];
  return h;
}

/// Feynman slash p0 gamma^0 - p.gamma with metric (+,-,-,-).
inline ComplexMatrix p_slash(double p0, const std::array<double, 3>& p) {
  ComplexMatrix m = gamma0() * p0;
  for (int k = 1; k <= 3; ++k) m = m - gamma(k) * p[k - 1];
  return m;
}

struct DiracReference {
  double energy = 0.0;
  ComplexMatrix projector;  // (p_slash + m) / 2m at p0 = E
  Vector u_plus;            // positive-energy bispinors, z polarization
  Vector u_minus;
  Vector v_plus;  // negative-energy bispinors
  Vector v_minus;
  ComplexMatrix psi;  // 2 lambda (p_slash + m) gamma0 at lambda = E
};

/// Reference bispinors and the complement matrix for the positive-energy
/// doublet.  The m > 0 requirement comes from the 1/2m in the projector;
/// the complement matrix itself stays well defined at m = 0.
inline DiracReference dirac_reference(const DiracParams& d) {
  if (d.m <= 0.0)
    throw DegenerateInputError("massless limit: projector needs m > 0");
  DiracReference r;
  r.energy = d.energy();
  const ComplexMatrix slash = p_slash(r.energy, d.p);
  const ComplexMatrix m4 = ComplexMatrix::identity(4) * d.m;
  r.projector = (slash + m4) * (0.5 / d.m);
  r.psi = (slash + m4) * gamma0() * (2.0 * r.energy);

  // Normalized so that u-bar u = 1 and v-bar v = -1 under the gamma0 inner
  // product (the projector route scales but does not rotate the rest-frame
  // spinors).
  const double norm = std::sqrt(2.0 * d.m / (r.energy + d.m));
  auto apply = [&](const ComplexMatrix& proj, int rest_component) {
    Vector rest(4);
    rest[rest_component] = 1.0;
    return scale(proj * rest, norm);
  };
  r.u_plus = apply(r.projector, 0);
  r.u_minus = apply(r.projector, 1);

  const ComplexMatrix slash_neg = p_slash(-r.energy, d.p);
  const ComplexMatrix proj_neg = (slash_neg + m4) * (0.5 / d.m);
  r.v_plus = apply(proj_neg, 3);
  r.v_minus = apply(proj_neg, 2);
  return r;
}

/// gamma0 inner product psi-bar phi.
inline cplx dirac_bar_product(const Vector& psi, const Vector& phi) {
  return dot(psi, gamma0() * phi);
}

}  // namespace compeig::showcase
