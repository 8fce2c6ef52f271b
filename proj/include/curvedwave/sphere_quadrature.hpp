#pragma once

// Quadrature with the invariant measure of the 3-sphere and the orthogonality
// relations of the radial eigenfunctions.
//
// Main path: integrals in the geodesic radius r, where the radial weight
// sin_k(r)^2 is smooth, using 32-point Gauss-Legendre panels with dyadic
// refinement. The s = sin_k(r) form of the half-sphere relations carries a
// 1/sqrt(1 - k s^2) endpoint singularity and is only used as a cross-check,
// integrated with tanh-sinh.

#include <functional>
#include <string>
#include <vector>

#include "curvedwave/kappa_trig.hpp"
#include "curvedwave/radial_polynomials.hpp"

namespace curvedwave {

struct QuadratureOptions {
  double rel_tol = 1e-13;
  double abs_floor = 1e-15;
  int max_level = 14;  // up to 2^max_level panels
};

/// Integral of f over [a, b] by 32-point Gauss-Legendre panels, doubling the
/// panel count until two successive estimates agree. Throws ConvergenceError
/// carrying the last estimate otherwise.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                const QuadratureOptions& opts = {});

enum class RadialSpan { whole_sphere, upper_hemisphere };

/// Integral of fn(r) sin_k(r)^2 dr over [0, pi/sqrt(k)] (or the upper half).
double integrate_radial(const std::function<double(double)>& fn, Curvature kappa,
                        double rel_tol = 1e-13, RadialSpan span = RadialSpan::whole_sphere);

using Matrix = std::vector<std::vector<double>>;

/// G[i][j] = integral of [sin^L Q_{n_i,L}(cos)] [sin^L Q_{n_j,L}(cos)] sin^2 dr.
Matrix orthogonality_matrix(int L, const std::vector<int>& ns, Curvature kappa,
                            double rel_tol = 1e-13);

/// G[i][j] / sqrt(G[i][i] G[j][j]) - delta_ij.
double normalized_defect(const Matrix& gram, std::size_t i, std::size_t j);

/// CSV with columns L,n_i,n_j,gram_value,normalized_defect for i <= j.
std::string orthogonality_csv(int L, const std::vector<int>& ns, const Matrix& gram);

enum class SturmLiouvilleFamily { f, g };

/// Self-adjoint form (p y')' + lambda q y = 0 of the type I (f) and type II (g)
/// polynomial equations in s on [0, 1/sqrt(k)].
struct SturmLiouvilleForm {
  SturmLiouvilleFamily family;
  int L;
  double kappa;

  double p(double s) const;
  double dp(double s) const;
  double q(double s) const;
  double lambda(double energy_sq) const;
};

/// max |(p y')' + lambda q y| / max |lambda q y| on an interior s-grid, with the
/// polynomial differentiated exactly. Returns the absolute maximum when
/// lambda q y vanishes identically.
double sl_residual(SturmLiouvilleFamily family, int L, Curvature kappa, double energy_sq,
                   const RadialPolynomial& poly_in_s, int grid_points = 200);

/// Half-sphere overlap of the unified radial functions of degrees n1, n2,
/// integrated in r over [0, pi/(2 sqrt k)].
double half_sphere_overlap_r(int n1, int n2, int L, Curvature kappa);

/// Same overlap in the s variable from the type I / type II polynomials,
/// weight s^2 / sqrt(1 - k s^2) on [0, 1/sqrt(k)], by tanh-sinh.
double half_sphere_overlap_s(int n1, int n2, int L, Curvature kappa);

}  // namespace curvedwave
