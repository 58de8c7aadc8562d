// product.hpp — the Werner-Holevo channel coupled with its complement:
// closed-form output for Schmidt-diagonal inputs, the tr Omega^2 formula,
// the maximally entangled output with its projector decomposition and exact
// spectrum, and the multiplicativity-violation scan.

#pragma once

#include "chancomp/linalg.hpp"

#include <optional>
#include <vector>

namespace chancomp {

struct SchmidtVector {
    int d = 0;
    RealVector lambdas;  // nonnegative, summing to 1
};

void check_schmidt(const SchmidtVector& schmidt);

// Output of (WH ⊗ complement) on |psi> = sum_j sqrt(lambda_j)|jj>, as a
// d^3-dimensional Hermitian PSD unit-trace matrix.
Matrix omega_from_schmidt(const SchmidtVector& schmidt);

// tr Omega^2 = [(d^2-4d+5) purity + 2(d-2)]/(d-1)^4, purity = tr rho^2.
double tr_omega_sq_closed(int d, double purity);

// Projector onto the totally antisymmetric three-party subspace; rank C(d,3).
Matrix antisym_projector(int d);

// Omega for the maximally entangled input: (P1 + 3 P2)/(d(d-1)^2) with
// P1 = (I - F23)/2.
Matrix omega_me(int d);

// Eigenvalue clusters of omega_me: 4/(d(d-1)^2) with multiplicity C(d,3),
// 1/(d(d-1)^2) with multiplicity d(d^2-1)/3, 0 with multiplicity d^2(d+1)/2
// (the kernel complements the rank-d^2(d-1)/2 projector P1 in dimension d^3).
SpectrumReport omega_me_spectrum(int d, double cluster_tol = 1e-8);

// ||Omega_me||_p / nu_p(WH)^2, a lower bound on the multiplicativity ratio.
double me_ratio_lower_bound(int d, double p);

struct ViolationScanResult {
    std::vector<double> p_grid;
    std::vector<double> ratio_lower_bounds;
    std::optional<double> crossing;  // p where the lower-bound ratio passes 1
};

// Evaluates the maximally-entangled lower bound over p_grid; when the grid
// brackets a sign change of ratio - 1, refines the crossing by bisection.
ViolationScanResult violation_scan(int d, const std::vector<double>& p_grid);

// Bisection for the p where the ME-witnessed ratio crosses 1, searched on
// [2, 8]; empty when there is no sign change (d >= 4).
std::optional<double> violation_crossing(int d, double p_lo = 2.0, double p_hi = 8.0,
                                         double tol = 1e-6);

}  // namespace chancomp
