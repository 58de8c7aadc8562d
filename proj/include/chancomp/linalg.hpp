// linalg.hpp — dense complex linear algebra used throughout: Kronecker
// products, partial traces, Hermitian eigendecomposition, PSD square roots,
// polar decomposition, Schatten norms, and the standard vectors/operators
// (maximally entangled vector, flip operator).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace chancomp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Index convention, fixed everywhere: composite basis |i>⊗|j> maps to the
// flat index i*d2 + j (first factor most significant, zero-based).

struct HermitianSpectrum {
    RealVector eigenvalues;  // descending
    Matrix eigenvectors;     // orthonormal columns, same order
};

struct SpectrumCluster {
    double value = 0.0;
    int multiplicity = 0;
};

struct SpectrumReport {
    std::vector<SpectrumCluster> clusters;  // descending by value
    double cluster_tol = 1e-8;

    int dimension() const;
};

struct PolarDecomposition {
    Matrix u;  // isometry on the range of s
    Matrix s;  // psd_sqrt(t† t)
};

Matrix tensor_product(const Matrix& a, const Matrix& b);

enum class TraceKeep { First, Second };

// m acts on a (d1*d2)-dimensional space; traces out the discarded factor.
Matrix partial_trace(const Matrix& m, int d1, int d2, TraceKeep keep);

double hermiticity_residual(const Matrix& a);

// Requires a Hermitian within 1e-10; eigenvalues sorted descending.
HermitianSpectrum hermitian_eig(const Matrix& a);

// Hermitian a with eigenvalues >= -1e-8*|lambda|_max; roundoff negatives
// are clamped to zero.
Matrix psd_sqrt(const Matrix& a);

// t = u*s with s = psd_sqrt(t† t), for m x n t with m >= n.
PolarDecomposition polar_decompose(const Matrix& t);

// (sum_k lambda_k^p)^(1/p) for Hermitian PSD sigma; p >= 1.
double schatten_norm(const Matrix& sigma, double p);

// |Omega> = d^{-1/2} sum_j |j>⊗|j>, as a d^2 column vector.
Vector maximally_entangled(int d);

// F|ij> = |ji> on H_d ⊗ H_d.
Matrix flip_operator(int d);

// Groups eigenvalues (any order) into (value, multiplicity) clusters; two
// eigenvalues land in the same cluster iff they are within tol of the
// cluster representative.
SpectrumReport cluster_spectrum(const RealVector& eigenvalues, double tol = 1e-8);

}  // namespace chancomp
