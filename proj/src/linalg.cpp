#include "chancomp/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chancomp {

int SpectrumReport::dimension() const {
    int n = 0;
    for (const auto& c : clusters) n += c.multiplicity;
    return n;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, int d1, int d2, TraceKeep keep) {
    if (m.rows() != Eigen::Index(d1) * d2 || m.cols() != Eigen::Index(d1) * d2)
        throw std::invalid_argument("partial_trace: matrix is not (d1*d2) x (d1*d2)");
    if (keep == TraceKeep::First) {
        Matrix out = Matrix::Zero(d1, d1);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d1; ++j)
                for (int k = 0; k < d2; ++k)
                    out(i, j) += m(i * d2 + k, j * d2 + k);
        return out;
    }
    Matrix out = Matrix::Zero(d2, d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j)
            for (int k = 0; k < d1; ++k)
                out(i, j) += m(k * d2 + i, k * d2 + j);
    return out;
}

double hermiticity_residual(const Matrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianSpectrum hermitian_eig(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: square matrix required");
    if (hermiticity_residual(a) > 1e-10)
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint()));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed");
    const Eigen::Index n = a.rows();
    HermitianSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n, n);
    // SelfAdjointEigenSolver sorts ascending; flip to descending.
    for (Eigen::Index k = 0; k < n; ++k) {
        spec.eigenvalues(k) = es.eigenvalues()(n - 1 - k);
        spec.eigenvectors.col(k) = es.eigenvectors().col(n - 1 - k);
    }
    return spec;
}

Matrix psd_sqrt(const Matrix& a) {
    HermitianSpectrum spec = hermitian_eig(a);
    const double lmax = spec.eigenvalues.size() ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    RealVector roots(spec.eigenvalues.size());
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
        double lam = spec.eigenvalues(k);
        if (lam < -1e-8 * std::max(1.0, lmax))
            throw std::invalid_argument("psd_sqrt: significantly negative eigenvalue");
        roots(k) = std::sqrt(std::max(lam, 0.0));
    }
    return spec.eigenvectors * roots.asDiagonal() * spec.eigenvectors.adjoint();
}

PolarDecomposition polar_decompose(const Matrix& t) {
    if (t.rows() < t.cols())
        throw std::invalid_argument("polar_decompose: requires rows >= cols");
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    PolarDecomposition pd;
    pd.u = svd.matrixU() * svd.matrixV().adjoint();
    pd.s = svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint();
    return pd;
}

double schatten_norm(const Matrix& sigma, double p) {
    if (p < 1.0) throw std::invalid_argument("schatten_norm: p must be >= 1");
    HermitianSpectrum spec = hermitian_eig(sigma);
    if (p == 1.0) return spec.eigenvalues.sum();
    double acc = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
        acc += std::pow(std::max(spec.eigenvalues(k), 0.0), p);
    return std::pow(acc, 1.0 / p);
}

Vector maximally_entangled(int d) {
    Vector omega = Vector::Zero(Eigen::Index(d) * d);
    const double w = 1.0 / std::sqrt(double(d));
    for (int j = 0; j < d; ++j) omega(j * d + j) = w;
    return omega;
}

Matrix flip_operator(int d) {
    Matrix f = Matrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            f(j * d + i, i * d + j) = 1.0;
    return f;
}

SpectrumReport cluster_spectrum(const RealVector& eigenvalues, double tol) {
    std::vector<double> sorted(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    SpectrumReport report;
    report.cluster_tol = tol;
    for (double lam : sorted) {
        if (!report.clusters.empty() && std::abs(lam - report.clusters.back().value) <= tol) {
            report.clusters.back().multiplicity += 1;
        } else {
            report.clusters.push_back({lam, 1});
        }
    }
    return report;
}

}  // namespace chancomp
