#include "chancomp/random.hpp"

#include <Eigen/QR>

namespace chancomp {

Matrix random_complex_matrix(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

Vector random_pure_state(int d, Rng& rng) {
    Vector v = random_complex_matrix(d, 1, rng);
    return v / v.norm();
}

Matrix random_unitary(int d, Rng& rng) {
    const Matrix g = random_complex_matrix(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (int k = 0; k < d; ++k) {
        const Complex rkk = r(k, k);
        if (std::abs(rkk) > 0) q.col(k) *= rkk / std::abs(rkk);
    }
    return q;
}

Matrix random_density(int d, Rng& rng) {
    const Matrix g = random_complex_matrix(d, d, rng);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

}  // namespace chancomp
