#include "chancomp/product.hpp"

#include "chancomp/purity.hpp"

#include <cmath>
#include <stdexcept>

namespace chancomp {

void check_schmidt(const SchmidtVector& schmidt) {
    if (schmidt.d < 2 || schmidt.lambdas.size() != schmidt.d)
        throw std::invalid_argument("SchmidtVector: weight count must equal d >= 2");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < schmidt.lambdas.size(); ++j) {
        if (schmidt.lambdas(j) < -1e-12)
            throw std::invalid_argument("SchmidtVector: negative weight");
        sum += schmidt.lambdas(j);
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("SchmidtVector: weights must sum to 1");
}

Matrix omega_from_schmidt(const SchmidtVector& schmidt) {
    check_schmidt(schmidt);
    const int d = schmidt.d;
    const Matrix id = Matrix::Identity(d, d);
    Matrix rho = Matrix::Zero(d, d);
    Matrix sqrt_rho = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        rho(j, j) = schmidt.lambdas(j);
        sqrt_rho(j, j) = std::sqrt(std::max(schmidt.lambdas(j), 0.0));
    }
    const Matrix f = flip_operator(d);
    const Matrix f12 = tensor_product(f, id);
    const Matrix f23 = tensor_product(id, f);
    const Eigen::Index n = Eigen::Index(d) * d * d;
    const Matrix fss = f12 * tensor_product(tensor_product(sqrt_rho, sqrt_rho), id);
    const Matrix bracket = tensor_product(id, tensor_product(rho, id)) +
                           tensor_product(id, tensor_product(id, rho)) - fss -
                           f23 * fss * f23;
    const Matrix p1 = 0.5 * (Matrix::Identity(n, n) - f23);
    return (p1 * bracket) / (double(d - 1) * (d - 1));
}

double tr_omega_sq_closed(int d, double purity) {
    if (d < 2) throw std::invalid_argument("tr_omega_sq_closed: d must be >= 2");
    if (purity < 1.0 / d - 1e-12 || purity > 1.0 + 1e-12)
        throw std::invalid_argument("tr_omega_sq_closed: purity outside [1/d, 1]");
    const double dm1 = d - 1.0;
    return ((double(d) * d - 4.0 * d + 5.0) * purity + 2.0 * (d - 2.0)) /
           (dm1 * dm1 * dm1 * dm1);
}

Matrix antisym_projector(int d) {
    if (d < 1) throw std::invalid_argument("antisym_projector: d must be >= 1");
    const Eigen::Index n = Eigen::Index(d) * d * d;
    Matrix p2 = Matrix::Zero(n, n);
    const double w = 1.0 / std::sqrt(6.0);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                Vector phi = Vector::Zero(n);
                auto idx = [d](int a, int b, int c) {
                    return (Eigen::Index(a) * d + b) * d + c;
                };
                phi(idx(i, j, k)) += w;
                phi(idx(j, k, i)) += w;
                phi(idx(k, i, j)) += w;
                phi(idx(j, i, k)) -= w;
                phi(idx(k, j, i)) -= w;
                phi(idx(i, k, j)) -= w;
                p2 += phi * phi.adjoint();
            }
    return p2;
}

Matrix omega_me(int d) {
    if (d < 2) throw std::invalid_argument("omega_me: d must be >= 2");
    const Eigen::Index n = Eigen::Index(d) * d * d;
    const Matrix f23 = tensor_product(Matrix::Identity(d, d), flip_operator(d));
    const Matrix p1 = 0.5 * (Matrix::Identity(n, n) - f23);
    return (p1 + 3.0 * antisym_projector(d)) / (double(d) * (d - 1) * (d - 1));
}

SpectrumReport omega_me_spectrum(int d, double cluster_tol) {
    return cluster_spectrum(hermitian_eig(omega_me(d)).eigenvalues, cluster_tol);
}

namespace {

double binom3(int d) { return d * (d - 1.0) * (d - 2.0) / 6.0; }

// ||Omega_me||_p^p - nu_p(WH)^(2p); positive iff the ME input witnesses a
// multiplicativity violation at p.
double me_excess(int d, double p) {
    const double scale = double(d) * (d - 1) * (d - 1);
    const double l1 = 4.0 / scale;
    const double l2 = 1.0 / scale;
    const double m1 = binom3(d);
    const double m2 = d * (double(d) * d - 1.0) / 3.0;
    const double norm_p = m1 * std::pow(l1, p) + m2 * std::pow(l2, p);
    return norm_p - std::pow(double(d - 1), 2.0 * (1.0 - p));
}

}  // namespace

double me_ratio_lower_bound(int d, double p) {
    if (d < 2 || p < 1.0)
        throw std::invalid_argument("me_ratio_lower_bound: requires d >= 2, p >= 1");
    const double scale = double(d) * (d - 1) * (d - 1);
    const double norm_p = std::pow(
        binom3(d) * std::pow(4.0 / scale, p) +
            d * (double(d) * d - 1.0) / 3.0 * std::pow(1.0 / scale, p),
        1.0 / p);
    const double nu = wh_nu_closed(d, p);
    return norm_p / (nu * nu);
}

std::optional<double> violation_crossing(int d, double p_lo, double p_hi, double tol) {
    double flo = me_excess(d, p_lo);
    double fhi = me_excess(d, p_hi);
    if (flo * fhi > 0.0) return std::nullopt;
    while (p_hi - p_lo > tol) {
        const double mid = 0.5 * (p_lo + p_hi);
        const double fmid = me_excess(d, mid);
        if (flo * fmid <= 0.0) {
            p_hi = mid;
            fhi = fmid;
        } else {
            p_lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (p_lo + p_hi);
}

ViolationScanResult violation_scan(int d, const std::vector<double>& p_grid) {
    if (p_grid.empty()) throw std::invalid_argument("violation_scan: empty p grid");
    ViolationScanResult result;
    result.p_grid = p_grid;
    result.ratio_lower_bounds.reserve(p_grid.size());
    for (double p : p_grid) result.ratio_lower_bounds.push_back(me_ratio_lower_bound(d, p));
    for (std::size_t i = 0; i + 1 < p_grid.size(); ++i) {
        const double a = result.ratio_lower_bounds[i] - 1.0;
        const double b = result.ratio_lower_bounds[i + 1] - 1.0;
        if (a < 0.0 && b > 0.0) {
            result.crossing = violation_crossing(d, p_grid[i], p_grid[i + 1]);
            break;
        }
    }
    return result;
}

}  // namespace chancomp
