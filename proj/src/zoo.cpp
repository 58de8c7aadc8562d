#include "chancomp/zoo.hpp"

#include <cmath>
#include <stdexcept>

namespace chancomp {

namespace {

Matrix basis_op(int d, int i, int j) {
    Matrix m = Matrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

// (|i><j| +/- |j><i|)/sqrt(2(d +/- 1))
Matrix sym_op(int d, int i, int j, int sign) {
    Matrix m = Matrix::Zero(d, d);
    m(i, j) += 1.0;
    m(j, i) += double(sign);
    return m / std::sqrt(2.0 * (d + sign));
}

void check_density_dim(int d, const Matrix& rho) {
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("zoo: input matrix does not match channel dimension");
}

}  // namespace

void check_params(const DepolarizingParams& params) {
    if (params.d < 2) throw std::invalid_argument("depolarizing: d must be >= 2");
    const double d2 = double(params.d) * params.d;
    const double pmax = d2 / (d2 - 1.0);
    if (params.p < 0.0 || params.p > pmax)
        throw std::invalid_argument("depolarizing: p outside [0, d^2/(d^2-1)]");
}

void check_params(const TransposeDepolarizingParams& params) {
    if (params.d < 2) throw std::invalid_argument("transpose-depolarizing: d must be >= 2");
    if (params.t < -1.0 / (params.d - 1) - 1e-12 || params.t > 1.0 / (params.d + 1) + 1e-12)
        throw std::invalid_argument("transpose-depolarizing: t outside [-1/(d-1), 1/(d+1)]");
}

// --------------------------- depolarizing ----------------------------------

Matrix depolarizing_apply(const DepolarizingParams& params, const Matrix& rho) {
    check_params(params);
    check_density_dim(params.d, rho);
    return (1.0 - params.p) * rho +
           (params.p / params.d) * rho.trace() * Matrix::Identity(params.d, params.d);
}

KrausSet depolarizing_kraus(const DepolarizingParams& params) {
    check_params(params);
    if (params.p > 1.0)
        throw std::invalid_argument("depolarizing_kraus: p > 1 has no real Kraus set of this form");
    const int d = params.d;
    KrausSet kraus;
    kraus.d_in = d;
    kraus.d_out = d;
    kraus.operators.reserve(d * d + 1);
    kraus.operators.push_back(std::sqrt(1.0 - params.p) * Matrix::Identity(d, d));
    const double w = std::sqrt(params.p / d);
    // Slot (i,j) -> 1 + i*d + j carries V_{ji} = sqrt(p/d)|j><i|.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            kraus.operators.push_back(w * basis_op(d, j, i));
    return kraus;
}

Matrix depolarizing_block_t(const DepolarizingParams& params) {
    check_params(params);
    if (params.p > 1.0)
        throw std::invalid_argument("depolarizing_block_t: requires p <= 1");
    const int d = params.d;
    const int dd = d * d;
    Matrix t = Matrix::Zero(dd + 1, dd);
    t.row(0) = std::sqrt(d * (1.0 - params.p)) * maximally_entangled(d).adjoint();
    t.block(1, 0, dd, dd) = std::sqrt(params.p / d) * Matrix::Identity(dd, dd);
    return t;
}

Matrix depolarizing_minimal_s(const DepolarizingParams& params) {
    check_params(params);
    const int d = params.d;
    const int dd = d * d;
    const double d2 = double(d) * d;
    const Vector omega = maximally_entangled(d);
    const double coeff =
        std::sqrt(double(d)) *
        (-std::sqrt(params.p) / d + std::sqrt(1.0 - params.p * (d2 - 1.0) / d2));
    return std::sqrt(params.p / d) * Matrix::Identity(dd, dd) +
           coeff * (omega * omega.adjoint());
}

Matrix depolarizing_complement(const DepolarizingParams& params, const Matrix& rho,
                               DepolarizingComplementForm form) {
    check_params(params);
    check_density_dim(params.d, rho);
    const int d = params.d;
    if (form == DepolarizingComplementForm::Minimal) {
        const Matrix s = depolarizing_minimal_s(params);
        return s * tensor_product(rho, Matrix::Identity(d, d)) * s.adjoint();
    }
    if (params.p > 1.0)
        throw std::invalid_argument("depolarizing_complement: matrix form requires p <= 1");
    const int dd = d * d;
    Matrix out = Matrix::Zero(dd + 1, dd + 1);
    out(0, 0) = (1.0 - params.p) * rho.trace();
    const double w = std::sqrt(params.p * (1.0 - params.p) / d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            out(0, 1 + i * d + j) = w * rho(j, i);
            out(1 + i * d + j, 0) = w * rho(i, j);
        }
    out.block(1, 1, dd, dd) =
        (params.p / d) * tensor_product(rho, Matrix::Identity(d, d));
    return out;
}

// ----------------------- transpose-depolarizing ----------------------------

TdWeights td_weights(const TransposeDepolarizingParams& params) {
    check_params(params);
    const double d = params.d;
    TdWeights w;
    w.c_plus = ((d * d - 1.0) / (2.0 * d)) * (1.0 / (d - 1.0) + params.t);
    w.c_minus = ((d * d - 1.0) / (2.0 * d)) * (1.0 / (d + 1.0) - params.t);
    w.c_plus = std::max(w.c_plus, 0.0);    // clip roundoff at the extreme points
    w.c_minus = std::max(w.c_minus, 0.0);
    w.a_plus = std::sqrt(w.c_plus / (2.0 * (d + 1.0)));
    w.a_minus = std::sqrt(w.c_minus / (2.0 * (d - 1.0)));
    return w;
}

Matrix td_apply(const TransposeDepolarizingParams& params, const Matrix& rho) {
    check_params(params);
    check_density_dim(params.d, rho);
    return params.t * rho.transpose() +
           rho.trace() * ((1.0 - params.t) / params.d) * Matrix::Identity(params.d, params.d);
}

KrausSet td_kraus(const TransposeDepolarizingParams& params) {
    const TdWeights w = td_weights(params);
    const int d = params.d;
    KrausSet kraus;
    kraus.d_in = d;
    kraus.d_out = d;
    kraus.operators.reserve(2 * d * d);
    const double wp = std::sqrt(w.c_plus);
    const double wm = std::sqrt(w.c_minus);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            kraus.operators.push_back(wp * sym_op(d, j, i, +1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            kraus.operators.push_back(wm * sym_op(d, j, i, -1));
    return kraus;
}

Matrix td_block_t(const TransposeDepolarizingParams& params) {
    const TdWeights w = td_weights(params);
    const int dd = params.d * params.d;
    const Matrix f = flip_operator(params.d);
    const Matrix id = Matrix::Identity(dd, dd);
    Matrix t(2 * dd, dd);
    t.topRows(dd) = w.a_plus * (id + f);
    t.bottomRows(dd) = w.a_minus * (id - f);
    return t;
}

Matrix td_minimal_s(const TransposeDepolarizingParams& params) {
    const TdWeights w = td_weights(params);
    const int dd = params.d * params.d;
    return (w.a_plus + w.a_minus) * Matrix::Identity(dd, dd) +
           (w.a_plus - w.a_minus) * flip_operator(params.d);
}

Matrix td_complement(const TransposeDepolarizingParams& params, const Matrix& rho,
                     TdComplementForm form) {
    check_params(params);
    check_density_dim(params.d, rho);
    const Matrix rho_ext = tensor_product(rho, Matrix::Identity(params.d, params.d));
    if (form == TdComplementForm::Block) {
        const Matrix t = td_block_t(params);
        return t * rho_ext * t.adjoint();
    }
    const Matrix s = td_minimal_s(params);
    return s * rho_ext * s.adjoint();
}

// ----------------------------- Werner-Holevo -------------------------------

Matrix wh_apply(int d, const Matrix& rho) {
    check_density_dim(d, rho);
    return (rho.trace() * Matrix::Identity(d, d) - rho.transpose()) / double(d - 1);
}

KrausSet wh_kraus(int d) {
    if (d < 2) throw std::invalid_argument("wh_kraus: d must be >= 2");
    KrausSet kraus;
    kraus.d_in = d;
    kraus.d_out = d;
    const double w = 1.0 / std::sqrt(double(d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            kraus.operators.push_back(w * (basis_op(d, i, j) - basis_op(d, j, i)));
    return kraus;
}

KrausSet wh_complement_kraus(int d) {
    TransposeDepolarizingParams params{d, -1.0 / (d - 1)};
    return kraus_from_dual_rep(td_minimal_s(params), d, d);
}

Matrix wh_complement_apply(int d, const Matrix& rho) {
    TransposeDepolarizingParams params{d, -1.0 / (d - 1)};
    return td_complement(params, rho, TdComplementForm::Minimal);
}

// ------------------------------ covariance ---------------------------------

namespace {

void check_unitary(const Matrix& u) {
    const Matrix res = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    if (res.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("covariance_residual: u is not unitary");
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

double covariance_residual(const DepolarizingParams& params, CovarianceCase rule,
                           const Matrix& u, const Matrix& rho) {
    check_unitary(u);
    const Matrix rotated = u * rho * u.adjoint();
    switch (rule) {
        case CovarianceCase::DepolarizingChannel:
            return max_abs_diff(depolarizing_apply(params, rotated),
                                u * depolarizing_apply(params, rho) * u.adjoint());
        case CovarianceCase::DepolarizingComplement: {
            const Matrix uu = tensor_product(u, u.conjugate());
            return max_abs_diff(
                depolarizing_complement(params, rotated, DepolarizingComplementForm::Minimal),
                uu * depolarizing_complement(params, rho, DepolarizingComplementForm::Minimal) *
                    uu.adjoint());
        }
        default:
            throw std::invalid_argument("covariance_residual: rule does not apply to depolarizing");
    }
}

double covariance_residual(const TransposeDepolarizingParams& params, CovarianceCase rule,
                           const Matrix& u, const Matrix& rho) {
    check_unitary(u);
    const Matrix rotated = u * rho * u.adjoint();
    switch (rule) {
        case CovarianceCase::TdChannel: {
            const Matrix ub = u.conjugate();
            return max_abs_diff(td_apply(params, rotated),
                                ub * td_apply(params, rho) * ub.adjoint());
        }
        case CovarianceCase::TdComplement: {
            const Matrix uu = tensor_product(u, u);
            return max_abs_diff(td_complement(params, rotated, TdComplementForm::Minimal),
                                uu * td_complement(params, rho, TdComplementForm::Minimal) *
                                    uu.adjoint());
        }
        default:
            throw std::invalid_argument(
                "covariance_residual: rule does not apply to transpose-depolarizing");
    }
}

}  // namespace chancomp
