#include "chancomp/channel.hpp"

#include <stdexcept>

namespace chancomp {

namespace {

void check_input_dim(const KrausSet& kraus, const Matrix& rho) {
    if (rho.rows() != kraus.d_in || rho.cols() != kraus.d_in)
        throw std::invalid_argument("channel: input matrix does not match d_in");
}

void check_shapes(const KrausSet& kraus) {
    for (const auto& v : kraus.operators)
        if (v.rows() != kraus.d_out || v.cols() != kraus.d_in)
            throw std::invalid_argument("KrausSet: operator shape is not d_out x d_in");
}

}  // namespace

double validate(const KrausSet& kraus, KrausCondition mode) {
    check_shapes(kraus);
    if (mode == KrausCondition::TracePreserving) {
        Matrix acc = Matrix::Zero(kraus.d_in, kraus.d_in);
        for (const auto& v : kraus.operators) acc += v.adjoint() * v;
        return (acc - Matrix::Identity(kraus.d_in, kraus.d_in)).cwiseAbs().maxCoeff();
    }
    Matrix acc = Matrix::Zero(kraus.d_out, kraus.d_out);
    for (const auto& v : kraus.operators) acc += v * v.adjoint();
    return (acc - Matrix::Identity(kraus.d_out, kraus.d_out)).cwiseAbs().maxCoeff();
}

Matrix channel_apply(const KrausSet& kraus, const Matrix& rho) {
    check_input_dim(kraus, rho);
    Matrix out = Matrix::Zero(kraus.d_out, kraus.d_out);
    for (const auto& v : kraus.operators) out += v * rho * v.adjoint();
    return out;
}

StinespringIsometry stinespring_from_kraus(const KrausSet& kraus) {
    check_shapes(kraus);
    const int dc = kraus.d_env();
    StinespringIsometry iso;
    iso.d_in = kraus.d_in;
    iso.d_out = kraus.d_out;
    iso.d_env = dc;
    iso.v = Matrix::Zero(Eigen::Index(kraus.d_out) * dc, kraus.d_in);
    for (int j = 0; j < dc; ++j)
        for (int b = 0; b < kraus.d_out; ++b)
            iso.v.row(Eigen::Index(b) * dc + j) = kraus.operators[j].row(b);
    return iso;
}

Matrix complement_apply(const KrausSet& kraus, const Matrix& rho) {
    check_input_dim(kraus, rho);
    const int dc = kraus.d_env();
    Matrix out(dc, dc);
    for (int j = 0; j < dc; ++j)
        for (int k = 0; k < dc; ++k)
            out(j, k) = (kraus.operators[j] * rho * kraus.operators[k].adjoint()).trace();
    return out;
}

KrausSet complement_kraus(const KrausSet& kraus) {
    check_shapes(kraus);
    const int dc = kraus.d_env();
    KrausSet comp;
    comp.d_in = kraus.d_in;
    comp.d_out = dc;
    comp.operators.reserve(kraus.d_out);
    for (int k = 0; k < kraus.d_out; ++k) {
        Matrix vk(dc, kraus.d_in);
        for (int j = 0; j < dc; ++j) vk.row(j) = kraus.operators[j].row(k);
        comp.operators.push_back(std::move(vk));
    }
    return comp;
}

Matrix dual_apply(const KrausSet& kraus, const Matrix& x) {
    if (x.rows() != kraus.d_out || x.cols() != kraus.d_out)
        throw std::invalid_argument("dual_apply: input does not match d_out");
    Matrix out = Matrix::Zero(kraus.d_in, kraus.d_in);
    for (const auto& v : kraus.operators) out += v.adjoint() * x * v;
    return out;
}

DualRepOperator dual_rep_operator(const KrausSet& kraus) {
    KrausSet comp = complement_kraus(kraus);
    DualRepOperator dual;
    dual.d_in = kraus.d_in;
    dual.d_out = kraus.d_out;
    dual.d_env = kraus.d_env();
    dual.s = Matrix::Zero(dual.d_env, Eigen::Index(kraus.d_in) * kraus.d_out);
    for (int k = 0; k < kraus.d_out; ++k)
        for (int a = 0; a < kraus.d_in; ++a)
            dual.s.col(Eigen::Index(a) * kraus.d_out + k) = comp.operators[k].col(a);
    return dual;
}

StinespringIsometry stinespring_from_dual_rep(const DualRepOperator& dual) {
    StinespringIsometry iso;
    iso.d_in = dual.d_in;
    iso.d_out = dual.d_out;
    iso.d_env = dual.d_env;
    iso.v = Matrix::Zero(Eigen::Index(dual.d_out) * dual.d_env, dual.d_in);
    for (int b = 0; b < dual.d_out; ++b)
        for (int c = 0; c < dual.d_env; ++c)
            for (int a = 0; a < dual.d_in; ++a)
                iso.v(Eigen::Index(b) * dual.d_env + c, a) = dual.s(c, Eigen::Index(a) * dual.d_out + b);
    return iso;
}

KrausSet kraus_from_dual_rep(const Matrix& s, int d_in, int d_out) {
    if (s.cols() != Eigen::Index(d_in) * d_out)
        throw std::invalid_argument("kraus_from_dual_rep: S must have d_in*d_out columns");
    KrausSet kraus;
    kraus.d_in = d_in;
    kraus.d_out = int(s.rows());
    kraus.operators.reserve(d_out);
    for (int b = 0; b < d_out; ++b) {
        Matrix vb(s.rows(), d_in);
        for (int a = 0; a < d_in; ++a) vb.col(a) = s.col(Eigen::Index(a) * d_out + b);
        kraus.operators.push_back(std::move(vb));
    }
    return kraus;
}

Matrix choi_matrix(const KrausSet& kraus) {
    const int da = kraus.d_in;
    const int db = kraus.d_out;
    Matrix choi = Matrix::Zero(Eigen::Index(da) * db, Eigen::Index(da) * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Matrix eij = Matrix::Zero(da, da);
            eij(i, j) = 1.0;
            Matrix blk = channel_apply(kraus, eij);
            choi.block(Eigen::Index(i) * db, Eigen::Index(j) * db, db, db) = blk;
        }
    return choi;
}

int choi_rank(const KrausSet& kraus, double tol) {
    HermitianSpectrum spec = hermitian_eig(choi_matrix(kraus));
    int rank = 0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
        if (spec.eigenvalues(k) > tol) ++rank;
    return rank;
}

Matrix minimalize(const Matrix& t, int d_in, int d_out) {
    if (t.cols() != Eigen::Index(d_in) * d_out)
        throw std::invalid_argument("minimalize: T must have d_in*d_out columns");
    return psd_sqrt(t.adjoint() * t);
}

KrausSet tensor_kraus(const KrausSet& a, const KrausSet& b) {
    KrausSet out;
    out.d_in = a.d_in * b.d_in;
    out.d_out = a.d_out * b.d_out;
    out.operators.reserve(a.operators.size() * b.operators.size());
    for (const auto& va : a.operators)
        for (const auto& vb : b.operators)
            out.operators.push_back(tensor_product(va, vb));
    return out;
}

}  // namespace chancomp
