// zoo.hpp — closed-form channel families: depolarizing and
// transpose-depolarizing channels, the Werner-Holevo extreme point, their
// non-minimal and minimal complementary representations, and covariance
// residuals.

#pragma once

#include "chancomp/channel.hpp"

namespace chancomp {

struct DepolarizingParams {
    int d = 2;      // dimension >= 2
    double p = 0.0; // 0 <= p <= d^2/(d^2-1); Kraus/matrix forms need p <= 1
};

struct TransposeDepolarizingParams {
    int d = 2;      // dimension >= 2
    double t = 0.0; // -1/(d-1) <= t <= 1/(d+1)
};

// Convex weights of the symmetric/antisymmetric extreme channels,
// c+ + c- = 1, c+- >= 0 over the admissible t range.
struct TdWeights {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double a_plus = 0.0;   // sqrt(c+/(2(d+1)))
    double a_minus = 0.0;  // sqrt(c-/(2(d-1)))
};

enum class DepolarizingComplementForm { Matrix, Minimal };
enum class TdComplementForm { Block, Minimal };

void check_params(const DepolarizingParams& params);
void check_params(const TransposeDepolarizingParams& params);

// --------------------------- depolarizing ----------------------------------

// (1-p) rho + (p/d) I Tr rho; valid on the full range including p > 1.
Matrix depolarizing_apply(const DepolarizingParams& params, const Matrix& rho);

// d^2+1 operators sqrt(1-p) I and sqrt(p/d)|j><i|; requires p <= 1.
KrausSet depolarizing_kraus(const DepolarizingParams& params);

// Matrix form: (d^2+1)-dim block matrix
//   [ (1-p) Tr rho        sqrt(p(1-p)/d) rho_vec ]
//   [ sqrt(p(1-p)/d) ...  (p/d)(rho ⊗ I)         ]
// (p <= 1 only); minimal form: S (rho ⊗ I) S† on d^2 dims, full p range.
Matrix depolarizing_complement(const DepolarizingParams& params, const Matrix& rho,
                               DepolarizingComplementForm form);

// The minimal S = sqrt(p/d) I + sqrt(d)(-sqrt(p)/d + sqrt(1 - p(d^2-1)/d^2)) |Om><Om|.
Matrix depolarizing_minimal_s(const DepolarizingParams& params);

// The non-minimal T with complement(rho) = T(rho⊗I)T†, (d^2+1) x d^2.
Matrix depolarizing_block_t(const DepolarizingParams& params);

// ----------------------- transpose-depolarizing ----------------------------

TdWeights td_weights(const TransposeDepolarizingParams& params);

// t rho^T + (1-t) Tr rho I/d; transpose in the fixed computational basis.
Matrix td_apply(const TransposeDepolarizingParams& params, const Matrix& rho);

// 2d^2 operators: sqrt(c+) V+ on the first d^2 slots, sqrt(c-) V- next.
KrausSet td_kraus(const TransposeDepolarizingParams& params);

// Block form T(rho⊗I)T† on 2d^2 dims with T† = [a+(I+F), a-(I-F)];
// minimal form S(rho⊗I)S† with S = (a+ + a-) I + (a+ - a-) F.
Matrix td_complement(const TransposeDepolarizingParams& params, const Matrix& rho,
                     TdComplementForm form);

Matrix td_minimal_s(const TransposeDepolarizingParams& params);
Matrix td_block_t(const TransposeDepolarizingParams& params);  // 2d^2 x d^2

// ----------------------------- Werner-Holevo -------------------------------

// WH channel = transpose-depolarizing at t = -1/(d-1): (I Tr rho - rho^T)/(d-1).
Matrix wh_apply(int d, const Matrix& rho);

// Minimal Kraus set: (|i><j| - |j><i|)/sqrt(d-1) for i < j, d(d-1)/2 operators.
KrausSet wh_kraus(int d);

// Complement in the d^2-dimensional form (I-F)(rho⊗I)(I-F)/(2(d-1)),
// as a d-operator Kraus set of shape d^2 x d.
KrausSet wh_complement_kraus(int d);

Matrix wh_complement_apply(int d, const Matrix& rho);

// ------------------------------ covariance ---------------------------------

enum class CovarianceCase {
    DepolarizingChannel,     // Phi(U rho U†) = U Phi(rho) U†
    DepolarizingComplement,  // under U ⊗ conj(U), minimal form
    TdChannel,               // Phi(U rho U†) = conj(U) Phi(rho) conj(U)†
    TdComplement,            // under U ⊗ U, minimal form
};

double covariance_residual(const DepolarizingParams& params, CovarianceCase rule,
                           const Matrix& u, const Matrix& rho);
double covariance_residual(const TransposeDepolarizingParams& params, CovarianceCase rule,
                           const Matrix& u, const Matrix& rho);

}  // namespace chancomp
