// channel.hpp — generic CP-map machinery: Kraus sets, Stinespring assembly,
// complementary channels, dual maps, the S_C dual representation with its
// reciprocity relations, Choi rank, and minimalization via sqrt(T†T).

#pragma once

#include "chancomp/linalg.hpp"

#include <vector>

namespace chancomp {

struct KrausSet {
    int d_in = 0;                   // dimension of H_A
    int d_out = 0;                  // dimension of H_B
    std::vector<Matrix> operators;  // each d_out x d_in; environment dim = count

    int d_env() const { return int(operators.size()); }
};

struct StinespringIsometry {
    Matrix v;  // (d_out * d_env) x d_in
    int d_in = 0;
    int d_out = 0;
    int d_env = 0;
};

// The S_C of the dual representation: complement(rho) = s (rho ⊗ I_B) s†.
struct DualRepOperator {
    Matrix s;  // d_env x (d_in * d_out)
    int d_in = 0;
    int d_out = 0;
    int d_env = 0;
};

enum class KrausCondition { TracePreserving, Unital };

// Max-entry residual of sum V_j†V_j - I (tp) or sum V_jV_j† - I (unital).
double validate(const KrausSet& kraus, KrausCondition mode);

Matrix channel_apply(const KrausSet& kraus, const Matrix& rho);

// V = sum_j V_j ⊗ |e_j>; rows indexed (b, c) -> b*d_env + c.
StinespringIsometry stinespring_from_kraus(const KrausSet& kraus);

// Complement output entrywise: result(j, k) = Tr V_j rho V_k†.
Matrix complement_apply(const KrausSet& kraus, const Matrix& rho);

// d_out operators of shape d_env x d_in with (V~_k)_{j,a} = (V_j)_{k,a}.
KrausSet complement_kraus(const KrausSet& kraus);

// Dual map: x is d_out x d_out, result sum_j V_j† x V_j.
Matrix dual_apply(const KrausSet& kraus, const Matrix& x);

// S_C = sum_k V~_k ⊗ <e_k|; columns indexed (a, b) -> a*d_out + b.
DualRepOperator dual_rep_operator(const KrausSet& kraus);

// Reciprocity round trip: V_{(b,c),a} = S_{c,(a,b)}.
StinespringIsometry stinespring_from_dual_rep(const DualRepOperator& dual);

// Kraus operators V~_b = S (I_A ⊗ |e_b>) of the map rho -> S(rho⊗I)S†.
KrausSet kraus_from_dual_rep(const Matrix& s, int d_in, int d_out);

// Unnormalized Choi matrix on H_A ⊗ H_B.
Matrix choi_matrix(const KrausSet& kraus);

// Rank of the Choi matrix = minimal number of Kraus operators.
int choi_rank(const KrausSet& kraus, double tol = 1e-10);

// Given a non-minimal T with complement(rho) = T(rho⊗I)T†, returns the
// minimal S = psd_sqrt(T†T) acting on H_A ⊗ H_B.  Outputs of the two forms
// are isometrically conjugate (equal nonzero spectra), not entrywise equal.
Matrix minimalize(const Matrix& t, int d_in, int d_out);

KrausSet tensor_kraus(const KrausSet& a, const KrausSet& b);

}  // namespace chancomp
