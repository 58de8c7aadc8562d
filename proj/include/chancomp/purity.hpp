// purity.hpp — output-purity functionals: Rényi p-entropies, maximal output
// p-norm nu_p by restart-based projected gradient ascent over pure inputs,
// the Werner-Holevo closed form, and multiplicativity ratios.

#pragma once

#include "chancomp/channel.hpp"

#include <cstdint>
#include <vector>

namespace chancomp {

enum class LogBase { Natural, Two };

// -(1/(p-1)) log Tr sigma^p for p > 1; von Neumann entropy at p = 1.
double renyi_entropy(const Matrix& sigma, double p, LogBase base = LogBase::Natural);

double von_neumann_entropy(const Matrix& sigma);

struct PuritySearchConfig {
    double p = 2.0;
    int restarts = 64;
    int max_iters = 500;
    double step = 0.1;    // initial step, adaptive halving
    double tol = 1e-10;   // on objective change
    std::uint64_t seed = 0;
};

struct RestartRecord {
    int iterations = 0;
    double value = 0.0;
    bool converged = false;
};

struct PurityResult {
    double value = 0.0;       // nu_p estimate (1.0 when p == 1)
    Vector argmax_state;      // optimizing pure input
    double renyi = 0.0;       // R^_p; min output entropy when p == 1
    std::vector<RestartRecord> restarts;
    bool any_converged = false;
};

// Maximizes ||Phi(psi psi†)||_p over the complex unit sphere (p > 1); at
// p = 1 minimizes the output von Neumann entropy with the same machinery.
// The returned value is a lower bound on nu_p by construction.
PurityResult nu_p(const KrausSet& channel, const PuritySearchConfig& config);

// Full bipartite search over pure vectors in H_1 ⊗ H_2.
PurityResult nu_p_product(const KrausSet& a, const KrausSet& b,
                          const PuritySearchConfig& config);

// Search restricted to Schmidt-diagonal inputs sum_j y_j |jj>; requires
// a.d_in == b.d_in.  For covariant product channels this is exhaustive.
PurityResult nu_p_schmidt(const KrausSet& a, const KrausSet& b,
                          const PuritySearchConfig& config);

// (d-1)^((1-p)/p); returns 1 at p = 1 (the associated entropy is log(d-1)).
double wh_nu_closed(int d, double p);

struct MultiplicativityReport {
    double nu1 = 0.0;
    double nu2 = 0.0;
    double nu12 = 0.0;
    double ratio = 0.0;  // nu12 / (nu1 * nu2)
};

MultiplicativityReport multiplicativity_report(const KrausSet& a, const KrausSet& b,
                                               double p, const PuritySearchConfig& config);

}  // namespace chancomp
