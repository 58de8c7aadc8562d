#include "chancomp/purity.hpp"

#include "chancomp/random.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace chancomp {

namespace {

double log_in_base(double x, LogBase base) {
    return base == LogBase::Natural ? std::log(x) : std::log2(x);
}

void check_density(const Matrix& sigma) {
    if (hermiticity_residual(sigma) > 1e-10 || std::abs(sigma.trace().real() - 1.0) > 1e-10)
        throw std::invalid_argument("renyi_entropy: input is not a density matrix");
}

// Objective value and Wirtinger gradient d f / d conj(psi) at a unit vector.
struct Evaluation {
    double value = 0.0;
    Vector gradient;
};

// For p > 1:  f = ||Phi(psi psi†)||_p,  grad = Phi*(M) psi with
// M = (sum l^p)^(1/p - 1) sigma^(p-1).
// For p == 1: f = -H(Phi(psi psi†)),   M = log(sigma) + I (clamped).
Evaluation evaluate(const KrausSet& channel, const Vector& psi, double p) {
    const Matrix sigma = channel_apply(channel, psi * psi.adjoint());
    const HermitianSpectrum spec = hermitian_eig(sigma);
    const Eigen::Index n = spec.eigenvalues.size();
    Evaluation ev;
    RealVector weights(n);
    if (p > 1.0) {
        double acc = 0.0;
        for (Eigen::Index k = 0; k < n; ++k)
            acc += std::pow(std::max(spec.eigenvalues(k), 0.0), p);
        ev.value = std::pow(acc, 1.0 / p);
        const double outer = std::pow(acc, 1.0 / p - 1.0);
        for (Eigen::Index k = 0; k < n; ++k)
            weights(k) = outer * std::pow(std::max(spec.eigenvalues(k), 0.0), p - 1.0);
    } else {
        double h = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            const double lam = std::max(spec.eigenvalues(k), 0.0);
            if (lam > 0.0) h -= lam * std::log(lam);
            weights(k) = std::log(std::max(lam, 1e-18)) + 1.0;
        }
        ev.value = -h;
    }
    const Matrix m = spec.eigenvectors * weights.asDiagonal() * spec.eigenvectors.adjoint();
    ev.gradient = dual_apply(channel, m) * psi;
    return ev;
}

struct AscentOutcome {
    Vector state;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Projected gradient ascent on the unit sphere with adaptive step halving.
// project() restricts a candidate direction to the admissible subspace (used
// by the Schmidt-diagonal search); identity for the full search.
AscentOutcome ascend(const KrausSet& channel, Vector psi, double p,
                     const PuritySearchConfig& config,
                     const std::function<Vector(const Vector&)>& project) {
    AscentOutcome out;
    double step = config.step;
    Evaluation ev = evaluate(channel, psi, p);
    for (int iter = 0; iter < config.max_iters; ++iter) {
        out.iterations = iter + 1;
        Vector dir = project(ev.gradient);
        dir -= psi * psi.dot(dir);  // tangent to the sphere
        bool improved = false;
        while (step > 1e-14) {
            Vector cand = project(psi + step * dir);
            cand /= cand.norm();
            Evaluation cev = evaluate(channel, cand, p);
            if (cev.value > ev.value) {
                if (cev.value - ev.value < config.tol) {
                    psi = cand;
                    ev = cev;
                    out.converged = true;
                } else {
                    psi = cand;
                    ev = cev;
                    step *= 1.5;
                    improved = true;
                }
                break;
            }
            step *= 0.5;
        }
        if (out.converged || !improved) {
            out.converged = true;
            break;
        }
    }
    out.state = psi;
    out.value = ev.value;
    return out;
}

PurityResult run_search(const KrausSet& channel, const PuritySearchConfig& config,
                        const std::function<Vector(Rng&)>& initial,
                        const std::function<Vector(const Vector&)>& project) {
    if (config.p < 1.0) throw std::invalid_argument("nu_p: p must be >= 1");
    if (config.restarts < 1) throw std::invalid_argument("nu_p: restarts must be >= 1");
    PurityResult result;
    bool have_best = false;
    AscentOutcome best;
    for (int r = 0; r < config.restarts; ++r) {
        Rng rng(config.seed + std::uint64_t(r));
        Vector psi0 = project(initial(rng));
        psi0 /= psi0.norm();
        AscentOutcome out = ascend(channel, psi0, config.p, config, project);
        result.restarts.push_back({out.iterations, out.value, out.converged});
        result.any_converged = result.any_converged || out.converged;
        if (!have_best || out.value > best.value) {
            best = out;
            have_best = true;
        }
    }
    result.argmax_state = best.state;
    if (config.p > 1.0) {
        result.value = best.value;
        result.renyi = -(config.p / (config.p - 1.0)) * std::log(best.value);
    } else {
        result.value = 1.0;      // the 1-norm of any output state
        result.renyi = -best.value;  // minimal output von Neumann entropy
    }
    return result;
}

Vector identity_projection(const Vector& v) { return v; }

}  // namespace

double renyi_entropy(const Matrix& sigma, double p, LogBase base) {
    if (p < 1.0) throw std::invalid_argument("renyi_entropy: p must be >= 1");
    check_density(sigma);
    const HermitianSpectrum spec = hermitian_eig(sigma);
    if (p == 1.0) {
        double h = 0.0;
        for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
            const double lam = std::max(spec.eigenvalues(k), 0.0);
            if (lam > 0.0) h -= lam * log_in_base(lam, base);
        }
        return h;
    }
    double acc = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
        acc += std::pow(std::max(spec.eigenvalues(k), 0.0), p);
    return -log_in_base(acc, base) / (p - 1.0);
}

double von_neumann_entropy(const Matrix& sigma) { return renyi_entropy(sigma, 1.0); }

PurityResult nu_p(const KrausSet& channel, const PuritySearchConfig& config) {
    const int d = channel.d_in;
    return run_search(
        channel, config, [d](Rng& rng) { return random_pure_state(d, rng); },
        identity_projection);
}

PurityResult nu_p_product(const KrausSet& a, const KrausSet& b,
                          const PuritySearchConfig& config) {
    return nu_p(tensor_kraus(a, b), config);
}

PurityResult nu_p_schmidt(const KrausSet& a, const KrausSet& b,
                          const PuritySearchConfig& config) {
    if (a.d_in != b.d_in)
        throw std::invalid_argument("nu_p_schmidt: channels must share the input dimension");
    const int d = a.d_in;
    // Admissible vectors are real combinations of |jj>; the projection keeps
    // the real part of those components and zeroes everything else.
    auto project = [d](const Vector& v) {
        Vector out = Vector::Zero(Eigen::Index(d) * d);
        for (int j = 0; j < d; ++j) out(j * d + j) = v(j * d + j).real();
        return out;
    };
    auto initial = [d](Rng& rng) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        Vector v = Vector::Zero(Eigen::Index(d) * d);
        for (int j = 0; j < d; ++j) v(j * d + j) = gauss(rng);
        return v;
    };
    return run_search(tensor_kraus(a, b), config, initial, project);
}

double wh_nu_closed(int d, double p) {
    if (d < 2) throw std::invalid_argument("wh_nu_closed: d must be >= 2");
    if (p < 1.0) throw std::invalid_argument("wh_nu_closed: p must be >= 1");
    if (p == 1.0) return 1.0;
    return std::pow(double(d - 1), (1.0 - p) / p);
}

MultiplicativityReport multiplicativity_report(const KrausSet& a, const KrausSet& b,
                                               double p, const PuritySearchConfig& config) {
    PuritySearchConfig c = config;
    c.p = p;
    MultiplicativityReport report;
    report.nu1 = nu_p(a, c).value;
    report.nu2 = nu_p(b, c).value;
    report.nu12 = nu_p_product(a, b, c).value;
    report.ratio = report.nu12 / (report.nu1 * report.nu2);
    return report;
}

}  // namespace chancomp
