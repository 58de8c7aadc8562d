#include "chancomp/purity.hpp"

#include "chancomp/random.hpp"
#include "chancomp/zoo.hpp"

#include <cmath>

#include "doctest.h"

using namespace chancomp;

namespace {

Matrix diag_state(std::initializer_list<double> entries) {
    RealVector v(Eigen::Index(entries.size()));
    Eigen::Index k = 0;
    for (double e : entries) v(k++) = e;
    Matrix m = Matrix::Zero(v.size(), v.size());
    m.diagonal() = v.cast<Complex>();
    return m;
}

KrausSet identity_channel(int d) {
    KrausSet k;
    k.d_in = d;
    k.d_out = d;
    k.operators = {Matrix::Identity(d, d)};
    return k;
}

}  // namespace

TEST_CASE("renyi_entropy closed cases") {
    const Matrix rho = diag_state({0.75, 0.25});
    CHECK(renyi_entropy(rho, 2.0) == doctest::Approx(-std::log(10.0 / 16.0)).epsilon(1e-12));
    CHECK(renyi_entropy(rho, 1.0) ==
          doctest::Approx(-0.75 * std::log(0.75) - 0.25 * std::log(0.25)).epsilon(1e-12));
    CHECK(renyi_entropy(rho, 1.0, LogBase::Two) ==
          doctest::Approx(renyi_entropy(rho, 1.0) / std::log(2.0)).epsilon(1e-12));

    // Pure states have zero entropy for every p; maximally mixed gives log d.
    CHECK(renyi_entropy(diag_state({1.0, 0.0, 0.0}), 3.0) == doctest::Approx(0.0));
    for (double p : {1.0, 2.0, 5.0})
        CHECK(renyi_entropy(Matrix::Identity(4, 4) / 4.0, p) ==
              doctest::Approx(std::log(4.0)).epsilon(1e-12));

    CHECK_THROWS(renyi_entropy(rho, 0.5));
    CHECK_THROWS(renyi_entropy(2.0 * rho, 2.0));
}

TEST_CASE("renyi_entropy monotone in p") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix rho = random_density(4, rng);
        double prev = renyi_entropy(rho, 1.0);
        for (double p : {1.5, 2.0, 3.0, 5.0}) {
            const double cur = renyi_entropy(rho, p);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("nu_p on channels with known maxima") {
    PuritySearchConfig cfg;
    cfg.restarts = 16;
    cfg.seed = 11;

    SUBCASE("identity channel attains 1") {
        cfg.p = 2.0;
        const PurityResult res = nu_p(identity_channel(3), cfg);
        CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(res.any_converged);
    }

    SUBCASE("wh d=3 p=2") {
        cfg.p = 2.0;
        const PurityResult res = nu_p(wh_kraus(3), cfg);
        CHECK(res.value == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-8));
    }

    SUBCASE("td t=0 d=3 p=3: output always I/d") {
        cfg.p = 3.0;
        const PurityResult res = nu_p(td_kraus({3, 0.0}), cfg);
        CHECK(res.value == doctest::Approx(std::pow(3.0, -2.0 / 3.0)).epsilon(1e-8));
    }
}

TEST_CASE("wh nu_p matches the closed form") {
    PuritySearchConfig cfg;
    cfg.restarts = 16;
    cfg.seed = 3;
    for (int d : {3, 4})
        for (double p : {1.5, 2.0, 3.0, 5.0}) {
            cfg.p = p;
            const PurityResult res = nu_p(wh_kraus(d), cfg);
            CHECK(res.value == doctest::Approx(wh_nu_closed(d, p)).epsilon(1e-6));
            CHECK(res.renyi ==
                  doctest::Approx(std::log(double(d - 1))).epsilon(1e-5));
        }
}

TEST_CASE("p=1 minimizes output von Neumann entropy") {
    PuritySearchConfig cfg;
    cfg.p = 1.0;
    cfg.restarts = 16;
    cfg.seed = 5;
    const PurityResult res = nu_p(wh_kraus(3), cfg);
    CHECK(res.value == doctest::Approx(1.0));
    // Every pure-state output of the d=3 channel is I/2 on a 2d subspace.
    CHECK(res.renyi == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("channel and complement share output purity") {
    // Outputs on pure inputs have equal nonzero spectra, so nu_p coincides.
    PuritySearchConfig cfg;
    cfg.p = 2.0;
    cfg.restarts = 16;
    cfg.seed = 17;
    const KrausSet dep = depolarizing_kraus({3, 0.5});
    const PurityResult a = nu_p(dep, cfg);
    const PurityResult b = nu_p(complement_kraus(dep), cfg);
    CHECK(a.value == doctest::Approx(b.value).epsilon(2e-6));
}

TEST_CASE("product search over wh x complement, d=3") {
    const KrausSet wh = wh_kraus(3);
    const KrausSet comp = wh_complement_kraus(3);
    PuritySearchConfig cfg;
    cfg.restarts = 24;
    cfg.seed = 23;

    SUBCASE("p=2 is multiplicative") {
        cfg.p = 2.0;
        const PurityResult res = nu_p_product(wh, comp, cfg);
        CHECK(res.value == doctest::Approx(0.5).epsilon(1e-6));
    }

    SUBCASE("p=5 exceeds the product of marginals") {
        cfg.p = 5.0;
        const PurityResult res = nu_p_product(wh, comp, cfg);
        CHECK(res.value >= std::pow(4.147e-3, 0.2) - 1e-7);
    }

    SUBCASE("schmidt-diagonal search agrees with the full one") {
        cfg.p = 5.0;
        const PurityResult full = nu_p_product(wh, comp, cfg);
        const PurityResult restricted = nu_p_schmidt(wh, comp, cfg);
        CHECK(restricted.value <= full.value + 1e-10);
        CHECK(full.value == doctest::Approx(restricted.value).epsilon(1e-8));
    }
}

TEST_CASE("multiplicativity report") {
    const KrausSet wh = wh_kraus(3);
    const KrausSet comp = wh_complement_kraus(3);
    PuritySearchConfig cfg;
    cfg.restarts = 24;
    cfg.seed = 29;

    const MultiplicativityReport r2 = multiplicativity_report(wh, comp, 2.0, cfg);
    CHECK(r2.ratio >= 1.0 - 1e-8);
    CHECK(r2.ratio == doctest::Approx(1.0).epsilon(1e-6));

    const MultiplicativityReport r5 = multiplicativity_report(wh, comp, 5.0, cfg);
    CHECK(r5.ratio >= 1.011);
}

TEST_CASE("fixed seed gives identical results") {
    PuritySearchConfig cfg;
    cfg.p = 2.0;
    cfg.restarts = 8;
    cfg.seed = 424242;
    const KrausSet k = depolarizing_kraus({3, 0.75});
    const PurityResult a = nu_p(k, cfg);
    const PurityResult b = nu_p(k, cfg);
    CHECK(a.value == b.value);
    CHECK((a.argmax_state - b.argmax_state).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(a.restarts.size() == b.restarts.size());
    for (size_t i = 0; i < a.restarts.size(); ++i) {
        CHECK(a.restarts[i].value == b.restarts[i].value);
        CHECK(a.restarts[i].iterations == b.restarts[i].iterations);
    }
}
