#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "astrogate/astrocyte.hpp"

using namespace astrogate;

TEST_CASE("flux vanishes with both pools empty") {
    CHECK(flux(0.0, 0.0, AstrocyteParams{}) == 0.0);
}

TEST_CASE("flux at c=0 reduces to the ER leak") {
    CHECK(flux(0.0, 2.0, AstrocyteParams{}) == doctest::Approx(-0.008).epsilon(1e-15));
}

TEST_CASE("flux(1,1) matches the exact rational evaluation") {
    // k1/2 - (1/2)/(k2^4 + 1) - k3 with table constants = -3989779/16561000.
    const long double exact = -3989779.0L / 16561000.0L;
    CHECK(std::abs(flux(1.0, 1.0, AstrocyteParams{}) - static_cast<double>(exact)) < 1e-12);
}

TEST_CASE("calcium drift with empty pools is the steady influx") {
    AstrocyteParams p;
    const auto next = calcium_step(AstrocyteState{}, p, 0.0, 0.5);
    CHECK(next.c == doctest::Approx(0.5 * 0.31 / 8.0).epsilon(1e-15));
    CHECK(next.c_e == 0.0);
}

TEST_CASE("slow-pathway forcing adds beta*S_m to the influx") {
    AstrocyteParams p;
    p.beta = 0.05;
    AstrocyteState s;
    s.s_m = 1.0;
    const auto next = calcium_step(s, p, 0.0, 0.5);
    CHECK(next.c == doctest::Approx(0.5 * (0.31 + 0.05) / 8.0).epsilon(1e-15));
}

TEST_CASE("a state with zero flux and balanced influx is stationary") {
    AstrocyteParams p;
    // Solve f(r, c_e) = 0 for c_e by bisection; with c = r the -c and +r
    // terms cancel, so both derivatives vanish there.
    const double c = p.r;
    double lo = 0.0, hi = 10.0;
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        (flux(c, mid, p) > 0.0 ? lo : hi) = mid;
    }
    const double ce = 0.5 * (lo + hi);
    REQUIRE(std::abs(flux(c, ce, p)) < 1e-12);
    AstrocyteState s;
    s.c = c;
    s.c_e = ce;
    const auto next = calcium_step(s, p, 0.0, 0.5);
    CHECK(next.c == doctest::Approx(c).epsilon(1e-12));
    CHECK(next.c_e == doctest::Approx(ce).epsilon(1e-12));
}

TEST_CASE("IP3 drive saturates off below threshold and on above it") {
    AstrocyteParams p;
    AstrocyteState s;

    // g_syn = 0 << h_sm: the sigmoid saturates to -1 and nothing moves.
    CHECK(sm_step(s, 0.0, p, 0.5) == 0.0);

    // g_syn = 1 >> h_sm: dS_m/dt = 2/tau_sm.
    CHECK(sm_step(s, 1.0, p, 0.5) == doctest::Approx(0.5 * 2.0 / 100.0).epsilon(1e-15));

    // S_m = 1: only the relaxation term remains, proving the upper bound.
    s.s_m = 1.0;
    const double next = sm_step(s, 0.7, p, 0.5);
    CHECK(next - 1.0 == doctest::Approx(-0.5 / 300.0).epsilon(1e-12));
}

TEST_CASE("glion drive saturates like the IP3 drive") {
    AstrocyteParams p;
    AstrocyteState s;

    s.c = 0.0;
    CHECK(gm_step(s, p, 0.5) == 0.0);

    s.c = 1.0;
    CHECK(gm_step(s, p, 0.5) == doctest::Approx(0.5 * 2.0 / 50.0).epsilon(1e-15));

    s.c = 0.0;
    s.g_m = 1.0;
    CHECK(gm_step(s, p, 0.5) - 1.0 == doctest::Approx(-0.5 / 150.0).epsilon(1e-12));
}

TEST_CASE("glion current is the product of gain and mediator") {
    CHECK(glion_current(0.4, 1.5) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(glion_current(0.83, 0.0) == 0.0);
    CHECK(glion_current(0.0, 7.5) == 0.0);
}

TEST_CASE("k4 couples as 2/eps_c under the default constants") {
    AstrocyteParams p;
    CHECK(p.k4 * p.eps_c == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("mediators stay inside [0,1] under random bounded drive") {
    AstrocyteParams p;
    p.beta = 0.05;
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> g_dist(0.0, 4.0);
    std::uniform_real_distribution<double> u_dist(-20.0, 5.0);
    AstrocyteState s;
    for (int k = 0; k < 1000000; ++k) {
        s = astrocyte_step(s, g_dist(rng), u_dist(rng), p, 0.5);
        REQUIRE(s.s_m >= 0.0);
        REQUIRE(s.s_m <= 1.0);
        REQUIRE(s.g_m >= 0.0);
        REQUIRE(s.g_m <= 1.0);
    }
}

TEST_CASE("silent input: calcium settles to a steady state") {
    AstrocyteParams p;
    AstrocyteState s;
    for (int k = 0; k < 50000; ++k) { // 25 s at dt=0.5
        s = astrocyte_step(s, 0.0, 0.0, p, 0.5);
    }
    const double f = flux(s.c, s.c_e, p);
    const double dc_dt = (-s.c - p.k4 * f + p.r) / p.tau_c;
    const double dce_dt = f / (p.eps_c * p.tau_c);
    CHECK(std::abs(dc_dt) < 1e-6);
    CHECK(std::abs(dce_dt) < 1e-6);
}

TEST_CASE("tonic presynaptic drive pushes calcium over the glion threshold") {
    AstrocyteParams p;
    p.beta = 0.05;
    AstrocyteState s;
    double g_syn = 0.0;
    double c_max = 0.0;
    double gm_max = 0.0;
    // Replay of a tonic input: one spike every 125 ms during [500, 1500) ms.
    for (int k = 1; k <= 5000; ++k) {
        const double t = (k - 1) * 0.5;
        const bool spike = t >= 500.0 && t < 1500.0 && std::fmod(t - 500.0, 125.0) == 0.0;
        if (spike) {
            g_syn += 1.0;
        }
        s = astrocyte_step(s, g_syn, 0.0, p, 0.5);
        g_syn *= 0.95;
        if (t >= 500.0) {
            c_max = std::max(c_max, s.c);
            gm_max = std::max(gm_max, s.g_m);
        }
    }
    CHECK(c_max > p.h_gm);
    CHECK(gm_max > 0.05);
}

TEST_CASE("astrocyte_step is synchronous: order of reads cannot matter") {
    AstrocyteParams p;
    p.beta = 0.05;
    AstrocyteState s;
    s.c = 0.6;
    s.c_e = 1.1;
    s.s_m = 0.4;
    s.g_m = 0.2;
    const AstrocyteState next = astrocyte_step(s, 0.9, -13.0, p, 0.5);
    const auto ca = calcium_step(s, p, -13.0, 0.5);
    CHECK(next.c == ca.c);
    CHECK(next.c_e == ca.c_e);
    CHECK(next.s_m == sm_step(s, 0.9, p, 0.5));
    CHECK(next.g_m == gm_step(s, p, 0.5));
}
