#pragma once

#include <cmath>

namespace astrogate {

/// Two-pool calcium astrocyte with IP3 (S_m) and glion (G_m) mediators.
/// The defaults are the constants shared by every gate preset; alpha..delta
/// are the coupling gains that differ between presets.
struct AstrocyteParams {
    double k1 = 0.13;        ///< ER uptake scale
    double k2 = 0.9;         ///< CICR release half-activation
    double k3 = 0.004;       ///< ER leak rate
    double k4 = 2.0 / 0.04;  ///< flux coupling into dc/dt (2/eps_c by default)
    double eps_c = 0.04;     ///< time-separation of the ER pool
    double r = 0.31;         ///< steady calcium influx
    double tau_c = 8.0;      ///< calcium time constant
    double tau_sm = 100.0;   ///< IP3 mediator time constant
    double tau_gm = 50.0;    ///< glion mediator time constant
    double s_sm = 100.0;     ///< IP3 activation slope
    double s_gm = 100.0;     ///< glion activation slope
    double h_sm = 0.45;      ///< IP3 activation threshold (on g_syn)
    double h_gm = 0.5;       ///< glion activation threshold (on c)
    double d_sm = 3.0;       ///< IP3 relaxation constant
    double d_gm = 3.0;       ///< glion relaxation constant
    double alpha = 0.0;      ///< fast-pathway gain (recovery-variable influx)
    double beta = 0.0;       ///< slow-pathway gain (IP3-sensitive influx)
    double gamma = 0.0;      ///< positive-feedback gain (glion current)
    double delta = 0.0;      ///< negative-feedback gain (synaptic inhibition)
};

struct AstrocyteState {
    double c = 0.0;   ///< cytoplasmic Ca2+ concentration
    double c_e = 0.0; ///< ER Ca2+ concentration
    double s_m = 0.0; ///< IP3 mediator, stays in [0, 1]
    double g_m = 0.0; ///< glion mediator, stays in [0, 1]
};

/// Net Ca2+ flux between cytoplasm and ER: uptake - CICR release - leak.
inline double flux(double c, double c_e, const AstrocyteParams& p) {
    const double c2 = c * c;
    const double c4 = c2 * c2;
    const double ce2 = c_e * c_e;
    const double k2_4 = (p.k2 * p.k2) * (p.k2 * p.k2);
    return p.k1 * c2 / (1.0 + c2)
         - (ce2 / (1.0 + ce2)) * (c4 / (k2_4 + c4))
         - p.k3 * c_e;
}

struct CalciumPair {
    double c;
    double c_e;
};

/// Euler step of the two calcium pools. `u_rec` is the postsynaptic
/// recovery variable feeding the fast pathway (inert while alpha = 0).
inline CalciumPair calcium_step(const AstrocyteState& s, const AstrocyteParams& p,
                                double u_rec, double dt) {
    const double f = flux(s.c, s.c_e, p);
    const double dc_dt = (-s.c - p.k4 * f + (p.r + p.alpha * u_rec + p.beta * s.s_m)) / p.tau_c;
    const double dce_dt = f / (p.eps_c * p.tau_c);
    return {s.c + dt * dc_dt, s.c_e + dt * dce_dt};
}

/// Euler step of the IP3 mediator driven by the synaptic conductance.
inline double sm_step(const AstrocyteState& s, double g_syn,
                      const AstrocyteParams& p, double dt) {
    const double drive = (1.0 + std::tanh(p.s_sm * (g_syn - p.h_sm))) * (1.0 - s.s_m);
    return s.s_m + dt * ((drive - s.s_m / p.d_sm) / p.tau_sm);
}

/// Euler step of the glion mediator driven by cytoplasmic calcium.
inline double gm_step(const AstrocyteState& s, const AstrocyteParams& p, double dt) {
    const double drive = (1.0 + std::tanh(p.s_gm * (s.c - p.h_gm))) * (1.0 - s.g_m);
    return s.g_m + dt * ((drive - s.g_m / p.d_gm) / p.tau_gm);
}

/// Astrocyte-induced depolarising current.
inline double glion_current(double g_m, double gamma) {
    return gamma * g_m;
}

/// Synchronous Euler step of the whole astrocyte: every derivative is
/// evaluated on the entry state, matching a plain explicit Euler step of
/// the coupled system.
inline AstrocyteState astrocyte_step(const AstrocyteState& s, double g_syn,
                                     double u_rec, const AstrocyteParams& p,
                                     double dt) {
    const CalciumPair ca = calcium_step(s, p, u_rec, dt);
    const double sm = sm_step(s, g_syn, p, dt);
    const double gm = gm_step(s, p, dt);
    return {ca.c, ca.c_e, sm, gm};
}

} // namespace astrogate
