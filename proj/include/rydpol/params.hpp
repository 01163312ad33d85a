// params.hpp — laboratory-frame tweezer-array parameters and their mapping
// onto the dimensionless excitation-phonon lattice model.
//
// Unit conventions: every frequency is an angular frequency in rad/s; the
// dipolar constant carries J m^3; lengths are in m, masses in kg.  Model
// energies (eps_e, t_e) are expressed in units of hbar*omega_ph.

#pragma once

#include <string>

#include "rydpol/errors.hpp"

namespace rydpol {

// Reduced Planck constant [J s], 2018 CODATA.
inline constexpr double kHbar = 1.054571817e-34;

// 87Rb atomic mass [kg]; default for the `mass_kg` config key.
inline constexpr double kRb87MassKg = 1.4432e-25;

// Guard band: |1 - zeta^2| must exceed this for the effective-model
// denominators to be well-conditioned in double precision.
inline constexpr double kZetaGuardBand = 1e-9;

struct PhysicalParams {
    double alpha = 0.0;         // dressing parameter, dimensionless
    double rabi = 0.0;          // total Rabi frequency Omega [rad/s], informational
    double detuning = 0.0;      // total detuning Delta = Delta_s + Delta_p [rad/s]
    double c3 = 0.0;            // dipole-dipole constant C3 [J m^3]
    double spacing = 0.0;       // array period a [m]
    double mass = kRb87MassKg;  // atom mass [kg]
    double omega_ph = 0.0;      // trap = phonon frequency [rad/s]

    // Throws InvalidParameterError / SingularParameterError on hard
    // violations.  Soft regime issues are reported by regime_warning().
    void validate() const;
};

// Non-fatal regime advisories (e.g. alpha outside the perturbative window
// [0.01, 0.1]).  Empty string when all is well.
std::string regime_warning(const PhysicalParams& p);

// Dimensionless effective model.  Energies in units of hbar*omega_ph;
// omega_ph is carried as the model energy unit and stays 1 for anything
// produced by to_model_params().
struct ModelParams {
    double eps_e = 0.0;     // bare on-site energy
    double t_e = 0.0;       // bare hopping amplitude, signed
    double g_p = 0.0;       // bond (hopping-modulation) coupling
    double g_b = 0.0;       // breathing-mode coupling
    double omega_ph = 1.0;  // phonon quantum in model units
    int n_sites = 0;        // N
    int max_phonons = 0;    // M, cap on the total phonon number
};

void validate(const ModelParams& mp);

// zeta = C3 / (hbar * Delta * a^3)
double zeta(double c3, double detuning, double spacing);

// The coupling-balance point: positive root of 3 z^2 - z - 1 = 0,
// (1 + sqrt(13)) / 6.
double sweet_spot_zeta();

// Detuning that places zeta at the balance point: C3 / (hbar zeta_ss a^3).
double sweet_spot_detuning(double c3, double spacing);

struct BareParams {
    double eps_e;  // in units of hbar*omega_ph
    double t_e;    // in units of hbar*omega_ph; negative for |zeta| < 1
};
BareParams bare_params(const PhysicalParams& p);

// Linear displacement-coupling coefficients [N]:
//   xi_b = 3 a^4 hbar Delta zeta^2 / (a (1 - zeta^2)^2)   (on-site)
//   xi_p = 3 a^4 C3 (3 zeta^2 - 1) / (a^4 (1 - zeta^2)^2) (bond)
// where a^4 above abbreviates alpha^4.
struct CouplingConstants {
    double xi_b;
    double xi_p;
};
CouplingConstants coupling_constants(const PhysicalParams& p);

// g = xi / sqrt(2 m hbar omega_ph^3)
struct DimensionlessCouplings {
    double g_p;
    double g_b;
};
DimensionlessCouplings dimensionless_couplings(const PhysicalParams& p);

// Closed-form effective coupling, valid only at the sweet spot:
//   lambda = (27/2) alpha^4 C3 / (m omega^2 a^5) (3 z^2 - 1)^2 / (1 - z^2)^3.
// Throws DomainError when the detuning is not the sweet-spot one.
double lambda_ss_physical(const PhysicalParams& p);

// Full nonlinear on-site energy [J] at displacements (u_prev, u_n, u_next)
// [m] of sites n-1, n, n+1.  Exists to validate the linear expansion.
double exact_onsite(double u_prev, double u_n, double u_next,
                    const PhysicalParams& p);

// Full nonlinear hopping amplitude [J] for the bond (n, n+1).
double exact_hopping(double u_n, double u_next, const PhysicalParams& p);

// Complete mapping chain; eps_e/t_e/g in units of hbar*omega_ph.
ModelParams to_model_params(const PhysicalParams& p, int n_sites,
                            int max_phonons);

} // namespace rydpol
