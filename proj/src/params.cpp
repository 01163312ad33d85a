#include "rydpol/params.hpp"

#include <cmath>
#include <sstream>

namespace rydpol {

namespace {

double checked_one_minus_zeta_sq(double z) {
    const double d = 1.0 - z * z;
    if (std::abs(d) <= kZetaGuardBand) {
        std::ostringstream msg;
        msg << "zeta = " << z << " too close to the |zeta| = 1 resonance "
            << "(|1 - zeta^2| = " << std::abs(d) << " <= " << kZetaGuardBand << ")";
        throw SingularParameterError(msg.str());
    }
    return d;
}

} // namespace

void PhysicalParams::validate() const {
    auto bad = [](const std::string& m) { throw InvalidParameterError(m); };
    if (!(spacing > 0.0) || !std::isfinite(spacing)) bad("spacing_m must be > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) bad("mass_kg must be > 0");
    if (!(omega_ph > 0.0) || !std::isfinite(omega_ph)) bad("omega_ph_rad_s must be > 0");
    if (!(c3 > 0.0) || !std::isfinite(c3)) bad("c3 must be > 0");
    if (detuning == 0.0 || !std::isfinite(detuning)) bad("detuning_rad_s must be nonzero");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) bad("alpha must be > 0");
    checked_one_minus_zeta_sq(zeta(c3, detuning, spacing));
}

std::string regime_warning(const PhysicalParams& p) {
    std::ostringstream w;
    if (p.alpha < 0.01 || p.alpha > 0.1) {
        w << "alpha = " << p.alpha
          << " is outside the perturbative dressing window [0.01, 0.1]; ";
    }
    if (p.alpha >= 0.5) {
        w << "alpha is not small; the quartic dressed-interaction expansion "
          << "is unreliable; ";
    }
    return w.str();
}

double zeta(double c3, double detuning, double spacing) {
    if (!(spacing > 0.0)) throw InvalidParameterError("spacing must be > 0");
    if (detuning == 0.0) throw InvalidParameterError("detuning must be nonzero");
    const double z = c3 / (kHbar * detuning * spacing * spacing * spacing);
    if (!std::isfinite(z)) throw InvalidParameterError("zeta is not finite");
    return z;
}

double sweet_spot_zeta() {
    return (1.0 + std::sqrt(13.0)) / 6.0;
}

double sweet_spot_detuning(double c3, double spacing) {
    if (!(spacing > 0.0)) throw InvalidParameterError("spacing must be > 0");
    return c3 / (kHbar * sweet_spot_zeta() * spacing * spacing * spacing);
}

BareParams bare_params(const PhysicalParams& p) {
    const double z = zeta(p.c3, p.detuning, p.spacing);
    const double d = checked_one_minus_zeta_sq(z);
    const double a3 = p.spacing * p.spacing * p.spacing;
    const double a4 = std::pow(p.alpha, 4);
    const double hw = kHbar * p.omega_ph;
    BareParams out;
    out.eps_e = a4 * kHbar * p.detuning / d / hw;
    out.t_e = -a4 * p.c3 / (a3 * d) / hw;
    return out;
}

CouplingConstants coupling_constants(const PhysicalParams& p) {
    const double z = zeta(p.c3, p.detuning, p.spacing);
    const double d = checked_one_minus_zeta_sq(z);
    const double a4 = std::pow(p.alpha, 4);
    const double d2 = d * d;
    CouplingConstants out;
    out.xi_b = 3.0 * a4 * kHbar * p.detuning * z * z / (p.spacing * d2);
    out.xi_p = 3.0 * a4 * p.c3 * (3.0 * z * z - 1.0)
               / (std::pow(p.spacing, 4) * d2);
    return out;
}

DimensionlessCouplings dimensionless_couplings(const PhysicalParams& p) {
    const CouplingConstants xi = coupling_constants(p);
    const double s = std::sqrt(2.0 * p.mass * kHbar
                               * std::pow(p.omega_ph, 3));
    return {xi.xi_p / s, xi.xi_b / s};
}

double lambda_ss_physical(const PhysicalParams& p) {
    const double z = zeta(p.c3, p.detuning, p.spacing);
    const double zss = sweet_spot_zeta();
    if (std::abs(z / zss - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "lambda_ss closed form requires the sweet-spot detuning; "
            << "got zeta = " << z << ", expected " << zss;
        throw DomainError(msg.str());
    }
    const double a4 = std::pow(p.alpha, 4);
    const double num = 3.0 * zss * zss - 1.0;
    const double den = 1.0 - zss * zss;
    return 13.5 * a4 * p.c3 / (p.mass * p.omega_ph * p.omega_ph
                               * std::pow(p.spacing, 5))
           * num * num / (den * den * den);
}

namespace {

// Resonance factor 1 / (1 - zeta^2 x^6) with x = 1 + du/a.  The sixth power
// grows with stretching so that the linear-order slopes reproduce the
// xi_b/xi_p coefficients above, sign included.
double resonance_bracket(double du_over_a, double z) {
    const double x = 1.0 + du_over_a;
    const double x6 = std::pow(x, 6);
    const double den = 1.0 - z * z * x6;
    if (std::abs(den) <= kZetaGuardBand) {
        throw SingularGeometryError(
            "displacement hit the dressed-interaction resonance denominator");
    }
    return 1.0 / den;
}

} // namespace

double exact_onsite(double u_prev, double u_n, double u_next,
                    const PhysicalParams& p) {
    const double z = zeta(p.c3, p.detuning, p.spacing);
    const double a4 = std::pow(p.alpha, 4);
    const double fwd = resonance_bracket((u_next - u_n) / p.spacing, z);
    const double bwd = resonance_bracket((u_n - u_prev) / p.spacing, z);
    return 0.5 * a4 * kHbar * p.detuning * (fwd + bwd);
}

double exact_hopping(double u_n, double u_next, const PhysicalParams& p) {
    const double z = zeta(p.c3, p.detuning, p.spacing);
    const double a4 = std::pow(p.alpha, 4);
    const double r = p.spacing + u_next - u_n;
    if (!(std::abs(r) > 0.0)) {
        throw SingularGeometryError("atoms coincide: zero bond length");
    }
    return a4 * p.c3 / (r * r * r)
           * resonance_bracket((u_next - u_n) / p.spacing, z);
}

ModelParams to_model_params(const PhysicalParams& p, int n_sites,
                            int max_phonons) {
    p.validate();
    const BareParams bare = bare_params(p);
    const DimensionlessCouplings g = dimensionless_couplings(p);
    ModelParams mp;
    mp.eps_e = bare.eps_e;
    mp.t_e = bare.t_e;
    mp.g_p = g.g_p;
    mp.g_b = g.g_b;
    mp.omega_ph = 1.0;
    mp.n_sites = n_sites;
    mp.max_phonons = max_phonons;
    validate(mp);
    return mp;
}

void validate(const ModelParams& mp) {
    if (mp.n_sites < 2) throw InvalidParameterError("n_sites must be >= 2");
    if (mp.max_phonons < 0) throw InvalidParameterError("max_phonons must be >= 0");
    if (!std::isfinite(mp.eps_e) || !std::isfinite(mp.t_e)
        || !std::isfinite(mp.g_p) || !std::isfinite(mp.g_b)
        || !std::isfinite(mp.omega_ph)) {
        throw InvalidParameterError("model parameters must be finite");
    }
}

} // namespace rydpol
