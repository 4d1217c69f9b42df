#include "dirac1d/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac1d/greens.hpp"
#include "dirac1d/transfer.hpp"

namespace dirac1d {

namespace {

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

}  // namespace

const char* preset_name(PresetKind kind) {
    switch (kind) {
        case PresetKind::SingleDelta: return "single";
        case PresetKind::DoubleSymmetric: return "double";
        case PresetKind::Dipole: return "dipole";
        case PresetKind::TripleSamePolarity: return "triple_same";
        case PresetKind::TripleAlternating: return "triple_alt";
    }
    throw std::logic_error("preset_name: unknown kind");
}

std::optional<PresetKind> preset_from_name(const std::string& name) {
    if (name == "single") return PresetKind::SingleDelta;
    if (name == "double") return PresetKind::DoubleSymmetric;
    if (name == "dipole") return PresetKind::Dipole;
    if (name == "triple_same") return PresetKind::TripleSamePolarity;
    if (name == "triple_alt") return PresetKind::TripleAlternating;
    return std::nullopt;
}

BoundStateProblem make_problem(PresetKind kind, const PresetParams& params) {
    if (!std::isfinite(params.g))
        throw std::invalid_argument("make_problem: g must be finite");
    const Mass mass(params.m);
    const double g = params.g;
    const double r1 = params.mR1 / mass.value();
    const double r2 = params.mR2 / mass.value();
    switch (kind) {
        case PresetKind::SingleDelta:
            return {mass, {{0.0, -g}}};
        case PresetKind::DoubleSymmetric:
            require_positive(params.mR1, "mR");
            return {mass, {{-r1, -g}, {r1, -g}}};
        case PresetKind::Dipole:
            require_positive(params.mR1, "mR");
            return {mass, {{-r1, -g}, {r1, g}}};
        case PresetKind::TripleSamePolarity:
            require_positive(params.mR1, "mR1");
            require_positive(params.mR2, "mR2");
            return {mass, {{-r1, -g}, {0.0, -g}, {r2, -g}}};
        case PresetKind::TripleAlternating:
            require_positive(params.mR1, "mR1");
            require_positive(params.mR2, "mR2");
            return {mass, {{-r1, -g}, {0.0, g}, {r2, -g}}};
    }
    throw std::logic_error("make_problem: unknown kind");
}

namespace {

/// m cos(t) sign(sin t), or absent when not strictly inside the gap
/// (sin t = 0 up to rounding: the level sits at the continuum edge).
std::optional<double> rotation_level(double t, Mass m) {
    const double s = std::sin(t);
    const double e = std::cos(t) * sign_of(s);
    if (s == 0.0 || std::abs(e) >= 1.0 - kEdgeMargin) return std::nullopt;
    return m.value() * e;
}

}  // namespace

std::optional<double> single_energy(double g, Mass m, DeltaConvention convention) {
    return rotation_level(theta_of(g, convention), m);
}

double double_symmetric_residual(double energy, double g, double R, Mass m,
                                 DeltaConvention convention, PmBranch branch) {
    detail::require_in_gap(energy, m, "double_symmetric_residual");
    if (!(R > 0.0)) throw std::invalid_argument("double_symmetric_residual: R must be > 0");
    const double k = kappa_of(energy, m);
    const double pm = branch == PmBranch::plus ? 1.0 : -1.0;
    const double shifted = energy + pm * m.value() * std::exp(-2.0 * R * k);
    if (convention == DeltaConvention::CayleySelfAdjoint)
        return (1.0 - g * g / 4.0) * k - g * shifted;
    return k * std::cos(g) - std::sin(g) * shifted;
}

EnergySpectrum dipole_energies(double g, double R, Mass m, DeltaConvention convention,
                               const SolverOptions& opts) {
    if (!(R > 0.0)) throw std::invalid_argument("dipole_energies: R must be > 0");
    const double mv = m.value();
    double amp;  // c1; the level pair is E^2 = m^2 [(1 - amp) + amp e^{-4Rk}]
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        amp = 16.0 * g * g / ((g * g + 4.0) * (g * g + 4.0));
    } else {
        const double s = std::sin(g);
        amp = s * s;
    }
    EnergySpectrum spectrum;
    if (amp == 0.0) return spectrum;  // no interaction: free fermion only

    const double c0 = 1.0 - amp;
    const double top = mv * (1.0 - opts.edge_margin);
    const auto envelope = [&](double u) {
        const double k = std::sqrt((mv - u) * (mv + u));
        return mv * std::sqrt(c0 + amp * std::exp(-4.0 * R * k));
    };

    double u = 0.7 * mv;
    bool converged = false;
    for (int i = 0; i < 200; ++i) {
        const double next = 0.5 * u + 0.5 * envelope(std::min(u, mv));
        if (std::abs(next - u) < 1e-13 * mv) {
            u = next;
            converged = true;
            break;
        }
        u = next;
    }
    if (!converged || !(u < top)) {
        // bisection fallback on u^2 - envelope^2, monotone-bracketed on [0, top]
        const auto resid = [&](double v) { return v * v - envelope(v) * envelope(v); };
        if (!(resid(top) > 0.0)) return spectrum;  // level pushed into the margin
        double lo = 0.0, hi = top;
        while (hi - lo > opts.tol_energy * mv) {
            const double mid = 0.5 * (lo + hi);
            (resid(mid) < 0.0 ? lo : hi) = mid;
        }
        u = 0.5 * (lo + hi);
        if (!(u < top)) return spectrum;
    }
    const double resid = std::abs(u - envelope(u));
    const double window = 10.0 * opts.tol_energy * mv;
    spectrum.insert({-u, resid, EnergyRoot::Multiplicity::simple, "closedform", "minus"}, window);
    spectrum.insert({u, resid, EnergyRoot::Multiplicity::simple, "closedform", "plus"}, window);
    return spectrum;
}

CubicCoefficients triple_same_coeffs(double energy, double g, double R1, double R2, Mass m,
                                     DeltaConvention convention) {
    detail::require_in_gap(energy, m, "triple_same_coeffs");
    if (!(R1 > 0.0) || !(R2 > 0.0))
        throw std::invalid_argument("triple_same_coeffs: R1, R2 must be > 0");
    const double k = kappa_of(energy, m);
    const double e1 = std::exp(-2.0 * R1 * k);
    const double e2 = std::exp(-2.0 * R2 * k);
    const double e12 = e1 * e2;
    double weight;
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        const double q = 1.0 - g * g / 4.0;
        if (q == 0.0) throw std::domain_error("triple_same_coeffs: singular at g = +-2");
        weight = g * g / (q * q);
    } else {
        const double t = std::tan(g);
        weight = t * t;
    }
    return {weight * (e1 + e2 + e12) - 1.0, 3.0 - weight * (e1 + e2 - e12),
            (1.0 + e1) * (1.0 + e2) - 4.0, (1.0 - e1) * (1.0 - e2)};
}

double triple_same_residual(double energy, double g, double R1, double R2, Mass m,
                            DeltaConvention convention) {
    const auto c = triple_same_coeffs(energy, g, R1, R2, m, convention);
    const double y = convention == DeltaConvention::CayleySelfAdjoint
                         ? x_variable(energy, m, g)
                         : energy * std::tan(g) / kappa_of(energy, m);
    return ((c.G3 * y + c.G2) * y + c.G1) * y + c.G0;
}

AlternatingFactors triple_alternating_residuals(double energy, double g, double R1, double R2,
                                                Mass m, DeltaConvention convention) {
    detail::require_in_gap(energy, m, "triple_alternating_residuals");
    if (!(R1 > 0.0) || !(R2 > 0.0))
        throw std::invalid_argument("triple_alternating_residuals: R1, R2 must be > 0");
    const double k = kappa_of(energy, m);
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        const double x = x_variable(energy, m, g);
        const double e1 = std::exp(-2.0 * R1 * k);
        const double e2 = std::exp(-2.0 * R2 * k);
        const double gm4 = (g * g - 4.0) * (g * g - 4.0);
        const double d = (gm4 + 16.0 * g * g * (e1 + e2 - e1 * e2)) /
                         (gm4 * (1.0 - e1) * (1.0 - e2));
        return {x - 1.0, x * x - d};
    }
    const double y = energy * std::tan(g) / k;
    const double t1 = std::tanh(R1 * k);
    const double t2 = std::tanh(R2 * k);
    const double cg = std::cos(g);
    const double tg = std::tan(g);
    const double d = 0.25 / (cg * cg) * (1.0 + t1) * (1.0 + t2) - tg * tg * t1 * t2;
    return {y - 1.0, y * y * t1 * t2 - d};
}

std::optional<double> merged_limit_energy(int n_centers, double g, Mass m,
                                          DeltaConvention convention) {
    if (n_centers < 1 || n_centers > 3)
        throw std::invalid_argument("merged_limit_energy: n_centers must be 1, 2 or 3");
    return rotation_level(n_centers * theta_of(g, convention), m);
}

namespace {

// Pole-free rearrangements used for root location: the verbatim forms above
// carry 1/(1-g^2/4) (Cayley) or tan g (Squeeze) factors; multiplying through
// by the appropriate powers of kappa*(1-g^2/4) or cos g leaves polynomials in
// E, kappa, e^{-2 z_j} with identical root sets.

double cleared_triple_same(double energy, double g, double R1, double R2, Mass m,
                           DeltaConvention convention) {
    const double k = kappa_of(energy, m);
    const double e1 = std::exp(-2.0 * R1 * k);
    const double e2 = std::exp(-2.0 * R2 * k);
    const double sp = e1 + e2 + e1 * e2;
    const double sm = e1 + e2 - e1 * e2;
    const double g2 = (1.0 + e1) * (1.0 + e2) - 4.0;
    const double g3 = (1.0 - e1) * (1.0 - e2);
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        const double q = 1.0 - g * g / 4.0;
        const double eg = energy * g;
        return g3 * eg * eg * eg + g2 * eg * eg * k * q +
               eg * k * k * (3.0 * q * q - g * g * sm) + k * k * k * q * (g * g * sp - q * q);
    }
    const double c = std::cos(g);
    const double s = std::sin(g);
    const double ys = energy * s;  // = Y * kappa * cos g
    return g3 * ys * ys * ys + g2 * ys * ys * k * c +
           ys * k * k * (3.0 * c * c - s * s * sm) + k * k * k * c * (s * s * sp - c * c);
}

/// Refines a triple-same root through the cubic rewritten in u = Y - 1 with
/// algebraically expanded coefficients:
///   G3 u^3 - 2(e1+e2-2e12) u^2 + [(5+w)e12 - (1+w)(e1+e2)] u + 2(1+w)e12 = 0.
/// Near coinciding levels the direct residual only locates roots to the cube
/// root of machine epsilon (three O(1) terms cancel); the expanded form keeps
/// relative accuracy in the exponentially small splittings.
std::optional<double> polish_triple_same(double seed, double g, double R1, double R2, Mass m,
                                         DeltaConvention convention) {
    const double mv = m.value();
    double w, slope;  // Y = E * slope / kappa
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        const double q = 1.0 - g * g / 4.0;
        if (q == 0.0) return std::nullopt;
        slope = g / q;
        w = slope * slope;
    } else {
        slope = std::tan(g);
        w = slope * slope;
    }
    const double sgn = slope >= 0.0 ? 1.0 : -1.0;

    double energy = seed;
    for (int outer = 0; outer < 60; ++outer) {
        const double k = kappa_of(energy, m);
        const double e1 = std::exp(-2.0 * R1 * k);
        const double e2 = std::exp(-2.0 * R2 * k);
        const double e12 = e1 * e2;
        const double g3 = (1.0 - e1) * (1.0 - e2);
        const double a = -2.0 * (e1 + e2 - 2.0 * e12);
        const double b = (5.0 + w) * e12 - (1.0 + w) * (e1 + e2);
        const double c = 2.0 * (1.0 + w) * e12;

        double u = energy * slope / k - 1.0;
        for (int it = 0; it < 100; ++it) {
            const double value = ((g3 * u + a) * u + b) * u + c;
            const double deriv = (3.0 * g3 * u + 2.0 * a) * u + b;
            if (deriv == 0.0) break;
            const double step = value / deriv;
            u -= step;
            if (std::abs(step) < 1e-18 * std::max(1.0, std::abs(u))) break;
        }
        const double y = 1.0 + u;
        const double next = mv * sgn * y / std::sqrt(y * y + w);
        if (!std::isfinite(next) || std::abs(next - seed) > 1e-3 * mv ||
            std::abs(next) >= mv * (1.0 - kEdgeMargin))
            return std::nullopt;
        if (std::abs(next - energy) < 1e-15 * mv) return next;
        energy = next;
    }
    return energy;
}

double cleared_alt_factor1(double energy, double g, Mass m, DeltaConvention convention) {
    const double k = kappa_of(energy, m);
    if (convention == DeltaConvention::CayleySelfAdjoint)
        return energy * g - k * (1.0 - g * g / 4.0);
    return energy * std::sin(g) - k * std::cos(g);
}

double cleared_alt_factor2(double energy, double g, double R1, double R2, Mass m,
                           DeltaConvention convention) {
    const double k = kappa_of(energy, m);
    const double mv = m.value();
    if (convention == DeltaConvention::CayleySelfAdjoint) {
        const double e1 = std::exp(-2.0 * R1 * k);
        const double e2 = std::exp(-2.0 * R2 * k);
        const double gm4 = (g * g - 4.0) * (g * g - 4.0);
        return 16.0 * g * g * energy * energy * (1.0 - e1) * (1.0 - e2) -
               k * k * (gm4 + 16.0 * g * g * (e1 + e2 - e1 * e2));
    }
    const double t1 = std::tanh(R1 * k);
    const double t2 = std::tanh(R2 * k);
    const double s = std::sin(g);
    return mv * mv * s * s * t1 * t2 - 0.25 * k * k * (1.0 + t1) * (1.0 + t2);
}

void insert_roots(EnergySpectrum& spectrum, const std::vector<RootResult>& roots,
                  const char* branch, double window) {
    for (const auto& r : roots)
        spectrum.insert({r.energy, r.residual, r.multiplicity, "closedform", branch}, window);
}

}  // namespace

EnergySpectrum closedform_spectrum(PresetKind kind, const PresetParams& params,
                                   DeltaConvention convention, const SolverOptions& opts) {
    const Mass mass(params.m);
    const double mv = mass.value();
    const double g = params.g;
    const double r1 = params.mR1 / mv;
    const double r2 = params.mR2 / mv;
    const double top = mv * (1.0 - opts.edge_margin);
    const double window = 10.0 * opts.tol_energy * mv;
    EnergySpectrum spectrum;

    const auto solve_branch = [&](const RealFunction& f, std::optional<int> hint,
                                  const char* branch) {
        SolverOptions local = opts;
        local.root_count_hint = hint;
        insert_roots(spectrum, solve_all(f, -top, top, local, mass), branch, window);
    };

    switch (kind) {
        case PresetKind::SingleDelta: {
            if (const auto e = single_energy(g, mass, convention)) {
                if (std::abs(*e) < top)
                    spectrum.insert({*e, 0.0, EnergyRoot::Multiplicity::simple, "closedform",
                                     "single"},
                                    window);
            }
            break;
        }
        case PresetKind::DoubleSymmetric: {
            require_positive(params.mR1, "mR");
            for (const auto& [branch, name] :
                 {std::pair{PmBranch::plus, "plus"}, std::pair{PmBranch::minus, "minus"}}) {
                const PmBranch b = branch;
                solve_branch(
                    [&, b](double e) {
                        return double_symmetric_residual(e, g, r1, mass, convention, b);
                    },
                    std::nullopt, name);
            }
            break;
        }
        case PresetKind::Dipole: {
            require_positive(params.mR1, "mR");
            return dipole_energies(g, r1, mass, convention, opts);
        }
        case PresetKind::TripleSamePolarity: {
            require_positive(params.mR1, "mR1");
            require_positive(params.mR2, "mR2");
            const bool near_cayley_pole = convention == DeltaConvention::CayleySelfAdjoint &&
                                          std::abs(std::abs(g) - 2.0) <= 1e-4;
            if (near_cayley_pole) {
                // 1 - g^2/4 vanishes but det Delta stays regular
                const auto problem = make_problem(kind, params);
                solve_branch([&](double e) { return delta_determinant(problem, e); }, 3, "");
            } else {
                const auto residual = [&](double e) {
                    return cleared_triple_same(e, g, r1, r2, mass, convention);
                };
                SolverOptions local = opts;
                local.root_count_hint = 3;
                for (const auto& r : solve_all(residual, -top, top, local, mass)) {
                    EnergyRoot root{r.energy, r.residual, r.multiplicity, "closedform", ""};
                    if (const auto polished =
                            polish_triple_same(r.energy, g, r1, r2, mass, convention)) {
                        root.energy = *polished;
                        root.residual = std::abs(residual(*polished));
                    }
                    spectrum.insert(std::move(root), window);
                }
            }
            break;
        }
        case PresetKind::TripleAlternating: {
            require_positive(params.mR1, "mR1");
            require_positive(params.mR2, "mR2");
            solve_branch(
                [&](double e) { return cleared_alt_factor1(e, g, mass, convention); }, 1,
                "decoupled");
            SolverOptions local = opts;
            local.root_count_hint = 2;
            const auto pair_roots = solve_all(
                [&](double e) {
                    return cleared_alt_factor2(e, g, r1, r2, mass, convention);
                },
                -top, top, local, mass);
            for (const auto& r : pair_roots)
                spectrum.insert({r.energy, r.residual, r.multiplicity, "closedform",
                                 r.energy < 0.0 ? "minus" : "plus"},
                                window);
            break;
        }
    }
    return spectrum;
}

}  // namespace dirac1d
