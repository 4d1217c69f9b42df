// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dirac1d/closedform.hpp"
#include "dirac1d/config.hpp"
#include "dirac1d/core.hpp"
#include "dirac1d/greens.hpp"
#include "dirac1d/rootfind.hpp"
#include "dirac1d/transfer.hpp"

using namespace dirac1d;

namespace {

const Mass m1(1.0);
constexpr double kPi = 3.14159265358979323846;

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void report(int number, const std::string& label, const Checker& c) {
    if (c.ok) {
        std::printf("PASS  criterion %2d: %s\n", number, label.c_str());
    } else {
        std::printf("FAIL  criterion %2d: %s  [%s]\n", number, label.c_str(), c.detail.c_str());
        ++failures;
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

EnergySpectrum spectrum_of(Method method, PresetKind kind, const PresetParams& params,
                           DeltaConvention conv) {
    switch (method) {
        case Method::greens: return greens_spectrum(make_problem(kind, params));
        case Method::transfer: return transfer_spectrum(make_problem(kind, params), {}, conv);
        case Method::closedform: return closedform_spectrum(kind, params, conv);
    }
    return {};
}

double nearest(const std::vector<double>& levels, double e) {
    double best = levels.front();
    for (double v : levels)
        if (std::abs(e - v) < std::abs(e - best)) best = v;
    return best;
}

// ---------------------------------------------------------------- criteria

void criterion1() {
    Checker c;
    const auto greens = greens_spectrum(make_problem(PresetKind::SingleDelta, {1.0, 0, 0, 1.0}));
    c.require(greens.size() == 1, "greens root count");
    if (!greens.empty())
        c.require(std::abs(greens.roots()[0].energy - 0.6) < 1e-10,
                  "greens single g=1: " + fmt(greens.roots()[0].energy));

    const auto squeeze = transfer_spectrum(
        make_problem(PresetKind::SingleDelta, {kPi / 3.0, 0, 0, 1.0}), {},
        DeltaConvention::SqueezedRectangle);
    c.require(squeeze.size() == 1, "squeeze root count");
    if (!squeeze.empty())
        c.require(std::abs(squeeze.roots()[0].energy - 0.5) < 1e-10,
                  "squeeze single g=pi/3: " + fmt(squeeze.roots()[0].energy));
    report(1, "single-center exactness (0.6 m and 0.5 m within 1e-10)", c);
}

void criterion2() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const PresetKind kinds[] = {PresetKind::DoubleSymmetric, PresetKind::Dipole,
                                PresetKind::TripleSamePolarity, PresetKind::TripleAlternating};
    for (PresetKind kind : kinds) {
        for (double g : {0.5, 1.5, 2.5}) {
            for (double mr : {0.25, 1.0, 4.0}) {
                const PresetParams params{g, mr, mr, 1.0};
                const std::string tag = std::string(preset_name(kind)) + " g=" + fmt(g) +
                                        " mR=" + fmt(mr);
                const auto greens = spectrum_of(Method::greens, kind, params,
                                                DeltaConvention::CayleySelfAdjoint);
                const auto tr_cay = spectrum_of(Method::transfer, kind, params,
                                                DeltaConvention::CayleySelfAdjoint);
                const auto cf_cay = spectrum_of(Method::closedform, kind, params,
                                                DeltaConvention::CayleySelfAdjoint);
                const auto tr_sq = spectrum_of(Method::transfer, kind, params,
                                               DeltaConvention::SqueezedRectangle);
                const auto cf_sq = spectrum_of(Method::closedform, kind, params,
                                               DeltaConvention::SqueezedRectangle);
                c.require(greens.size() == tr_cay.size() && greens.size() == cf_cay.size(),
                          tag + " cayley counts " + fmt(double(greens.size())) + "/" +
                              fmt(double(tr_cay.size())) + "/" + fmt(double(cf_cay.size())));
                c.require(tr_sq.size() == cf_sq.size(),
                          tag + " squeeze counts " + fmt(double(tr_sq.size())) + "/" +
                              fmt(double(cf_sq.size())));
                if (!c.ok) return report(2, "cross-method equivalence", c);
                for (std::size_t i = 0; i < greens.size(); ++i) {
                    const double a = greens.roots()[i].energy;
                    const double b = tr_cay.roots()[i].energy;
                    const double d = cf_cay.roots()[i].energy;
                    c.require(std::abs(a - b) < 1e-9 && std::abs(a - d) < 1e-9 &&
                                  std::abs(b - d) < 1e-9,
                              tag + " cayley root " + fmt(a) + "/" + fmt(b) + "/" + fmt(d));
                }
                for (std::size_t i = 0; i < tr_sq.size(); ++i) {
                    const double a = tr_sq.roots()[i].energy;
                    const double b = cf_sq.roots()[i].energy;
                    c.require(std::abs(a - b) < 1e-9,
                              tag + " squeeze root " + fmt(a) + "/" + fmt(b));
                }
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(seconds < 5.0, "runtime " + fmt(seconds) + " s");
    report(2, "cross-method equivalence over 4 presets x 3 g x 3 mR within 1e-9 m, < 5 s", c);
}

void criterion3() {
    Checker c;
    for (double g : {0.3, 0.7, 1.0}) {
        const auto dbl = transfer_spectrum(
            make_problem(PresetKind::DoubleSymmetric, {g, 1e-6, 1e-6, 1.0}), {},
            DeltaConvention::SqueezedRectangle);
        const auto s2 = single_energy(2.0 * g, m1, DeltaConvention::SqueezedRectangle);
        c.require(!dbl.empty() && s2.has_value(), "double squeeze g=" + fmt(g) + " missing root");
        if (!dbl.empty() && s2)
            c.require(std::abs(nearest({dbl.roots().back().energy, dbl.roots().front().energy},
                                       *s2) -
                               *s2) < 1e-5,
                      "double g=" + fmt(g));

        const auto trp = transfer_spectrum(
            make_problem(PresetKind::TripleSamePolarity, {g, 1e-6, 1e-6, 1.0}), {},
            DeltaConvention::SqueezedRectangle);
        const double target =
            std::cos(3.0 * g) * (std::sin(3.0 * g) >= 0.0 ? 1.0 : -1.0);
        c.require(!trp.empty(), "triple squeeze g=" + fmt(g) + " missing root");
        if (!trp.empty()) {
            double best = trp.roots().front().energy;
            for (const auto& r : trp.roots())
                if (std::abs(r.energy - target) < std::abs(best - target)) best = r.energy;
            c.require(std::abs(best - target) < 1e-5,
                      "triple g=" + fmt(g) + " got " + fmt(best) + " want " + fmt(target));
        }
    }
    report(3, "squeeze additivity at mR = 1e-6 (single(2g), cos(3g) sign(sin 3g) within 1e-5 m)",
           c);
}

void criterion4() {
    Checker c;
    const double g = 1.5;
    const double merged = (std::pow(g, 4) - 24.0 * g * g + 16.0) / std::pow(g * g + 4.0, 2) *
                          (4.0 - g * g >= 0.0 ? 1.0 : -1.0);
    const auto spectrum =
        greens_spectrum(make_problem(PresetKind::DoubleSymmetric, {g, 1e-6, 1e-6, 1.0}));
    c.require(!spectrum.empty(), "no root at mR = 1e-6");
    if (!spectrum.empty()) {
        const double root = spectrum.roots().front().energy;
        c.require(std::abs(root - merged) < 1e-5,
                  "root " + fmt(root) + " vs merged " + fmt(merged));
        const double naive = *single_energy(2.0 * g, m1, DeltaConvention::CayleySelfAdjoint);
        c.require(std::abs(root - naive) > 0.01,
                  "too close to single(2g) = " + fmt(naive));
    }
    report(4, "cayley non-additivity witness at g = 1.5 (merged formula hit, single(2g) missed)",
           c);
}

void criterion5() {
    Checker c;
    const double g = 1.5;
    const PresetKind kinds[] = {PresetKind::SingleDelta, PresetKind::DoubleSymmetric,
                                PresetKind::Dipole, PresetKind::TripleSamePolarity,
                                PresetKind::TripleAlternating};
    for (auto conv : {DeltaConvention::CayleySelfAdjoint, DeltaConvention::SqueezedRectangle}) {
        const double single = *single_energy(g, m1, conv);
        for (PresetKind kind : kinds) {
            const PresetParams params{g, 20.0, 20.0, 1.0};
            // The determinant keeps relative accuracy at exponentially small
            // level splittings (near-block-diagonal products); the transfer
            // residual localizes a triply coincident root only to the cube
            // root of machine epsilon, so the squeeze side is checked through
            // the closed forms.
            const auto spectrum = conv == DeltaConvention::CayleySelfAdjoint
                                      ? spectrum_of(Method::greens, kind, params, conv)
                                      : spectrum_of(Method::closedform, kind, params, conv);
            std::vector<double> expected{single};
            if (kind == PresetKind::Dipole)
                expected = {std::abs(single), -std::abs(single)};
            else if (kind == PresetKind::TripleAlternating)
                expected = {single, std::abs(single), -std::abs(single)};
            const std::string tag = std::string(preset_name(kind)) + "/" +
                                    (conv == DeltaConvention::CayleySelfAdjoint ? "cayley"
                                                                                : "squeeze");
            c.require(!spectrum.empty(), tag + ": no roots found");
            for (const auto& root : spectrum.roots()) {
                const double want = nearest(expected, root.energy);
                c.require(std::abs(root.energy - want) < 1e-8,
                          tag + ": root " + fmt(root.energy) + " vs " + fmt(want));
            }
        }
    }
    report(5, "far separation mR = 20: every root within 1e-8 m of a single-center level", c);
}

void criterion6() {
    Checker c;
    // +-symmetry across engines and parameters
    for (double g : {0.5, 1.5, 2.5}) {
        for (double mr : {0.25, 1.0, 4.0}) {
            const PresetParams params{g, mr, mr, 1.0};
            for (Method method : {Method::greens, Method::transfer, Method::closedform}) {
                const auto conv = method == Method::greens
                                      ? DeltaConvention::CayleySelfAdjoint
                                      : DeltaConvention::SqueezedRectangle;
                const auto s = spectrum_of(method, PresetKind::Dipole, params, conv);
                if (s.size() == 2)
                    c.require(std::abs(s.roots()[0].energy + s.roots()[1].energy) < 1e-10,
                              std::string(method_name(method)) + " asymmetric at g=" + fmt(g) +
                                  " mR=" + fmt(mr));
            }
        }
    }
    // annihilation at mR = 1e-6
    const PresetParams tiny{1.5, 1e-6, 1e-6, 1.0};
    c.require(spectrum_of(Method::greens, PresetKind::Dipole, tiny,
                          DeltaConvention::CayleySelfAdjoint)
                  .empty(),
              "greens found a level at mR = 1e-6");
    c.require(spectrum_of(Method::transfer, PresetKind::Dipole, tiny,
                          DeltaConvention::SqueezedRectangle)
                  .empty(),
              "transfer found a level at mR = 1e-6");
    // g = 2 fixed point E = +-m e^{-2 R kappa}
    for (double mr : {0.5, 1.0, 2.0}) {
        const auto s = spectrum_of(Method::greens, PresetKind::Dipole, {2.0, mr, mr, 1.0},
                                   DeltaConvention::CayleySelfAdjoint);
        c.require(s.size() == 2, "g=2 mR=" + fmt(mr) + ": count " + fmt(double(s.size())));
        for (const auto& root : s.roots()) {
            const double want = (root.energy >= 0.0 ? 1.0 : -1.0) *
                                std::exp(-2.0 * mr * kappa_of(root.energy, m1));
            c.require(std::abs(root.energy - want) < 1e-9,
                      "g=2 mR=" + fmt(mr) + ": " + fmt(root.energy) + " vs " + fmt(want));
        }
    }
    report(6, "dipole: +- symmetry to 1e-10, annihilation at mR = 1e-6, g = 2 fixed point", c);
}

void criterion7() {
    Checker c;
    const double g = 1.5;
    for (auto conv : {DeltaConvention::CayleySelfAdjoint, DeltaConvention::SqueezedRectangle}) {
        const double single = *single_energy(g, m1, conv);
        double lo = 1.0, hi = -1.0;
        for (double mr : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const PresetParams params{g, mr, mr, 1.0};
            const auto s = conv == DeltaConvention::CayleySelfAdjoint
                               ? spectrum_of(Method::greens, PresetKind::TripleAlternating,
                                             params, conv)
                               : spectrum_of(Method::transfer, PresetKind::TripleAlternating,
                                             params, conv);
            c.require(!s.empty(), "no roots at mR = " + fmt(mr));
            if (s.empty()) continue;
            double best = s.roots().front().energy;
            for (const auto& r : s.roots())
                if (std::abs(r.energy - single) < std::abs(best - single)) best = r.energy;
            lo = std::min(lo, best);
            hi = std::max(hi, best);
        }
        c.require(hi - lo < 1e-10,
                  std::string(conv == DeltaConvention::CayleySelfAdjoint ? "cayley" : "squeeze") +
                      " spread " + fmt(hi - lo));
    }
    report(7, "decoupled triple_alt level constant over mR in {0.1..5} (spread < 1e-10 m)", c);
}

void criterion8() {
    Checker c;
    // unit determinant of the scaled transfer over a 1000-point grid
    const PresetParams params{1.5, 1.0, 1.0, 1.0};
    const PresetKind kinds[] = {PresetKind::SingleDelta, PresetKind::DoubleSymmetric,
                                PresetKind::Dipole, PresetKind::TripleSamePolarity,
                                PresetKind::TripleAlternating};
    for (PresetKind kind : kinds) {
        const auto problem = make_problem(kind, params);
        for (auto conv :
             {DeltaConvention::SqueezedRectangle, DeltaConvention::CayleySelfAdjoint}) {
            for (int i = 0; i < 1000; ++i) {
                const double e = -0.999 + 1.998 * i / 999.0;
                const auto t = total_transfer(problem, e, conv);
                if (std::abs(t.matrix.det() * std::exp(2.0 * t.log_scale) - 1.0) > 1e-12) {
                    c.require(false, std::string("det != 1 for ") + preset_name(kind) + " at E=" +
                                         fmt(e));
                    break;
                }
            }
        }
    }
    // Delta matrix entrywise vs the hand-built closed forms
    const double g = 1.5;
    for (double e : {-0.7, 0.1, 0.55}) {
        const double r = rho_of(e, m1);
        const double k = kappa_of(e, m1);
        {
            const auto delta =
                assemble_delta_matrix(make_problem(PresetKind::DoubleSymmetric, params), e);
            const double damp = std::exp(-2.0 * k);
            const double want[4][4] = {
                {-1.0 / g - r / 2.0, 0.0, -r / 2.0 * damp, 0.5 * damp},
                {0.0, -1.0 / g + 1.0 / (2.0 * r), -0.5 * damp, 1.0 / (2.0 * r) * damp},
                {-r / 2.0 * damp, -0.5 * damp, -1.0 / g - r / 2.0, 0.0},
                {0.5 * damp, 1.0 / (2.0 * r) * damp, 0.0, -1.0 / g + 1.0 / (2.0 * r)}};
            for (int row = 0; row < 4; ++row)
                for (int col = 0; col < 4; ++col)
                    c.require(std::abs(delta.at(row, col) - want[row][col]) <=
                                  1e-12 * std::max(1.0, std::abs(want[row][col])),
                              "double-delta entry (" + fmt(row) + "," + fmt(col) + ")");
        }
        {
            // triple in the derivation order (r1, r2, r3) = (-R1, +R2, 0)
            const auto delta =
                assemble_delta_matrix(make_problem(PresetKind::TripleSamePolarity, params), e);
            const double e1 = std::exp(-k), e2 = std::exp(-k), e12 = e1 * e2;
            const int perm[3] = {0, 2, 1};
            const double diag[2][2] = {{-1.0 / g - r / 2.0, 0.0},
                                       {0.0, -1.0 / g + 1.0 / (2.0 * r)}};
            const auto off = [&](double damp, double sign) {
                return std::array<std::array<double, 2>, 2>{
                    {{-r / 2.0 * damp, -sign * 0.5 * damp},
                     {sign * 0.5 * damp, 1.0 / (2.0 * r) * damp}}};
            };
            // blocks: (1,2) sign -, e12; (1,3) sign -, e1; (2,3) sign +, e2
            std::array<std::array<std::array<std::array<double, 2>, 2>, 3>, 3> want{};
            for (int b = 0; b < 3; ++b)
                want[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] = {
                    {{diag[0][0], diag[0][1]}, {diag[1][0], diag[1][1]}}};
            want[0][1] = off(e12, -1.0);
            want[1][0] = off(e12, 1.0);
            want[0][2] = off(e1, -1.0);
            want[2][0] = off(e1, 1.0);
            want[1][2] = off(e2, 1.0);
            want[2][1] = off(e2, -1.0);
            for (int bi = 0; bi < 3; ++bi)
                for (int bj = 0; bj < 3; ++bj) {
                    const Matrix2 got = delta.block(bi, bj);
                    const auto& w = want[static_cast<std::size_t>(perm[bi])]
                                        [static_cast<std::size_t>(perm[bj])];
                    c.require(std::abs(got.a11 - w[0][0]) <= 1e-12 &&
                                  std::abs(got.a12 - w[0][1]) <= 1e-12 &&
                                  std::abs(got.a21 - w[1][0]) <= 1e-12 &&
                                  std::abs(got.a22 - w[1][1]) <= 1e-12,
                              "triple-delta block (" + fmt(bi) + "," + fmt(bj) + ")");
                }
        }
    }
    // rho-power identities on a 1000-point grid
    for (int i = 0; i < 1000; ++i) {
        const double e = -0.999 + 1.998 * i / 999.0;
        const auto p = rho_power_identities(e, m1);
        const double q = e / kappa_of(e, m1);
        const bool ok = std::abs(p.p1 - 2.0 * q) <= 1e-12 * std::max(1.0, std::abs(p.p1)) &&
                        std::abs(p.p2 - 2.0 * (1.0 + 2.0 * q * q)) <=
                            1e-12 * std::max(1.0, std::abs(p.p2)) &&
                        std::abs(p.p3 + 2.0 * (3.0 * q + 4.0 * q * q * q)) <=
                            1e-12 * std::max(1.0, std::abs(p.p3));
        if (!ok) {
            c.require(false, "rho-power identity at E = " + fmt(e));
            break;
        }
    }
    report(8, "structural invariants: transfer det, Delta-matrix entries, rho-power identities",
           c);
}

void criterion9() {
    Checker c;
    const double g = 1.5, R = 1.0;
    const auto problem = make_problem(PresetKind::DoubleSymmetric, {g, 1.0, 1.0, 1.0});
    SolverOptions opts;
    opts.root_count_hint = 2;

    const auto delta_roots = solve_all(
        [&](double e) {
            return bound_state_residual(problem, e, DeltaConvention::SqueezedRectangle);
        },
        -1.0 + 1e-9, 1.0 - 1e-9, opts, m1);
    c.require(delta_roots.size() == 2, "delta reference count");

    std::vector<std::vector<double>> errors;
    for (double l : {1e-2, 1e-3, 1e-4}) {
        const auto resid = [&](double e) {
            Matrix2 lam = segment_matrix({-g / l, l}, e, m1);
            lam = free_gap_matrix(2.0 * R - l, e, m1) * lam;
            lam = segment_matrix({-g / l, l}, e, m1) * lam;
            return bound_state_residual(lam, e, m1);
        };
        const auto roots = solve_all(resid, -1.0 + 1e-9, 1.0 - 1e-9, opts, m1);
        c.require(roots.size() == delta_roots.size(), "rect count at l=" + fmt(l));
        if (roots.size() != delta_roots.size()) break;
        std::vector<double> errs;
        for (std::size_t i = 0; i < roots.size(); ++i)
            errs.push_back(std::abs(roots[i].energy - delta_roots[i].energy));
        errors.push_back(errs);
    }
    if (errors.size() == 3) {
        for (std::size_t root = 0; root < errors[0].size(); ++root) {
            for (std::size_t step = 1; step < 3; ++step) {
                const double ratio = errors[step - 1][root] / errors[step][root];
                c.require(ratio > 8.0 && ratio < 12.0,
                          "ratio " + fmt(ratio) + " for root " + fmt(double(root)));
            }
        }
    }
    report(9, "rectangular squeeze chain converges first order (error ratio 10 +- 2 per decade)",
           c);
}

struct FigureData {
    std::vector<ResultRow> rows;
    // per convention: mR -> sorted energies (markers excluded)
    std::map<std::string, std::map<double, std::vector<double>>> curves;
    std::vector<ResultRow> markers;
};

FigureData run_figure(const std::string& name) {
    const auto fig = figure_preset(name);
    FigureData data;
    data.rows = run_sweep(fig->config, fig->sweep);
    for (const auto& row : data.rows) {
        if (row.status == "marker") {
            data.markers.push_back(row);
            continue;
        }
        if (!row.e_over_m) continue;
        const double axis = fig->sweep.axis == SweepSpec::Axis::distance ? *row.mr1 : *row.g;
        data.curves[row.convention][axis].push_back(*row.e_over_m);
    }
    for (auto& [conv, curve] : data.curves)
        for (auto& [axis, levels] : curve) std::sort(levels.begin(), levels.end());
    return data;
}

void criterion10() {
    Checker c;
    const double g = 1.5;

    // frozen row counts for the figure CSVs (deterministic goldens)
    const std::map<std::string, std::size_t> golden = {
        {"figure1b", 1982}, {"figure2b", 1996}, {"figure3b", 2795}, {"figure4b", 2791},
        {"figure2a", 2486},
    };
    std::map<std::string, FigureData> figures;
    for (const auto& [name, want_rows] : golden) {
        figures[name] = run_figure(name);
        c.require(figures[name].rows.size() == want_rows,
                  name + " rows " + fmt(double(figures[name].rows.size())) + " want " +
                      fmt(double(want_rows)));
    }

    // Fig 1b: two curves approach the single-center levels at large mR; the
    // smallest-mR points sit on the merged markers
    {
        const auto& fig = figures["figure1b"];
        c.require(fig.markers.size() == 2, "fig1b marker count");
        for (const auto& [conv, curve] : fig.curves) {
            const auto convention = conv == "cayley" ? DeltaConvention::CayleySelfAdjoint
                                                     : DeltaConvention::SqueezedRectangle;
            const double single = *single_energy(g, m1, convention);
            const auto& far = curve.rbegin()->second;
            c.require(far.size() == 2, "fig1b " + conv + " far count");
            for (double e : far)
                c.require(std::abs(e - single) < 1e-3,
                          "fig1b " + conv + " far level " + fmt(e) + " vs " + fmt(single));
            const auto& near = curve.begin()->second;
            const double merged = *merged_limit_energy(2, g, m1, convention);
            c.require(near.size() == 1 && std::abs(near.front() - merged) < 1e-4,
                      "fig1b " + conv + " merged limit");
            for (const auto& marker : fig.markers)
                if (marker.convention == conv)
                    c.require(std::abs(*marker.e_over_m - merged) < 1e-12,
                              "fig1b " + conv + " marker value");
        }
    }

    // Fig 2b: dipole levels monotone in mR (positive branch decreasing), +- symmetric
    {
        const auto& fig = figures["figure2b"];
        for (const auto& [conv, curve] : fig.curves) {
            double prev = 1.0;
            for (const auto& [axis, levels] : curve) {
                if (levels.empty()) continue;
                c.require(levels.size() == 2, "fig2b " + conv + " count at mR=" + fmt(axis));
                c.require(std::abs(levels.front() + levels.back()) < 1e-9,
                          "fig2b " + conv + " symmetry at mR=" + fmt(axis));
                const double top = levels.back();
                c.require(top <= prev + 1e-12, "fig2b " + conv + " not monotone at mR=" + fmt(axis));
                prev = top;
            }
        }
    }

    // Fig 2a: non-monotone in g with level repulsion near g = 2 (cayley) and
    // g = pi/2 (squeeze): the gap between the levels is smallest there
    {
        const auto& fig = figures["figure2a"];
        for (const auto& [conv, curve] : fig.curves) {
            double min_gap = 10.0, argmin = 0.0, first_gap = 0.0, last_gap = 0.0;
            for (const auto& [axis, levels] : curve) {
                if (levels.size() != 2) continue;
                const double gap = levels.back() - levels.front();
                if (first_gap == 0.0) first_gap = gap;
                last_gap = gap;
                if (gap < min_gap) {
                    min_gap = gap;
                    argmin = axis;
                }
            }
            const double expect = conv == "cayley" ? 2.0 : kPi / 2.0;
            c.require(std::abs(argmin - expect) < 0.3,
                      "fig2a " + conv + " closest approach at g=" + fmt(argmin));
            c.require(min_gap > 0.0, "fig2a " + conv + " levels crossed");
            c.require(min_gap < first_gap && min_gap < last_gap,
                      "fig2a " + conv + " no interior minimum");
        }
    }

    // Fig 3b: levels emerge from the upper continuum one by one as mR grows;
    // smallest-mR level sits at the merged value (single(3g) under squeeze)
    {
        const auto& fig = figures["figure3b"];
        c.require(fig.markers.size() == 2, "fig3b marker count");
        for (const auto& [conv, curve] : fig.curves) {
            const auto convention = conv == "cayley" ? DeltaConvention::CayleySelfAdjoint
                                                     : DeltaConvention::SqueezedRectangle;
            std::size_t prev = 0;
            bool monotone = true;
            for (const auto& [axis, levels] : curve) {
                if (levels.size() < prev) monotone = false;
                prev = std::max(prev, levels.size());
            }
            c.require(monotone, "fig3b " + conv + " level count not monotone in mR");
            c.require(curve.begin()->second.size() == 1, "fig3b " + conv + " start count");
            c.require(curve.rbegin()->second.size() == 3, "fig3b " + conv + " end count");
            const double merged = *merged_limit_energy(3, g, m1, convention);
            c.require(std::abs(curve.begin()->second.front() - merged) < 1e-4,
                      "fig3b " + conv + " merged limit " + fmt(curve.begin()->second.front()) +
                          " vs " + fmt(merged));
            if (convention == DeltaConvention::SqueezedRectangle)
                c.require(std::abs(merged -
                                   *single_energy(3.0 * g, m1,
                                                  DeltaConvention::SqueezedRectangle)) < 1e-14,
                          "fig3b squeeze marker is single(3g)");
        }
    }

    // Fig 4b: one level constant in mR (decoupled), the others +- symmetric
    {
        const auto& fig = figures["figure4b"];
        for (const auto& [conv, curve] : fig.curves) {
            const auto convention = conv == "cayley" ? DeltaConvention::CayleySelfAdjoint
                                                     : DeltaConvention::SqueezedRectangle;
            const double single = *single_energy(g, m1, convention);
            double lo = 1.0, hi = -1.0;
            for (const auto& [axis, levels] : curve) {
                double best = levels.front();
                for (double e : levels)
                    if (std::abs(e - single) < std::abs(best - single)) best = e;
                lo = std::min(lo, best);
                hi = std::max(hi, best);
                if (levels.size() == 3) {
                    c.require(std::abs(levels.front() + levels.back()) < 1e-9,
                              "fig4b " + conv + " pair asymmetric at mR=" + fmt(axis));
                }
            }
            c.require(hi - lo < 1e-8, "fig4b " + conv + " decoupled level drifts " + fmt(hi - lo));
        }
    }

    report(10, "figure sweeps: golden row counts, monotonicity, markers, level structure", c);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
