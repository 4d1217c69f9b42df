#include "dirac1d/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dirac1d {

namespace {

double median_abs(std::vector<double> mags) {
    std::erase_if(mags, [](double v) { return !std::isfinite(v); });
    if (mags.empty()) return 1.0;
    const auto mid = mags.begin() + static_cast<std::ptrdiff_t>(mags.size() / 2);
    std::nth_element(mags.begin(), mid, mags.end());
    const double med = *mid;
    return med > 0.0 ? med : 1.0;
}

bool opposite_signs(double a, double b) {
    return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

/// Golden-section minimum of |f| on [lo, hi]; returns (location, |f|).
std::pair<double, double> golden_min_abs(const RealFunction& f, double lo, double hi,
                                         double width_tol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = std::abs(f(x1));
    double f2 = std::abs(f(x2));
    while (b - a > width_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = std::abs(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = std::abs(f(x2));
        }
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

struct Accumulator {
    std::vector<RootResult> roots;
    double window;

    bool any_inside(double lo, double hi) const {
        return std::any_of(roots.begin(), roots.end(), [&](const RootResult& r) {
            return r.energy >= lo && r.energy <= hi;
        });
    }

    bool simple_inside(double lo, double hi) const {
        return std::any_of(roots.begin(), roots.end(), [&](const RootResult& r) {
            return r.energy >= lo && r.energy <= hi &&
                   r.multiplicity == EnergyRoot::Multiplicity::simple;
        });
    }

    /// Touching roots are provisional (located only to the golden-section
    /// width); bisected roots found later in the same region supersede them.
    void drop_touching_inside(double lo, double hi) {
        std::erase_if(roots, [&](const RootResult& r) {
            return r.energy >= lo && r.energy <= hi &&
                   r.multiplicity == EnergyRoot::Multiplicity::touching;
        });
    }

    void add(const RootResult& r) {
        for (auto& existing : roots) {
            if (std::abs(existing.energy - r.energy) <= window) {
                if (std::abs(r.residual) < std::abs(existing.residual)) existing = r;
                return;
            }
        }
        roots.push_back(r);
    }

    void sort() {
        std::sort(roots.begin(), roots.end(),
                  [](const RootResult& a, const RootResult& b) { return a.energy < b.energy; });
    }
};

}  // namespace

ScanResult scan_brackets(const RealFunction& f, double lo, double hi, int n,
                         const SolverOptions& opts) {
    if (!(lo < hi)) throw std::invalid_argument("scan_brackets: need lo < hi");
    n = std::max(n, 2);

    ScanResult out;
    out.grid.resize(static_cast<std::size_t>(n));
    out.values.resize(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? hi : lo + i * step;
        out.grid[static_cast<std::size_t>(i)] = x;
        out.values[static_cast<std::size_t>(i)] = f(x);
    }
    out.scale = median_abs(out.values);

    const auto& xs = out.grid;
    const auto& fs = out.values;
    for (int i = 0; i + 1 < n; ++i) {
        const double fa = fs[static_cast<std::size_t>(i)];
        const double fb = fs[static_cast<std::size_t>(i + 1)];
        if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
        if (opposite_signs(fa, fb)) {
            out.brackets.push_back({xs[static_cast<std::size_t>(i)],
                                    xs[static_cast<std::size_t>(i + 1)], fa, fb,
                                    Bracket::Kind::sign_change});
        }
    }
    for (int i = 1; i + 1 < n; ++i) {
        const double fm = fs[static_cast<std::size_t>(i)];
        const double fl = fs[static_cast<std::size_t>(i - 1)];
        const double fr = fs[static_cast<std::size_t>(i + 1)];
        if (!std::isfinite(fm) || !std::isfinite(fl) || !std::isfinite(fr)) continue;
        if (fm == 0.0) {
            // exact node hit; classify by the neighbors
            const auto kind = opposite_signs(fl, fr) ? Bracket::Kind::sign_change
                                                     : Bracket::Kind::touching_candidate;
            out.brackets.push_back({xs[static_cast<std::size_t>(i - 1)],
                                    xs[static_cast<std::size_t>(i + 1)], fl, fr, kind});
            continue;
        }
        const bool local_min = std::abs(fm) < std::abs(fl) && std::abs(fm) <= std::abs(fr);
        const bool no_crossing = !opposite_signs(fl, fm) && !opposite_signs(fm, fr);
        if (local_min && no_crossing && std::abs(fm) < opts.touching_threshold * out.scale) {
            out.brackets.push_back({xs[static_cast<std::size_t>(i - 1)],
                                    xs[static_cast<std::size_t>(i + 1)], fl, fr,
                                    Bracket::Kind::touching_candidate});
        }
    }
    return out;
}

std::optional<RootResult> refine_root(const RealFunction& f, const Bracket& bracket,
                                      const SolverOptions& opts, Mass m, double scale) {
    const double tol_e = opts.tol_energy * m.value();
    const double tol_f = opts.tol_residual * scale;

    if (bracket.kind == Bracket::Kind::touching_candidate) {
        const auto [x, fx] = golden_min_abs(f, bracket.lo, bracket.hi, 1e-9 * m.value());
        if (!(fx < tol_f)) return std::nullopt;
        return RootResult{x, fx, EnergyRoot::Multiplicity::touching};
    }

    double lo = bracket.lo, hi = bracket.hi;
    double f_lo = bracket.f_lo;
    if (f_lo == 0.0) f_lo = f(lo);
    double mid = 0.5 * (lo + hi);
    double f_mid = f(mid);
    // bisect past tol_e while the residual has not cleared tolerance, down to
    // the double-spacing floor: steep residuals near the gap edges need it,
    // and a sign change across a pole never clears and is rejected below.
    const double floor_width =
        8.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(lo), std::abs(hi), 1.0});
    while (hi - lo > tol_e || (std::abs(f_mid) > tol_f && hi - lo > floor_width)) {
        if (f_mid == 0.0) break;
        if (opposite_signs(f_lo, f_mid)) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        mid = 0.5 * (lo + hi);
        f_mid = f(mid);
    }
    if (!(std::abs(f_mid) < tol_f)) return std::nullopt;
    return RootResult{mid, std::abs(f_mid), EnergyRoot::Multiplicity::simple};
}

namespace {

/// Interior |f| minima, deepest first. Dips whose probe bracket contains a
/// bisected root are skipped (a probe there would only rediscover it);
/// provisional touching roots do not block.
std::vector<std::size_t> dip_nodes(const ScanResult& scan, const Accumulator& acc) {
    std::vector<std::size_t> dips;
    for (std::size_t i = 1; i + 1 < scan.values.size(); ++i) {
        const double fl = scan.values[i - 1], fm = scan.values[i], fr = scan.values[i + 1];
        if (!std::isfinite(fl) || !std::isfinite(fm) || !std::isfinite(fr)) continue;
        if (std::abs(fm) <= std::abs(fl) && std::abs(fm) <= std::abs(fr) &&
            !acc.simple_inside(scan.grid[i - 1], scan.grid[i + 1]))
            dips.push_back(i);
    }
    std::sort(dips.begin(), dips.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(scan.values[a]) < std::abs(scan.values[b]);
    });
    return dips;
}

constexpr int kRegionPoints = 65;

/// Halving-style local refinement: rescan a suspicious window at higher
/// resolution, bisect what separates, recurse into the deepest unexplained
/// dip, and fall back to a golden-section probe once the depth budget is
/// spent (an even-multiplicity pair never separates).
void resolve_region(const RealFunction& f, double lo, double hi, int depth,
                    const SolverOptions& opts, Mass m, double scale, Accumulator& acc) {
    const ScanResult sub = scan_brackets(f, lo, hi, kRegionPoints, opts);
    bool superseded = false;
    for (const auto& b : sub.brackets) {
        if (b.kind != Bracket::Kind::sign_change) continue;
        if (auto r = refine_root(f, b, opts, m, scale)) {
            if (!superseded) {
                acc.drop_touching_inside(lo, hi);
                superseded = true;
            }
            acc.add(*r);
        }
    }
    const auto dips = dip_nodes(sub, acc);
    if (dips.empty()) return;
    const std::size_t i = dips.front();
    if (acc.any_inside(sub.grid[i - 1], sub.grid[i + 1])) return;
    if (depth > 0) {
        resolve_region(f, sub.grid[i - 1], sub.grid[i + 1], depth - 1, opts, m, scale, acc);
        return;
    }
    const Bracket probe{sub.grid[i - 1], sub.grid[i + 1], sub.values[i - 1], sub.values[i + 1],
                        Bracket::Kind::touching_candidate};
    if (auto r = refine_root(f, probe, opts, m, scale)) acc.add(*r);
}

}  // namespace

std::vector<RootResult> solve_all(const RealFunction& f, double lo, double hi,
                                  const SolverOptions& opts, Mass m) {
    const int hint = opts.root_count_hint.value_or(0);
    Accumulator acc{{}, 10.0 * opts.tol_energy * m.value()};

    const ScanResult scan = scan_brackets(f, lo, hi, opts.grid_points, opts);
    for (const auto& b : scan.brackets) {
        if (auto r = refine_root(f, b, opts, m, scan.scale)) acc.add(*r);
    }

    if (hint > 0 && acc.roots.size() < static_cast<std::size_t>(hint) &&
        opts.max_refinements > 0) {
        const auto dips = dip_nodes(scan, acc);
        std::size_t probed = 0;
        for (std::size_t i : dips) {
            if (acc.roots.size() >= static_cast<std::size_t>(hint)) break;
            if (probed >= 2 * static_cast<std::size_t>(hint)) break;
            ++probed;
            resolve_region(f, scan.grid[i - 1], scan.grid[i + 1], opts.max_refinements - 1,
                           opts, m, scan.scale, acc);
        }
    }

    if (hint > 0 && acc.roots.size() > static_cast<std::size_t>(hint))
        throw solver_budget_error("solve_all: root count exceeds the algebraic bound");

    acc.sort();
    return acc.roots;
}

}  // namespace dirac1d
