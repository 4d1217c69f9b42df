#include "dirac1d/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirac1d {

Mass::Mass(double value) : value_(value) {
    if (!std::isfinite(value) || value <= 0.0)
        throw std::invalid_argument("Mass: m must be finite and > 0");
}

BoundStateProblem::BoundStateProblem(Mass mass, std::vector<DeltaCenter> centers)
    : mass_(mass), centers_(std::move(centers)) {
    for (const auto& c : centers_) {
        if (!std::isfinite(c.position) || !std::isfinite(c.strength))
            throw std::invalid_argument("BoundStateProblem: center fields must be finite");
    }
    std::erase_if(centers_, [](const DeltaCenter& c) { return c.strength == 0.0; });
    if (centers_.empty())
        throw std::invalid_argument("BoundStateProblem: need at least one nonzero center");
    for (std::size_t i = 1; i < centers_.size(); ++i) {
        if (!(centers_[i - 1].position < centers_[i].position))
            throw std::invalid_argument(
                "BoundStateProblem: center positions must be strictly increasing");
    }
}

namespace detail {
void require_in_gap(double energy, Mass m, const char* where) {
    if (!(std::abs(energy) < m.value()))
        throw std::domain_error(std::string(where) + ": |E| must be < m");
}
}  // namespace detail

double rho_of(double energy, Mass m) {
    detail::require_in_gap(energy, m, "rho_of");
    return std::sqrt((m.value() - energy) / (m.value() + energy));
}

double kappa_of(double energy, Mass m) {
    detail::require_in_gap(energy, m, "kappa_of");
    return std::sqrt((m.value() - energy) * (m.value() + energy));
}

double x_variable(double energy, Mass m, double g) {
    detail::require_in_gap(energy, m, "x_variable");
    const double q = 1.0 - g * g / 4.0;
    if (q == 0.0) throw std::domain_error("x_variable: singular at g = +-2");
    return energy / kappa_of(energy, m) * g / q;
}

GapVariables GapVariables::at(double energy, Mass m) {
    return {energy, rho_of(energy, m), kappa_of(energy, m)};
}

RhoPowers rho_power_identities(double energy, Mass m) {
    const double r = rho_of(energy, m);
    const double r2 = r * r;
    const double r3 = r2 * r;
    return {1.0 / r - r, 1.0 / r2 + r2, r3 - 1.0 / r3};
}

void EnergySpectrum::insert(EnergyRoot root, double dedup_window) {
    auto pos = std::lower_bound(
        roots_.begin(), roots_.end(), root.energy,
        [](const EnergyRoot& a, double e) { return a.energy < e; });
    // a neighbor within the window absorbs the new root (keep smaller residual)
    for (auto it : {pos, pos == roots_.begin() ? pos : std::prev(pos)}) {
        if (it != roots_.end() && std::abs(it->energy - root.energy) <= dedup_window) {
            if (std::abs(root.residual) < std::abs(it->residual)) *it = std::move(root);
            return;
        }
    }
    roots_.insert(pos, std::move(root));
}

}  // namespace dirac1d
