#pragma once

#include <algorithm>
#include <cmath>

namespace dirac1d {

/// Dense real 2x2 matrix, the block unit of both engines.
struct Matrix2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Rotation [[cos t, -sin t], [sin t, cos t]].
    static Matrix2 rotation(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return {c, -s, s, c};
    }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }

    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }

    bool all_finite() const {
        return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) &&
               std::isfinite(a22);
    }

    Matrix2 operator*(const Matrix2& rhs) const {
        return {a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
                a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
    }

    Matrix2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    Matrix2 operator-(const Matrix2& rhs) const {
        return {a11 - rhs.a11, a12 - rhs.a12, a21 - rhs.a21, a22 - rhs.a22};
    }
};

}  // namespace dirac1d
