#pragma once

#include <vector>

namespace rfph {

// Interpolating cubic spline on strictly increasing knots.
// Stores the knot second derivatives; evaluation is piecewise cubic.
class CubicSpline {
public:
    // Second derivative zero at both ends.
    static CubicSpline natural(std::vector<double> x, std::vector<double> y);

    // Prescribed first derivatives at both ends.
    static CubicSpline clamped(std::vector<double> x, std::vector<double> y,
                               double slope_left, double slope_right);

    double value(double x) const;
    double derivative(double x) const;
    double second_derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    const std::vector<double>& knots() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    CubicSpline(std::vector<double> x, std::vector<double> y, std::vector<double> m)
        : x_(std::move(x)), y_(std::move(y)), m_(std::move(m)) {}

    // Returns the segment index i with x in [x_i, x_{i+1}]; tolerates endpoint
    // rounding up to 1e-12 of the span, otherwise throws out_of_domain.
    size_t segment(double& x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivatives at knots
};

} // namespace rfph
