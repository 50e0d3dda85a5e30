#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dirac {

/// Strictly increasing radii with composite-Simpson quadrature weights.
///
/// The default layout is logarithmic from r_min up to a join radius and
/// linear beyond it, with the linear step equal to the last log step so the
/// spacing is continuous at the join.
class RadialGrid {
  public:
    static constexpr std::size_t min_points = 1000;

    /// Takes ownership of explicit radii; throws if they are not strictly
    /// increasing, positive, or fewer than min_points.
    explicit RadialGrid(std::vector<double> points);

    /// Log/linear grid. log_step is the spacing in ln r on the inner part.
    static RadialGrid log_linear(double r_min, double r_join, double r_max, double log_step);

    std::span<double const> points() const noexcept { return points_; }
    std::span<double const> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }
    double r_min() const noexcept { return points_.front(); }
    double r_max() const noexcept { return points_.back(); }

    /// Index of the grid point closest to r.
    std::size_t nearest_index(double r) const noexcept;

    /// Integral of sampled values over [r_min, r_max].
    double integrate(std::span<double const> values) const;

    friend bool operator==(RadialGrid const& a, RadialGrid const& b) { return a.points_ == b.points_; }

  private:
    std::vector<double> points_;
    std::vector<double> weights_;
};

/// Derivative of samples on a nonuniform grid using five-point Lagrange
/// stencils (centred in the interior, one-sided near the ends).
std::vector<double> finite_difference_derivative(RadialGrid const& grid, std::span<double const> values);

} // namespace dirac
