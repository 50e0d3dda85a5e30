#include "dirac/radial_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {

std::vector<double> simpson_weights(std::vector<double> const& x) {
    std::size_t const n = x.size();
    std::vector<double> w(n, 0.0);
    std::size_t const intervals = n - 1;
    std::size_t const paired = intervals - intervals % 2;
    for (std::size_t i = 0; i < paired; i += 2) {
        double const h0 = x[i + 1] - x[i];
        double const h1 = x[i + 2] - x[i + 1];
        double const c = (h0 + h1) / 6.0;
        w[i] += c * (2.0 - h1 / h0);
        w[i + 1] += c * (h0 + h1) * (h0 + h1) / (h0 * h1);
        w[i + 2] += c * (2.0 - h0 / h1);
    }
    if (intervals % 2 == 1) {
        // last interval from the quadratic through the final three points
        double const h0 = x[n - 2] - x[n - 3];
        double const h1 = x[n - 1] - x[n - 2];
        w[n - 1] += (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
        w[n - 2] += (h1 * h1 + 3.0 * h1 * h0) / (6.0 * h0);
        w[n - 3] -= h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    }
    return w;
}

} // namespace

RadialGrid::RadialGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < min_points) {
        throw std::invalid_argument("radial grid needs at least " + std::to_string(min_points) + " points, got " +
                                    std::to_string(points_.size()));
    }
    if (!(points_.front() > 0.0)) {
        throw std::invalid_argument("radial grid must start at a positive radius");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i] > points_[i - 1])) {
            throw std::invalid_argument("radial grid must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
    if (!std::isfinite(points_.back())) {
        throw std::invalid_argument("radial grid must end at a finite radius");
    }
    weights_ = simpson_weights(points_);
}

RadialGrid RadialGrid::log_linear(double r_min, double r_join, double r_max, double log_step) {
    if (!(r_min > 0.0 && r_join > r_min && r_max > r_join && log_step > 0.0)) {
        throw std::invalid_argument("log_linear grid needs 0 < r_min < r_join < r_max and log_step > 0");
    }
    auto const n_log = static_cast<std::size_t>(std::ceil(std::log(r_join / r_min) / log_step));
    double const ds = std::log(r_join / r_min) / static_cast<double>(n_log);
    double const step = r_join * std::expm1(ds);
    auto const n_lin = static_cast<std::size_t>(std::ceil((r_max - r_join) / step));
    double const h = (r_max - r_join) / static_cast<double>(n_lin);

    std::vector<double> pts;
    pts.reserve(n_log + n_lin + 1);
    for (std::size_t i = 0; i < n_log; ++i) {
        pts.push_back(r_min * std::exp(ds * static_cast<double>(i)));
    }
    for (std::size_t i = 0; i <= n_lin; ++i) {
        pts.push_back(r_join + h * static_cast<double>(i));
    }
    return RadialGrid(std::move(pts));
}

std::size_t RadialGrid::nearest_index(double r) const noexcept {
    auto const it = std::lower_bound(points_.begin(), points_.end(), r);
    if (it == points_.begin()) {
        return 0;
    }
    if (it == points_.end()) {
        return points_.size() - 1;
    }
    auto const hi = static_cast<std::size_t>(it - points_.begin());
    return (r - points_[hi - 1] <= points_[hi] - r) ? hi - 1 : hi;
}

double RadialGrid::integrate(std::span<double const> values) const {
    if (values.size() != points_.size()) {
        throw std::invalid_argument("sample count does not match the grid");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += weights_[i] * values[i];
    }
    return sum;
}

std::vector<double> finite_difference_derivative(RadialGrid const& grid, std::span<double const> values) {
    auto const x = grid.points();
    std::size_t const n = x.size();
    if (values.size() != n) {
        throw std::invalid_argument("sample count does not match the grid");
    }
    std::vector<double> out(n);
    constexpr std::size_t width = 5;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t const first = std::clamp<std::size_t>(i < 2 ? 0 : i - 2, 0, n - width);
        std::array<double, width> node{};
        for (std::size_t m = 0; m < width; ++m) {
            node[m] = x[first + m];
        }
        std::size_t const self = i - first;
        double d = 0.0;
        for (std::size_t j = 0; j < width; ++j) {
            double weight = 0.0;
            if (j == self) {
                for (std::size_t m = 0; m < width; ++m) {
                    if (m != self) {
                        weight += 1.0 / (node[self] - node[m]);
                    }
                }
            } else {
                double num = 1.0;
                double den = 1.0;
                for (std::size_t m = 0; m < width; ++m) {
                    if (m != j) {
                        den *= node[j] - node[m];
                        if (m != self) {
                            num *= node[self] - node[m];
                        }
                    }
                }
                weight = num / den;
            }
            d += weight * values[first + j];
        }
        out[i] = d;
    }
    return out;
}

} // namespace dirac
