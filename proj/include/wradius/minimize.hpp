#pragma once

#include <cstddef>
#include <functional>

namespace wradius {

/// Location and value of the best scalar evaluation seen.
struct ScalarMin {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section search for a minimum of f on [a, b]. Tracks the best of
/// every evaluation (endpoints included), so the result never exceeds the
/// value at any probed point even when f is not unimodal.
ScalarMin golden_section_min(const std::function<double(double)>& f, double a, double b,
                             double xtol, int max_iter = 120);

/// Uniform grid of the given size (endpoints included) followed by a
/// golden-section pass inside the best grid cell and its two neighbors.
ScalarMin grid_then_golden_min(const std::function<double(double)>& f, double a, double b,
                               std::size_t grid_points);

}  // namespace wradius
