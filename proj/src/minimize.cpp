#include "wradius/minimize.hpp"

#include <algorithm>
#include <cmath>

namespace wradius {

ScalarMin golden_section_min(const std::function<double(double)>& f, double a, double b,
                             double xtol, int max_iter) {
    if (b < a) {
        std::swap(a, b);
    }
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

    ScalarMin best{a, f(a)};
    const double fb = f(b);
    if (fb < best.value) {
        best = {b, fb};
    }

    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        if (f1 < best.value) {
            best = {x1, f1};
        }
        if (f2 < best.value) {
            best = {x2, f2};
        }
    }
    return best;
}

ScalarMin grid_then_golden_min(const std::function<double(double)>& f, double a, double b,
                               std::size_t grid_points) {
    if (grid_points < 2 || b <= a) {
        return {a, f(a)};
    }
    const double h = (b - a) / static_cast<double>(grid_points - 1);
    ScalarMin best{a, f(a)};
    for (std::size_t k = 1; k < grid_points; ++k) {
        const double x = (k + 1 == grid_points) ? b : a + h * static_cast<double>(k);
        const double v = f(x);
        if (v < best.value) {
            best = {x, v};
        }
    }
    const double lo = std::max(a, best.x - h);
    const double hi = std::min(b, best.x + h);
    const ScalarMin refined = golden_section_min(f, lo, hi, h * 1e-8);
    return refined.value < best.value ? refined : best;
}

}  // namespace wradius
