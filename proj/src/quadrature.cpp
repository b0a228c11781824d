#include "spindimer/quadrature.hpp"

#include <cmath>
#include <string>

namespace spindimer {
namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int level, int max_levels) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (level >= max_levels)
        throw QuadratureFailure("adaptive_simpson: recursion cap hit on [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    return recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, level + 1, max_levels) +
           recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, level + 1, max_levels);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_levels) {
    if (a == b) return 0.0;
    double fa = f(a);
    double fb = f(b);
    double fm = f(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, b - a);
    return recurse(f, a, b, fa, fm, fb, whole, abs_tol, 0, max_levels);
}

} // namespace spindimer
