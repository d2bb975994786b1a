#include "tlr/entropy.hpp"

#include <cmath>

#include "tlr/errors.hpp"

namespace tlr {

double h2(double x) {
    if (x < 0.0 || x > 1.0) throw ValidationError("h2: argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double hq(double x, double q) {
    if (x < 0.0 || x > 1.0) throw ValidationError("hq: argument outside [0, 1]");
    if (q < 2.0) throw ValidationError("hq: q must be >= 2");
    const double logq = std::log2(q);
    double acc = x * std::log2(q - 1.0) / logq;
    if (x > 0.0) acc += -x * std::log2(x) / logq;
    if (x < 1.0) acc += -(1.0 - x) * std::log2(1.0 - x) / logq;
    return acc;
}

double h2_inv(double y) {
    if (y < 0.0 || y > 1.0) throw ValidationError("h2_inv: argument outside [0, 1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    // Bisect to the bitter end: near y = 1 the function is flat and an early
    // f-tolerance return would cost several digits of x.
    for (int iter = 0; iter < 200 && lo < hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double theta(double x) {
    if (x < 0.0 || x > 1.0) throw ValidationError("theta: argument outside [0, 1]");
    return 1.0 - h2(1.0 - std::exp2(x - 1.0));
}

double theta_inv(double y) {
    if (y < 0.0 || y > 1.0) throw ValidationError("theta_inv: argument outside [0, 1]");
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200 && lo < hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (theta(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace tlr
