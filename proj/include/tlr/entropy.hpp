#pragma once

namespace tlr {

/// Binary entropy; endpoints take 0*log(1/0) = 0.
double h2(double x);

/// q-ary entropy H_q(x) = x log_q(q-1) + x log_q(1/x) + (1-x) log_q(1/(1-x)).
double hq(double x, double q);

/// Inverse of h2 on [0, 1/2], by bisection to |h2(x) - y| <= 1e-12.
double h2_inv(double y);

/// theta(x) = 1 - H2(1 - 2^(x-1)), the rate transfer of random concatenation.
double theta(double x);

/// Inverse of theta on [0, 1] (theta is strictly increasing there).
double theta_inv(double y);

}  // namespace tlr
