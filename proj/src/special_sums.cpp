#include "ncf/special_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace ncf {

namespace {

constexpr double kLiftThreshold = 40.0;

// Bernoulli numbers B_2, B_4, B_6.
constexpr double kB2 = 1.0 / 6.0;
constexpr double kB4 = -1.0 / 30.0;
constexpr double kB6 = 1.0 / 42.0;

}  // namespace

double psi_diff(double z, double x) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0 / z;  // psi(z+1) - psi(z) = 1/z exactly
    double acc = 0.0;
    while (z < kLiftThreshold) {
        acc += 1.0 / z - 1.0 / (z + x);
        z += 1.0;
    }
    const double zx = z + x;
    // psi(z) ~ ln z - 1/(2z) - B2/(2 z^2) - B4/(4 z^4) - B6/(6 z^6)
    double d = std::log1p(x / z);
    d += x / (2.0 * z * zx);
    d += kB2 / 2.0 * x * (z + zx) / (z * z * zx * zx);
    const double z2 = z * z, zx2 = zx * zx;
    d += kB4 / 4.0 * (1.0 / (z2 * z2) - 1.0 / (zx2 * zx2));
    d += kB6 / 6.0 * (1.0 / (z2 * z2 * z2) - 1.0 / (zx2 * zx2 * zx2));
    return acc + d;
}

double trigamma_diff(double z, double x) {
    if (x == 0.0) return 0.0;
    double acc = 0.0;
    while (z < kLiftThreshold) {
        acc += 1.0 / ((z + x) * (z + x)) - 1.0 / (z * z);
        z += 1.0;
    }
    const double zx = z + x;
    // psi'(z) ~ 1/z + 1/(2z^2) + B2/z^3 + B4/z^5 + B6/z^7
    double d = -x / (z * zx);
    d += -x * (z + zx) / (2.0 * z * z * zx * zx);
    const double z3 = z * z * z, zx3 = zx * zx * zx;
    d += kB2 * (1.0 / zx3 - 1.0 / z3);
    d += kB4 * (1.0 / (zx3 * zx * zx) - 1.0 / (z3 * z * z));
    d += kB6 * (1.0 / (zx3 * zx3 * zx) - 1.0 / (z3 * z3 * z));
    return acc + d;
}

double tetragamma_diff(double z, double x) {
    if (x == 0.0) return 0.0;
    double acc = 0.0;
    while (z < kLiftThreshold) {
        // psi''(z) = psi''(z+1) - 2/z^3
        acc += 2.0 / (z * z * z) - 2.0 / ((z + x) * (z + x) * (z + x));
        z += 1.0;
    }
    // psi''(z) ~ -1/z^2 - 1/z^3 - (1/2)/z^4 + (1/6)/z^6
    auto series = [](double w) {
        const double w2 = w * w;
        return -1.0 / w2 - 1.0 / (w2 * w) - 0.5 / (w2 * w2)
               + 1.0 / (6.0 * w2 * w2 * w2);
    };
    return acc + series(z + x) - series(z);
}

double pentagamma_diff(double z, double x) {
    if (x == 0.0) return 0.0;
    double acc = 0.0;
    while (z < kLiftThreshold) {
        // psi'''(z) = psi'''(z+1) + 6/z^4
        const double z4 = z * z * z * z;
        const double w = z + x, w4 = w * w * w * w;
        acc += 6.0 / w4 - 6.0 / z4;
        z += 1.0;
    }
    // psi'''(z) ~ 2/z^3 + 3/z^4 + 2/z^5 - 1/z^7
    auto series = [](double w) {
        const double w3 = w * w * w;
        return 2.0 / w3 + 3.0 / (w3 * w) + 2.0 / (w3 * w * w)
               - 1.0 / (w3 * w3 * w);
    };
    return acc + series(z + x) - series(z);
}

double hurwitz_zeta(int k, double z) {
    if (k < 2 || k > 5) throw std::invalid_argument("hurwitz_zeta: k in 2..5");
    double acc = 0.0;
    while (z < kLiftThreshold) {
        acc += std::pow(z, -k);
        z += 1.0;
    }
    // zeta(k,z) ~ z^(1-k)/(k-1) + z^(-k)/2 + k z^(-k-1)/12
    //             - k(k+1)(k+2) z^(-k-3)/720 + k..(k+4) z^(-k-5)/30240
    const double zk = std::pow(z, -k);
    double v = z * zk / (k - 1) + zk / 2.0 + k * zk / (12.0 * z);
    v -= static_cast<double>(k) * (k + 1) * (k + 2) * zk / (720.0 * z * z * z);
    v += static_cast<double>(k) * (k + 1) * (k + 2) * (k + 3) * (k + 4) * zk
         / (30240.0 * z * z * z * z * z);
    return acc + v;
}

double zeta2_minus_inv(double z) {
    double acc = 0.0;
    while (z < kLiftThreshold) {
        acc += 1.0 / (z * z) - 1.0 / (z * (z + 1.0));
        z += 1.0;
    }
    // zeta(2,z) - 1/z ~ 1/(2z^2) + 1/(6z^3) - 1/(30 z^5) + 1/(42 z^7)
    const double z2 = z * z;
    return acc + 1.0 / (2.0 * z2) + 1.0 / (6.0 * z2 * z) - 1.0 / (30.0 * z2 * z2 * z)
           + 1.0 / (42.0 * z2 * z2 * z2 * z);
}

double kernel_tail_h(int r, std::int64_t J, double s) {
    const double z = s + static_cast<double>(J);
    if (r == 0) return 1.0 / z;
    double prev = zeta2_minus_inv(z);
    for (int k = 2; k <= r; ++k) prev = hurwitz_zeta(k + 1, z) - prev;
    return prev;
}

}  // namespace ncf
