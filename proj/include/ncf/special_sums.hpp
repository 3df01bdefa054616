#pragma once

#include <cstdint>

// Stable evaluation of the digamma-type differences and Hurwitz-zeta tail
// sums that close the infinite digit series appearing throughout the
// library.  Everything here is a difference or a tail, never a bare
// polygamma value, so the usual cancellation between two large logarithms
// never happens.

namespace ncf {

// psi(z + x) - psi(z) = sum_{i>=0} [1/(z+i) - 1/(z+i+x)], z > 0, x in [0,1].
double psi_diff(double z, double x);

// psi'(z + x) - psi'(z)
double trigamma_diff(double z, double x);
// psi''(z + x) - psi''(z)
double tetragamma_diff(double z, double x);
// psi'''(z + x) - psi'''(z)
double pentagamma_diff(double z, double x);

// Hurwitz zeta(k, z) = sum_{i>=0} (z+i)^(-k) for k = 2..5.
double hurwitz_zeta(int k, double z);

// zeta(2, z) - 1/z  (the leading 1/z removed analytically).
double zeta2_minus_inv(double z);

// Tail moments of the transition kernel: with u_i = s + i,
//   h_r(J, s) = sum_{i>=J} 1 / (u_i^(r+1) (u_i + 1)),  r = 0..4.
// h_0 telescopes exactly to 1/(s+J).
double kernel_tail_h(int r, std::int64_t J, double s);

// Kahan-compensated accumulator for long float sums.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace ncf
