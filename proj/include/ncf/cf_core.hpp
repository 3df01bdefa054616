#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncf/params.hpp"

namespace ncf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A finite word of digits a_k >= N together with the parameters that make
// it meaningful, plus a flag telling whether the expansion hit an exact
// rational (iterate 0) before max_digits.
struct DigitSeq {
    Params params;
    std::vector<std::int64_t> digits;
    bool terminated = false;

    DigitSeq(Params p, std::vector<std::int64_t> d, bool term = false);
    std::size_t size() const { return digits.size(); }
};

// Exact convergent p_n/q_n, kept as produced by the recursion
//   p_n = a_n p_{n-1} + N p_{n-2},  q_n = a_n q_{n-1} + N q_{n-2}
// with p_0 = 0, q_0 = 1, p_{-1} = 1, q_{-1} = 0.
struct Convergent {
    BigInt p;
    BigInt q;
    int n = 0;
};

// Fundamental interval of a digit word: exact endpoints
// {p_n/q_n, (p_n+p_{n-1})/(q_n+q_{n-1})} in ascending order and length
// N^n / (q_n (q_n + q_{n-1})).
struct Cylinder {
    DigitSeq digits;
    BigRat lo;
    BigRat hi;
    BigRat length;
};

// T_N(x) = N/x - floor(N/x), T_N(0) = 0.
double gauss_map(const Params& params, double x);

// First digit a_1(x) = floor(N/x), defined for x in (0,1].
std::int64_t digit(const Params& params, double x);

// Digit word of x under iteration of T_N; stops early (terminated = true)
// when an iterate hits exactly zero.
DigitSeq expand(const Params& params, double x, std::size_t max_digits);

// Exact expansion of a rational; always terminates or fills max_digits.
DigitSeq expand_rational(const Params& params, const BigRat& x, std::size_t max_digits);

std::vector<Convergent> convergents(const DigitSeq& digits);

// Exact value of the finite fraction [a_1, ..., a_n]_N.
BigRat evaluate(const DigitSeq& digits);

// [a_1, ..., a_{n-1}, a_n + tail]_N = (p_n + tail p_{n-1}) / (q_n + tail q_{n-1}).
double evaluate(const DigitSeq& digits, double tail);

Cylinder cylinder(const DigitSeq& digits);

// s_n = N q_{n-1} / q_n, the value of the reversed digit word; s_0 = 0.
BigRat s_n(const DigitSeq& digits);

struct ApproximationGap {
    double gap;    // |x - p_n/q_n|
    double bound;  // N^n / q_n^2
};

ApproximationGap approximation_gap(const Params& params, const DigitSeq& digits, double x);

}  // namespace ncf
