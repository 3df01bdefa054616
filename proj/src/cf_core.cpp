#include "ncf/cf_core.hpp"

#include <cmath>
#include <stdexcept>

namespace ncf {

double Params::log_norm() const {
    return std::log1p(1.0 / static_cast<double>(N));
}

DigitSeq::DigitSeq(Params p, std::vector<std::int64_t> d, bool term)
    : params(p), digits(std::move(d)), terminated(term) {
    for (auto a : digits)
        if (a < params.N) throw std::domain_error("DigitSeq: digit below N");
}

double gauss_map(const Params& params, double x) {
    if (!std::isfinite(x)) throw std::domain_error("gauss_map: non-finite x");
    check_unit_interval(x, "gauss_map: x");
    if (x == 0.0) return 0.0;
    const double q = static_cast<double>(params.N) / x;
    return q - std::floor(q);
}

std::int64_t digit(const Params& params, double x) {
    if (!std::isfinite(x) || x <= 0.0 || x > 1.0)
        throw std::domain_error("digit: x must lie in (0,1]");
    const double q = static_cast<double>(params.N) / x;
    return static_cast<std::int64_t>(std::floor(q));
}

DigitSeq expand(const Params& params, double x, std::size_t max_digits) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("expand: x must lie in (0,1)");
    std::vector<std::int64_t> ds;
    ds.reserve(max_digits);
    bool term = false;
    double t = x;
    for (std::size_t k = 0; k < max_digits; ++k) {
        const std::int64_t a = digit(params, t);
        ds.push_back(a);
        const double q = static_cast<double>(params.N) / t;
        t = q - static_cast<double>(a);
        if (t <= 0.0) {
            term = true;
            break;
        }
    }
    return DigitSeq(params, std::move(ds), term);
}

DigitSeq expand_rational(const Params& params, const BigRat& x, std::size_t max_digits) {
    if (!(x > 0 && x < 1)) throw std::domain_error("expand_rational: x must lie in (0,1)");
    std::vector<std::int64_t> ds;
    bool term = false;
    BigRat t = x;
    const BigInt N = params.N;
    for (std::size_t k = 0; k < max_digits; ++k) {
        // a = floor(N/t), exact
        const BigInt num = N * boost::multiprecision::denominator(t);
        const BigInt den = boost::multiprecision::numerator(t);
        BigInt a = num / den;  // both positive: truncation = floor
        ds.push_back(static_cast<std::int64_t>(a));
        t = BigRat(num, den) - BigRat(a);
        if (t == 0) {
            term = true;
            break;
        }
    }
    return DigitSeq(params, std::move(ds), term);
}

std::vector<Convergent> convergents(const DigitSeq& digits) {
    if (digits.digits.empty()) throw std::domain_error("convergents: empty digit word");
    const BigInt N = digits.params.N;
    std::vector<Convergent> out;
    out.reserve(digits.size());
    BigInt pm1 = 1, pm0 = 0;  // p_{-1}, p_0
    BigInt qm1 = 0, qm0 = 1;  // q_{-1}, q_0
    int n = 0;
    for (auto a : digits.digits) {
        ++n;
        BigInt p = a * pm0 + N * pm1;
        BigInt q = a * qm0 + N * qm1;
        out.push_back({p, q, n});
        pm1 = pm0; pm0 = p;
        qm1 = qm0; qm0 = q;
    }
    return out;
}

BigRat evaluate(const DigitSeq& digits) {
    const auto cs = convergents(digits);
    return BigRat(cs.back().p, cs.back().q);
}

double evaluate(const DigitSeq& digits, double tail) {
    if (!(tail >= 0.0 && tail < 1.0)) throw std::domain_error("evaluate: tail must lie in [0,1)");
    const auto cs = convergents(digits);
    const std::size_t n = cs.size();
    const double pn = static_cast<double>(cs[n - 1].p);
    const double qn = static_cast<double>(cs[n - 1].q);
    const double pm = n >= 2 ? static_cast<double>(cs[n - 2].p) : 1.0;
    const double qm = n >= 2 ? static_cast<double>(cs[n - 2].q) : 0.0;
    return (pn + tail * pm) / (qn + tail * qm);
}

Cylinder cylinder(const DigitSeq& digits) {
    const auto cs = convergents(digits);
    const std::size_t n = cs.size();
    const BigInt& pn = cs[n - 1].p;
    const BigInt& qn = cs[n - 1].q;
    const BigInt pm = n >= 2 ? cs[n - 2].p : BigInt(1);
    const BigInt qm = n >= 2 ? cs[n - 2].q : BigInt(0);
    BigRat a(pn, qn);
    BigRat b(pn + pm, qn + qm);
    if (a > b) std::swap(a, b);
    BigInt Npow = boost::multiprecision::pow(BigInt(digits.params.N), static_cast<unsigned>(n));
    BigRat len(Npow, qn * (qn + qm));
    return Cylinder{digits, a, b, len};
}

BigRat s_n(const DigitSeq& digits) {
    if (digits.digits.empty()) return BigRat(0);
    const auto cs = convergents(digits);
    const std::size_t n = cs.size();
    const BigInt qm = n >= 2 ? cs[n - 2].q : BigInt(1);  // q_0 = 1
    return BigRat(BigInt(digits.params.N) * qm, cs[n - 1].q);
}

ApproximationGap approximation_gap(const Params& params, const DigitSeq& digits, double x) {
    const auto cs = convergents(digits);
    const std::size_t n = cs.size();
    // x is a double, hence an exact dyadic rational: the gap is exact.
    BigRat gap = BigRat(x) - BigRat(cs[n - 1].p, cs[n - 1].q);
    if (gap < 0) gap = -gap;
    BigInt Npow = boost::multiprecision::pow(BigInt(params.N), static_cast<unsigned>(n));
    BigRat bound(Npow, cs[n - 1].q * cs[n - 1].q);
    return {gap.convert_to<double>(), bound.convert_to<double>()};
}

}  // namespace ncf
