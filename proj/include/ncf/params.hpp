#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncf {

// Thrown when an enumeration would exceed its configured node budget and
// adaptive pruning has been disabled.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// The integer N >= 1 that fixes the whole dynamical system: the map
// T_N(x) = N/x - floor(N/x), the digit alphabet {N, N+1, ...} and the
// invariant measure with density 1/((x+N) log((N+1)/N)).
struct Params {
    std::int64_t N;

    explicit Params(std::int64_t n) : N(n) {
        if (n < 1) throw std::domain_error("Params: N must be >= 1");
    }

    double log_norm() const;  // log((N+1)/N)
};

inline void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

}  // namespace ncf
