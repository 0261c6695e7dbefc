#pragma once
// Guarded floating-point comparisons.
//
// Comparisons that involve transcendental values (sqrt, log) are evaluated in
// double precision with a fixed relative safety margin. A comparison whose
// operands are closer than the margin is reported as indeterminate instead of
// being decided by rounding noise; every certified inequality in this library
// must clear the margin.

#include <algorithm>
#include <cmath>
#include <string>

namespace lws {

// Relative safety margin for all float-mediated certifications.
inline constexpr double kGuardRel = 1e-9;

enum class Cmp { Less, Greater, Indeterminate };

inline Cmp guarded_cmp(double lhs, double rhs, double rel = kGuardRel) {
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    if (std::fabs(lhs - rhs) <= rel * scale) return Cmp::Indeterminate;
    return lhs < rhs ? Cmp::Less : Cmp::Greater;
}

// One named inequality check "lhs > rhs", certified only when the margin is
// cleared in the right direction.
struct GuardedCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Cmp verdict = Cmp::Indeterminate;

    static GuardedCheck greater(std::string name, double lhs, double rhs,
                                double rel = kGuardRel) {
        GuardedCheck c{std::move(name), lhs, rhs, guarded_cmp(lhs, rhs, rel)};
        return c;
    }
    bool holds() const { return verdict == Cmp::Greater; }
    bool indeterminate() const { return verdict == Cmp::Indeterminate; }
    const char* verdict_str() const {
        switch (verdict) {
            case Cmp::Greater: return "holds";
            case Cmp::Less: return "fails";
            default: return "indeterminate";
        }
    }
};

} // namespace lws
