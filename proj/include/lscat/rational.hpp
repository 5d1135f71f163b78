#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lscat {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace lscat
