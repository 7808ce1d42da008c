#pragma once

#include "qcensus/series.hpp"

#include <initializer_list>
#include <vector>

namespace qtest {

// Series literal: S({1, 2, 3}) is 1 + 2q + 3q^2 with order 2.
inline qcensus::Series S(std::initializer_list<long long> coeffs) {
    qcensus::Series s(static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (long long c : coeffs) s.coeff(k++) = c;
    return s;
}

inline std::vector<long long> prefix(const qcensus::Series& s, int upto) {
    std::vector<long long> out;
    for (int k = 0; k <= upto && k <= s.order(); ++k)
        out.push_back(s[k].convert_to<long long>());
    return out;
}

}  // namespace qtest
