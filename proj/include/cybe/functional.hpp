// Sparse linear functionals on gl_n: finite sums of coordinate functionals
// c * e*_{jk}.
#pragma once

#include "cybe/matrix.hpp"

#include <map>
#include <utility>

namespace cybe {

struct LinearFunctional {
    int n = 0;
    std::map<std::pair<int, int>, Rational> coords;  // (j,k) -> c, zero entries never stored

    void add(int j, int k, const Rational& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = coords.emplace(std::make_pair(j, k), c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) coords.erase(it);
        }
    }

    Rational operator()(const QMat& x) const {
        Rational v = 0;
        for (const auto& [pos, c] : coords) v += c * x(pos.first - 1, pos.second - 1);
        return v;
    }

    LinearFunctional operator*(const Rational& c) const {
        LinearFunctional f;
        f.n = n;
        if (is_zero(c)) return f;
        for (const auto& [pos, v] : coords) f.coords[pos] = v * c;
        return f;
    }
    LinearFunctional operator+(const LinearFunctional& o) const {
        LinearFunctional f = *this;
        for (const auto& [pos, v] : o.coords) f.add(pos.first, pos.second, v);
        return f;
    }
    LinearFunctional operator-() const { return *this * Rational(-1); }

    bool operator==(const LinearFunctional& o) const { return n == o.n && coords == o.coords; }
};

}  // namespace cybe
