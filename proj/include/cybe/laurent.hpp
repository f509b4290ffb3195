// Laurent polynomials in one variable t over the rationals, stored as a
// canonical exponent -> nonzero coefficient map.
#pragma once

#include "cybe/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace cybe {

class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) coeffs_[0] = c; }               // NOLINT: implicit for Eigen literals
    Laurent(const Rational& c) { if (!cybe::is_zero(c)) coeffs_[0] = c; }  // NOLINT

    /// The monomial c * t^e.
    static Laurent term(const Rational& c, long e) {
        Laurent p;
        if (!cybe::is_zero(c)) p.coeffs_[e] = c;
        return p;
    }
    static Laurent t_pow(long e) { return term(1, e); }

    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^k (0 when absent).
    Rational coefficient(long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_monomial() const { return coeffs_.size() == 1; }

    Rational evaluate_at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    /// t -> t^{-1} substitution.
    Laurent reciprocal_variable() const {
        Laurent p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
        return p;
    }

    Laurent& operator+=(const Laurent& q) {
        for (const auto& [e, c] : q.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& q) {
        for (const auto& [e, c] : q.coeffs_) add_term(e, -c);
        return *this;
    }
    Laurent operator+(const Laurent& q) const { Laurent p = *this; p += q; return p; }
    Laurent operator-(const Laurent& q) const { Laurent p = *this; p -= q; return p; }
    Laurent operator-() const {
        Laurent p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
        return p;
    }

    Laurent operator*(const Laurent& q) const {
        Laurent p;
        if (is_monomial() && q.is_monomial()) {  // the dominant case in Phi(t) algebra
            const auto& [e1, c1] = *coeffs_.begin();
            const auto& [e2, c2] = *q.coeffs_.begin();
            p.coeffs_[e1 + e2] = c1 * c2;
            return p;
        }
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : q.coeffs_) p.add_term(e1 + e2, c1 * c2);
        return p;
    }
    Laurent& operator*=(const Laurent& q) { *this = *this * q; return *this; }

    Laurent operator*(const Rational& c) const {
        Laurent p;
        if (cybe::is_zero(c)) return p;
        for (const auto& [e, k] : coeffs_) p.coeffs_[e] = k * c;
        return p;
    }
    Laurent operator/(const Rational& c) const {
        if (cybe::is_zero(c)) throw std::domain_error("laurent division by zero scalar");
        return *this * (Rational(1) / c);
    }

    bool operator==(const Laurent& q) const { return coeffs_ == q.coeffs_; }
    bool operator!=(const Laurent& q) const { return coeffs_ != q.coeffs_; }

    /// "c*t^e" terms joined by "+", ascending e; e=0 bare, e=1 as "c*t"; zero is "0".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) out << "+";
            first = false;
            if (e == 0) out << to_string(c);
            else if (e == 1) out << to_string(c) << "*t";
            else out << to_string(c) << "*t^" << e;
        }
        return out.str();
    }

private:
    void add_term(long e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (!cybe::is_zero(c)) coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (cybe::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::map<long, Rational> coeffs_;
};

inline Laurent operator*(const Rational& c, const Laurent& p) { return p * c; }

inline bool is_zero(const Laurent& p) { return p.is_zero(); }

inline std::ostream& operator<<(std::ostream& out, const Laurent& p) { return out << p.str(); }

/// Inverse of str(): parses "+"-joined monomials "c", "c*t", "c*t^e".
inline Laurent parse_laurent(const std::string& s) {
    if (s == "0") return Laurent();
    Laurent p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos + 1);  // a leading '-' belongs to the coefficient
        if (next == std::string::npos) next = s.size();
        std::string piece = s.substr(pos, next - pos);
        long e = 0;
        std::string coef = piece;
        if (auto star = piece.find("*t"); star != std::string::npos) {
            coef = piece.substr(0, star);
            std::string rest = piece.substr(star + 2);
            if (rest.empty()) e = 1;
            else if (rest[0] == '^') e = std::stol(rest.substr(1));
            else throw std::invalid_argument("bad laurent literal: " + s);
        }
        p += Laurent::term(parse_rational(coef), e);
        pos = next + 1;
        if (next == s.size()) break;
    }
    return p;
}

}  // namespace cybe
