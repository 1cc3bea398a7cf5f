#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "endoscope/bigint.hpp"
#include "endoscope/errors.hpp"

namespace endoscope {

// Dense polynomial over Z with arbitrary-precision coefficients, stored
// lowest degree first with no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Bigint> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Bigint v) { return IntPolynomial(std::vector<Bigint>{std::move(v)}); }
    static IntPolynomial one() { return constant(1); }

    static IntPolynomial monomial(int deg, Bigint coeff = Bigint(1)) {
        std::vector<Bigint> c(static_cast<size_t>(deg) + 1, Bigint(0));
        c.back() = std::move(coeff);
        return IntPolynomial(std::move(c));
    }

    // x^n - 1
    static IntPolynomial x_power_minus_one(int n) {
        auto p = monomial(n);
        p.c_[0] = -1;
        return p;
    }

    // x^n + 1
    static IntPolynomial x_power_plus_one(int n) {
        auto p = monomial(n);
        p.c_[0] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const Bigint& coeff(int k) const {
        static const Bigint kZero(0);
        if (k < 0 || k > degree()) return kZero;
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Bigint>& coefficients() const { return c_; }

    const Bigint& leading() const {
        if (is_zero()) throw internal_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Bigint(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Bigint(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<Bigint> r(a.c_.size() + b.c_.size() - 1, Bigint(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(r));
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    // Division with remainder; the divisor must be monic so the result stays
    // over Z. Non-monic divisors are rejected.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (!divisor.is_monic()) throw std::invalid_argument("division requires a monic divisor");
        std::vector<Bigint> rem = c_;
        int dd = divisor.degree();
        if (degree() < dd) return {IntPolynomial(), *this};
        std::vector<Bigint> quot(static_cast<size_t>(degree() - dd) + 1, Bigint(0));
        for (int k = degree(); k >= dd; --k) {
            Bigint q = rem[static_cast<size_t>(k)];
            if (q == 0) continue;
            quot[static_cast<size_t>(k - dd)] = q;
            for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= q * divisor.c_[static_cast<size_t>(j)];
        }
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    // Exact division; nonzero remainder signals an internal bug in callers
    // that rely on algebraic divisibility.
    IntPolynomial exact_divide(const IntPolynomial& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero()) throw internal_error("exact_divide: nonzero remainder");
        return q;
    }

    IntPolynomial mod(const IntPolynomial& divisor) const { return divmod(divisor).second; }

    Bigint eval(const Bigint& x) const {
        Bigint acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Bigint coefficient_sum() const {
        Bigint s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    // p(-x): flips the sign of odd-degree coefficients.
    IntPolynomial substitute_negated() const {
        IntPolynomial r = *this;
        for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Bigint& a = c_[static_cast<size_t>(k)];
            if (a == 0) continue;
            Bigint mag = a < 0 ? Bigint(-a) : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (k == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Bigint> c_;
};

}  // namespace endoscope
