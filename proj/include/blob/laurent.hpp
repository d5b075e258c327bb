#pragma once

// Integer-coefficient Laurent polynomials in the grading variable v.
// These carry every graded multiplicity in the library; coefficients are
// arbitrary-precision integers and zero coefficients are never stored.

#include "blob/scalars.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace blob {

class Laurent {
  public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }

    static Laurent one() { return monomial(0, 1); }

    // coeff * v^exp
    static Laurent monomial(long exp, BigInt coeff = 1) {
        Laurent p;
        if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<long, BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    void set_coefficient(long exp, BigInt c) {
        if (c == 0)
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }

    long min_exponent() const { return coeffs_.begin()->first; }
    long max_exponent() const { return coeffs_.rbegin()->first; }

    // h(v) -> h(v^{-1})
    Laurent bar() const {
        Laurent out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
        return out;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    Laurent shifted(long k) const {  // multiply by v^k
        Laurent out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[e + k] = c;
        return out;
    }

    Laurent& operator+=(const Laurent& rhs) {
        for (const auto& [e, c] : rhs.coeffs_) {
            BigInt s = coefficient(e) + c;
            set_coefficient(e, s);
        }
        return *this;
    }

    Laurent& operator-=(const Laurent& rhs) {
        for (const auto& [e, c] : rhs.coeffs_) {
            BigInt s = coefficient(e) - c;
            set_coefficient(e, s);
        }
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                BigInt s = out.coefficient(ea + eb) + ca * cb;
                out.set_coefficient(ea + eb, std::move(s));
            }
        return out;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // Human-readable rendering, e.g. "v^2 + 1", "v^-1", "2*v - 1", "0".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            BigInt c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            long e = it->first;
            if (e == 0) {
                os << c.get_str();
            } else {
                if (c != 1) os << c.get_str() << "*";
                os << "v";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<long, BigInt> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace blob
