#pragma once

// Arithmetic in the cyclotomic field Q(zeta_m) realized as Q[x]/(Phi_m(x)).
// Elements are canonical residues of degree < phi(m), so equality and
// zero-testing are exact coefficient comparisons.

#include "blob/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace blob {

// The m-th cyclotomic polynomial, monic with integer coefficients,
// as a dense coefficient vector indexed by degree.
std::vector<BigInt> cyclotomic_polynomial(unsigned long m);

unsigned long euler_phi(unsigned long m);

class Cyclotomic {
  public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

    Cyclotomic(unsigned long conductor, const Rational& constant);

    // The canonical generator: the residue class of x, a primitive
    // conductor-th root of unity.
    static Cyclotomic generator(unsigned long conductor);

    static Cyclotomic from_rational(unsigned long conductor, const Rational& r) {
        return Cyclotomic(conductor, r);
    }

    unsigned long conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
    Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

    Cyclotomic inverse() const;  // error on zero

    Cyclotomic pow(long k) const;  // any integer exponent

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;

  private:
    unsigned long conductor_;
    std::vector<Rational> coeffs_;  // residue mod Phi_conductor, length phi(conductor)

    friend struct CycloContext;
};

// Balanced quantum integer [k] = q^{-k+1} + q^{-k+3} + ... + q^{k-1}, k >= 0.
Cyclotomic quantum_integer(long k, const Cyclotomic& q);

}  // namespace blob
