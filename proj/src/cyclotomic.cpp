#include "blob/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace blob {

namespace {

// Dense polynomials over Q, coefficient index = degree, no trailing zeros.
using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    q_trim(out);
    return out;
}

QPoly q_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

// Division with remainder; divisor need not be monic.
void q_divmod(const QPoly& num, const QPoly& den, QPoly& quot, QPoly& rem) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    rem = num;
    q_trim(rem);
    quot.clear();
    if (rem.size() < den.size()) return;
    quot.assign(rem.size() - den.size() + 1, Rational(0));
    while (rem.size() >= den.size() && !rem.empty()) {
        size_t shift = rem.size() - den.size();
        Rational c = rem.back() / den.back();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
        q_trim(rem);
        if (rem.size() < den.size()) break;
    }
}

// Per-conductor context: Phi_m over Q plus a reduction table for the
// powers x^phi .. x^{2 phi - 2} that show up in residue products.
struct Context {
    unsigned long m = 1;
    unsigned long phi = 1;
    QPoly modulus;                        // Phi_m, degree phi
    std::vector<QPoly> high_power_table;  // x^{phi+k} mod Phi_m
};

const Context& context_for(unsigned long m) {
    static std::map<unsigned long, Context> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    Context ctx;
    ctx.m = m;
    auto phi_int = cyclotomic_polynomial(m);
    ctx.phi = phi_int.size() - 1;
    ctx.modulus.resize(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) ctx.modulus[i] = Rational(phi_int[i]);

    // x^phi = -(lower terms of Phi), then multiply up by x and re-reduce.
    const unsigned long phi = ctx.phi;
    QPoly xphi(phi, Rational(0));
    for (unsigned long i = 0; i < phi; ++i) xphi[i] = -ctx.modulus[i];
    ctx.high_power_table.push_back(xphi);
    for (unsigned long k = 1; k + phi <= 2 * phi - 2; ++k) {
        const QPoly& prev = ctx.high_power_table.back();
        QPoly next(phi, Rational(0));
        // next = x * prev mod Phi
        for (unsigned long i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
        if (!is_zero(prev[phi - 1])) {
            const QPoly& top = ctx.high_power_table[0];
            for (unsigned long i = 0; i < phi; ++i) next[i] += prev[phi - 1] * top[i];
        }
        ctx.high_power_table.push_back(next);
    }
    return cache.emplace(m, std::move(ctx)).first->second;
}

void reduce_mod(const Context& ctx, QPoly& p) {
    if (p.size() <= ctx.phi) {
        p.resize(ctx.phi, Rational(0));
        return;
    }
    QPoly out(ctx.phi, Rational(0));
    for (size_t d = 0; d < p.size(); ++d) {
        if (is_zero(p[d])) continue;
        if (d < ctx.phi) {
            out[d] += p[d];
        } else {
            const QPoly& rep = ctx.high_power_table.at(d - ctx.phi);
            for (unsigned long i = 0; i < ctx.phi; ++i) out[i] += p[d] * rep[i];
        }
    }
    p = std::move(out);
}

}  // namespace

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m, n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::domain_error("cyclotomic_polynomial: m must be positive");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact division over Q.
    QPoly num(m + 1, Rational(0));
    num[0] = Rational(-1);
    num[m] = Rational(1);
    QPoly den{Rational(1)};
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto phid = cyclotomic_polynomial(d);
        QPoly q(phid.size());
        for (size_t i = 0; i < phid.size(); ++i) q[i] = Rational(phid[i]);
        den = q_mul(den, q);
    }
    QPoly quot, rem;
    q_divmod(num, den, quot, rem);
    if (!rem.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    std::vector<BigInt> out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1)
            throw std::logic_error("cyclotomic_polynomial: non-integer coefficient");
        out[i] = quot[i].get_num();
    }
    return out;
}

Cyclotomic::Cyclotomic(unsigned long conductor, const Rational& constant)
    : conductor_(conductor) {
    const Context& ctx = context_for(conductor);
    coeffs_.assign(ctx.phi, Rational(0));
    coeffs_[0] = constant;
}

Cyclotomic Cyclotomic::generator(unsigned long conductor) {
    const Context& ctx = context_for(conductor);
    Cyclotomic z(conductor, Rational(0));
    if (ctx.phi == 1) {
        // x mod Phi_1 = 1, x mod Phi_2 = -1
        z.coeffs_[0] = -ctx.modulus[0];
    } else {
        z.coeffs_[1] = Rational(1);
    }
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!blob::is_zero(c)) return false;
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

static void check_same_field(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic conductor mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    check_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    check_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    const Context& ctx = context_for(a.conductor_);
    QPoly prod(2 * ctx.phi - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (is_zero(b.coeffs_[j])) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    reduce_mod(ctx, prod);
    Cyclotomic out(a.conductor_, Rational(0));
    out.coeffs_ = std::move(prod);
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    const Context& ctx = context_for(conductor_);
    // Extended Euclid over Q[x]: s * this + t * Phi = gcd = const.
    QPoly r0 = ctx.modulus, r1 = coeffs_;
    q_trim(r1);
    QPoly s0{}, s1{Rational(1)};  // coefficients of `this`
    while (true) {
        QPoly quot, rem;
        q_divmod(r0, r1, quot, rem);
        if (rem.empty()) break;
        QPoly s2 = q_sub(s0, q_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant (Phi_m is irreducible over Q).
    if (r1.size() != 1)
        throw std::logic_error("cyclotomic inverse: unexpected nonconstant gcd");
    Rational inv_const = Rational(1) / r1[0];
    QPoly result = s1;
    for (auto& c : result) c *= inv_const;
    reduce_mod(ctx, result);
    Cyclotomic out(conductor_, Rational(0));
    out.coeffs_ = std::move(result);
    return out;
}

Cyclotomic Cyclotomic::pow(long k) const {
    Cyclotomic base = k >= 0 ? *this : inverse();
    unsigned long e = k >= 0 ? k : -k;
    Cyclotomic acc(conductor_, Rational(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        if (blob::is_zero(coeffs_[d])) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(coeffs_[d]);
        if (d >= 1) os << "*z" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic quantum_integer(long k, const Cyclotomic& q) {
    if (k < 0) throw std::domain_error("quantum_integer: k must be nonnegative");
    Cyclotomic sum(q.conductor(), Rational(0));
    for (long e = -k + 1; e <= k - 1; e += 2) sum += q.pow(e);
    return sum;
}

}  // namespace blob
