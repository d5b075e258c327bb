#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blob/cyclotomic.hpp"
#include "blob/exact_matrix.hpp"
#include "blob/laurent.hpp"
#include "blob/scalars.hpp"

#include <random>

using namespace blob;

TEST_CASE("cyclotomic polynomials at small conductors") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});            // x - 1
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});          // x^2 + 1
    CHECK(cyclotomic_polynomial(8) == std::vector<BigInt>{1, 0, 0, 0, 1});    // x^4 + 1
    CHECK(cyclotomic_polynomial(5) == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^m - 1") {
    for (unsigned long m : {2ul, 6ul, 8ul, 10ul, 12ul, 15ul}) {
        std::vector<BigInt> prod{1};
        for (unsigned long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<BigInt> next(prod.size() + phi.size() - 1, 0);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = next;
        }
        std::vector<BigInt> expected(m + 1, 0);
        expected[0] = -1;
        expected[m] = 1;
        CHECK(prod == expected);
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("quantum integers at a primitive 8th root") {
    Cyclotomic q = Cyclotomic::generator(8);
    CHECK(quantum_integer(0, q).is_zero());
    CHECK(quantum_integer(2, q) == q + q.pow(-1));
    CHECK(quantum_integer(3, q) == Cyclotomic::from_rational(8, Rational(1)));
    CHECK(quantum_integer(1, q) == Cyclotomic::from_rational(8, Rational(1)));
}

TEST_CASE("quantum integer telescoping identity") {
    for (unsigned long m : {5ul, 8ul, 12ul}) {
        Cyclotomic q = Cyclotomic::generator(m);
        for (long k = 1; k <= 6; ++k) {
            Cyclotomic lhs = quantum_integer(k, q) * (q - q.pow(-1));
            Cyclotomic rhs = q.pow(k) - q.pow(-k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    Cyclotomic q = Cyclotomic::generator(8);
    CHECK(q.pow(8) == Cyclotomic::from_rational(8, Rational(1)));
    CHECK(q.pow(4) == Cyclotomic::from_rational(8, Rational(-1)));
    CHECK((q.inverse() * q) == Cyclotomic::from_rational(8, Rational(1)));

    std::mt19937 rng(20240811);
    auto random_elt = [&](unsigned long m) {
        Cyclotomic z = Cyclotomic::from_rational(m, Rational(0));
        Cyclotomic g = Cyclotomic::generator(m);
        Cyclotomic acc = Cyclotomic::from_rational(m, Rational(1));
        for (unsigned long d = 0; d < euler_phi(m); ++d) {
            long c = static_cast<long>(rng() % 7) - 3;
            z += Cyclotomic::from_rational(m, make_rational(c)) * acc;
            acc *= g;
        }
        return z;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Cyclotomic a = random_elt(8), b = random_elt(8), c = random_elt(8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::from_rational(8, Rational(1)));
    }
}

TEST_CASE("laurent bar involution and arithmetic") {
    Laurent v2 = Laurent::monomial(2);
    CHECK(v2.bar() == Laurent::monomial(-2));
    Laurent p = Laurent::one() + Laurent::monomial(1);
    CHECK(p.bar() == Laurent::one() + Laurent::monomial(-1));
    CHECK(Laurent::zero().bar() == Laurent::zero());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Laurent q;
        for (int i = 0; i < 5; ++i)
            q += Laurent::monomial(static_cast<long>(rng() % 9) - 4,
                                   static_cast<long>(rng() % 11) - 5);
        CHECK(q.bar().bar() == q);
        CHECK((q * p).eval_at_one() == q.eval_at_one() * p.eval_at_one());
    }
    CHECK(p.str() == "v + 1");
    CHECK((Laurent::monomial(-1)).str() == "v^-1");
    CHECK(Laurent::zero().str() == "0");
}

TEST_CASE("rank and kernel of exact matrices") {
    ExactMatrix<Rational> id = ExactMatrix<Rational>::identity(3, Rational(1));
    auto rk = id.rank_and_kernel(Rational(1));
    CHECK(rk.rank == 3);
    CHECK(rk.kernel_basis.empty());

    ExactMatrix<Rational> zero(2, 2);
    auto rk0 = zero.rank_and_kernel(Rational(1));
    CHECK(rk0.rank == 0);
    CHECK(rk0.kernel_basis.size() == 2);

    ExactMatrix<Rational> ones(2, 2);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) ones.set(i, j, Rational(1));
    CHECK(ones.rank() == 1);
}

TEST_CASE("rank-nullity on random rational matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        long r = 1 + rng() % 6, c = 1 + rng() % 6;
        ExactMatrix<Rational> m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                if (rng() % 3 != 0)
                    m.set(i, j, make_rational(static_cast<long>(rng() % 9) - 4,
                                              1 + static_cast<long>(rng() % 4)));
        auto rk = m.rank_and_kernel(Rational(1));
        CHECK(rk.rank + static_cast<long>(rk.kernel_basis.size()) == c);
        // Kernel vectors really are annihilated.
        for (const auto& vec : rk.kernel_basis) {
            for (long i = 0; i < r; ++i) {
                Rational dot(0);
                for (long j = 0; j < c; ++j) dot += m.get(i, j) * vec[j];
                CHECK(is_zero(dot));
            }
        }
    }
}

TEST_CASE("cyclotomic matrix rank") {
    Cyclotomic one = Cyclotomic::from_rational(8, Rational(1));
    Cyclotomic q = Cyclotomic::generator(8);
    ExactMatrix<Cyclotomic> m(2, 2);
    m.set(0, 0, one);
    m.set(0, 1, q);
    m.set(1, 0, q.pow(3));
    m.set(1, 1, q.pow(4));  // second row is q^3 times the first
    CHECK(m.rank() == 1);
    auto rk = m.rank_and_kernel(one);
    CHECK(rk.kernel_basis.size() == 1);
}
