#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bdfkit/cycnum.hpp"
#include "gen.hpp"

using namespace bdf;

TEST_CASE("totient and mobius values")
{
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(11) == 10);
    CHECK(totient(24) == 8);
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(totient(0), InvalidInput);
}

TEST_CASE("totient is multiplicative and sums over divisors")
{
    for (long n = 1; n <= 200; ++n)
    {
        long s = 0, mu = 0;
        for (long d : divisors(n))
        {
            s += totient(d);
            mu += mobius(d);
        }
        CHECK(s == n);
        CHECK(mu == (n == 1 ? 1 : 0));
    }
    for (int t = 0; t < 200; ++t)
    {
        long a = gen::integer(1, 60), b = gen::integer(1, 60);
        if (gcd(a, b) == 1)
            CHECK(totient(a * b) == totient(a) * totient(b));
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == IntPolynomial::from_longs({-1, 1}));
    CHECK(cyclotomic_poly(9) == IntPolynomial::from_longs({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_poly(8) == IntPolynomial::from_longs({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(5) == IntPolynomial::from_longs({1, 1, 1, 1, 1}));
}

TEST_CASE("product of cyclotomic polynomials over divisors is X^n - 1")
{
    for (long n = 1; n <= 60; ++n)
    {
        IntPolynomial p = IntPolynomial::from_longs({1});
        for (long d : divisors(n))
            p = p * cyclotomic_poly(d);
        CHECK(p == IntPolynomial::monomial(n) - IntPolynomial::from_longs({1}));
        CHECK(cyclotomic_poly(n).degree() == totient(n));
    }
}

TEST_CASE("polynomial division")
{
    for (int t = 0; t < 100; ++t)
    {
        auto ca = gen::integers(static_cast<size_t>(gen::integer(1, 9)), -5, 5);
        std::vector<Integer> a(ca.begin(), ca.end());
        IntPolynomial pa(a);
        IntPolynomial q = cyclotomic_poly(gen::integer(1, 20));
        auto [quot, rem] = pa.divmod(q);
        CHECK(quot * q + rem == pa);
        CHECK(rem.degree() < q.degree());
        CHECK((pa * q).exact_div(q) == pa);
    }
    CHECK_THROWS_AS(IntPolynomial::from_longs({1, 0, 1}).exact_div(IntPolynomial::from_longs({1, 1})), DomainError);
}

TEST_CASE("cyclotomic field arithmetic")
{
    auto f4 = CyclotomicField::make(4);
    auto z4 = CyclotomicNumber::zeta_power(f4, 1);
    CHECK(z4 * z4 == CyclotomicNumber::from_rational(f4, -1));

    auto f5 = CyclotomicField::make(5);
    auto z5 = CyclotomicNumber::zeta_power(f5, 1);
    CHECK(z5.conj() == CyclotomicNumber::zeta_power(f5, 4));
    auto s = CyclotomicNumber::zeta_power(f5, 1) + CyclotomicNumber::zeta_power(f5, 2) +
             CyclotomicNumber::zeta_power(f5, 3) + CyclotomicNumber::zeta_power(f5, 4);
    CHECK(s == CyclotomicNumber::from_rational(f5, -1));

    auto f6 = CyclotomicField::make(6);
    CHECK_THROWS_AS(cyc_arith(z5, CyclotomicNumber::zeta_power(f6, 1), CycOp::add), InvalidInput);
}

TEST_CASE("zeta powers multiply by adding exponents")
{
    for (long m : {3L, 5L, 7L, 8L, 9L, 12L, 15L, 16L, 20L, 24L})
    {
        auto f = CyclotomicField::make(m);
        for (int t = 0; t < 20; ++t)
        {
            long i = gen::integer(-50, 50), j = gen::integer(-50, 50);
            CHECK(CyclotomicNumber::zeta_power(f, i) * CyclotomicNumber::zeta_power(f, j) ==
                  CyclotomicNumber::zeta_power(f, i + j));
            CHECK(CyclotomicNumber::zeta_power(f, i).conj() == CyclotomicNumber::zeta_power(f, -i));
        }
    }
}

TEST_CASE("field axioms on random elements")
{
    for (long m : {5L, 7L, 12L, 16L})
    {
        auto f = CyclotomicField::make(m);
        auto rnd = [&] {
            std::vector<Rational> c;
            for (long i = 0; i < f->degree(); ++i)
            {
                Rational q(gen::integer(-9, 9), gen::integer(1, 5));
                q.canonicalize();
                c.push_back(q);
            }
            return CyclotomicNumber(f, c);
        };
        for (int t = 0; t < 20; ++t)
        {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a - a).is_zero());
            CHECK(cyc_arith(a, b, CycOp::mul) == a * b);
            CHECK(cyc_arith(a, b, CycOp::sub) == a - b);
            CHECK(cyc_arith(a, b, CycOp::conj) == a.conj());
        }
    }
}

TEST_CASE("embedding of roots of unity")
{
    auto f8 = CyclotomicField::make(8);
    ComplexInterval z = embed(CyclotomicNumber::zeta_power(f8, 1), 64);
    double h = std::sqrt(2.0) / 2;
    CHECK(z.re.width() <= std::ldexp(1.0, -30));
    CHECK(std::abs(z.re.midpoint() - h) < 1e-15);
    CHECK(std::abs(z.im.midpoint() - h) < 1e-15);

    ComplexInterval zero = embed(CyclotomicNumber(f8), 64);
    CHECK(zero.re.is_point_zero());
    CHECK(zero.im.is_point_zero());

    auto f5 = CyclotomicField::make(5);
    ComplexInterval g = embed(CyclotomicNumber::zeta_power(f5, 1) + CyclotomicNumber::zeta_power(f5, 4), 200);
    CHECK(std::abs(g.re.midpoint() - 0.6180339887498949) < 1e-15);
    CHECK(g.re.width() < 1e-40);
    CHECK(g.im.contains_zero());
}

TEST_CASE("embedding agrees with floating point")
{
    for (int t = 0; t < 50; ++t)
    {
        long m = gen::integer(3, 30);
        long j = gen::integer(0, m - 1);
        auto f = CyclotomicField::make(m);
        ComplexInterval z = embed(CyclotomicNumber::zeta_power(f, j), 128);
        double a = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        CHECK(std::abs(z.re.midpoint() - std::cos(a)) < 1e-12);
        CHECK(std::abs(z.im.midpoint() - std::sin(a)) < 1e-12);
    }
}

TEST_CASE("order counts")
{
    CHECK(order_count_paper(4, 2) == 12);
    CHECK(order_count_paper(3, 1) == 2);
    CHECK(order_count_paper(6, 2) == 20);
    CHECK(order_count_oracle(4, 2) == 12);
    CHECK(order_count_oracle(6, 2) == 24);
    CHECK(order_count_bruteforce(6, 2) == 24);
    CHECK(order_count_bruteforce(8, 2) == 48);
    for (long m = 2; m <= 12; ++m)
        for (long r = 1; m * r <= 24 && r <= 4; ++r)
            CHECK(order_count_oracle(m, r) == order_count_bruteforce(m, r));
}
