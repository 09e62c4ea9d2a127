#include <doctest.h>

#include "bdfkit/intlattice.hpp"
#include "gen.hpp"

using namespace bdf;

namespace
{
    bool divisibility_chain(const std::vector<Integer> &d)
    {
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0 && d[i + 1] % d[i] != 0)
                return false;
            else if (d[i] == 0 && d[i + 1] != 0)
                return false;
        return true;
    }

    bool unimodular(const IntMatrix &u) { return abs(det(u)) == 1; }
}

TEST_CASE("smith normal form oracles")
{
    CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 4}}).D == IntMatrix{{2, 0}, {0, 4}});
    IntMatrix c = companion(cyclotomic_poly(5)) - IntMatrix::identity(4);
    CHECK(smith_normal_form(c).diagonal() == std::vector<Integer>{1, 1, 1, 5});
    CHECK(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}).diagonal() == std::vector<Integer>{2, 12});
}

TEST_CASE("smith normal form: U A V = D with unimodular U, V")
{
    for (int t = 0; t < 150; ++t)
    {
        long r = gen::integer(1, 6), c = gen::integer(1, 6);
        IntMatrix a = gen::matrix(r, c, -9, 9);
        SNFDecomposition s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(unimodular(s.U));
        CHECK(unimodular(s.V));
        auto d = s.diagonal();
        CHECK(divisibility_chain(d));
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                if (i != j)
                    CHECK(s.D(i, j) == 0);
        for (const auto &x : d)
            CHECK(x >= 0);
    }
}

TEST_CASE("smith form is invariant under unimodular change of basis")
{
    for (int t = 0; t < 60; ++t)
    {
        long n = gen::integer(2, 5);
        IntMatrix a = gen::matrix(n, n, -6, 6);
        IntMatrix b = gen::unimodular(n) * a * gen::unimodular(n);
        CHECK(smith_normal_form(a).diagonal() == smith_normal_form(b).diagonal());
    }
}

TEST_CASE("companion matrices")
{
    CHECK(companion(IntPolynomial::from_longs({-1, 1})) == IntMatrix{{1}});
    CHECK(companion(IntPolynomial::from_longs({1, 0, 1})) == IntMatrix{{0, -1}, {1, 0}});
    CHECK(companion(cyclotomic_poly(5)) ==
          IntMatrix{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
    CHECK_THROWS_AS(companion(IntPolynomial::from_longs({1, 2})), InvalidInput);
}

TEST_CASE("characteristic polynomials")
{
    CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial::from_longs({1, -2, 1}));
    CHECK(char_poly(companion(cyclotomic_poly(8))) == cyclotomic_poly(8));
    CHECK(char_poly(Integer(-1) * IntMatrix::identity(4)) == IntPolynomial::from_longs({1, 4, 6, 4, 1}));
    for (long k = 1; k <= 40; ++k)
        CHECK(char_poly(companion(cyclotomic_poly(k))) == cyclotomic_poly(k));
}

TEST_CASE("characteristic polynomial is a similarity invariant")
{
    for (int t = 0; t < 60; ++t)
    {
        long n = gen::integer(1, 5);
        IntMatrix a = gen::matrix(n, n, -5, 5);
        IntMatrix u = gen::unimodular(n);
        SNFDecomposition s = smith_normal_form(u);
        IntMatrix uinv = s.V * s.U; // D = identity up to sign
        if (!(s.D == IntMatrix::identity(n)))
            continue;
        CHECK(uinv * u == IntMatrix::identity(n));
        IntPolynomial p = char_poly(a);
        CHECK(char_poly(u * a * uinv) == p);
        CHECK(p.coeff(0) == (n % 2 == 0 ? det(a) : -det(a)));
    }
}

TEST_CASE("cokernels")
{
    CHECK(cokernel(Integer(2) * IntMatrix::identity(2)).invariant_factors() == std::vector<long>{2, 2});
    CHECK(cokernel(companion(cyclotomic_poly(5)) - IntMatrix::identity(4)).invariant_factors() ==
          std::vector<long>{5});
    CHECK(cokernel(companion(cyclotomic_poly(6)) - IntMatrix::identity(2)).is_trivial());
    CHECK_THROWS_AS(cokernel(IntMatrix{{1, 2}, {2, 4}}), DomainError);
    for (int t = 0; t < 60; ++t)
    {
        long n = gen::integer(1, 5);
        IntMatrix a = gen::matrix(n, n, -6, 6);
        Integer d = det(a);
        if (d == 0)
            continue;
        CHECK(cokernel(a).order() == abs(d));
    }
}

TEST_CASE("determinants")
{
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{1, 0}, {0, -1}}) == -1);
    for (int t = 0; t < 60; ++t)
    {
        long n = gen::integer(1, 5);
        IntMatrix a = gen::matrix(n, n, -6, 6), b = gen::matrix(n, n, -6, 6);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transpose()) == det(a));
    }
    for (int t = 0; t < 40; ++t)
    {
        long n = 2 * gen::integer(1, 3);
        IntMatrix s = gen::skew(n, -4, 4);
        Integer d = det(s);
        CHECK(d >= 0);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
        CHECK(root * root == d);
    }
}

TEST_CASE("rank and nullspace")
{
    for (int t = 0; t < 60; ++t)
    {
        long r = gen::integer(1, 5), c = gen::integer(1, 6);
        IntMatrix a = gen::matrix(r, c, -3, 3);
        auto ns = nullspace(a);
        CHECK(static_cast<long>(ns.size()) == c - rank(a));
        for (const auto &v : ns)
            for (const auto &x : a.apply(v))
                CHECK(x == 0);
    }
}

TEST_CASE("finite abelian groups")
{
    auto g = FiniteAbelianGroup::from_cyclic_orders({2, 3, 4});
    CHECK(g.invariant_factors() == std::vector<long>{2, 12});
    CHECK(g.to_string() == "Z/2 x Z/4 x Z/3");
    CHECK(FiniteAbelianGroup::parse("(Z/2)^2 x Z/3") == FiniteAbelianGroup::from_cyclic_orders({2, 6}));
    CHECK(FiniteAbelianGroup::parse("0").is_trivial());
    CHECK(FiniteAbelianGroup::parse("{0}").is_trivial());
    CHECK(FiniteAbelianGroup::elementary(2, 2).to_string() == "(Z/2)^2");
    CHECK(g.p_rank(2) == 2);
    CHECK(g.p_rank(3) == 1);
    CHECK(g.p_partition(2) == std::vector<long>{2, 1});
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z/"), InvalidInput);

    auto subs = FiniteAbelianGroup::elementary(2, 2).subgroup_types();
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].is_trivial());
    CHECK(subs[2] == FiniteAbelianGroup::elementary(2, 2));
    CHECK(FiniteAbelianGroup::from_cyclic_orders({4}).subgroup_types().size() == 3);
}

TEST_CASE("group string round trip and subgroup closure")
{
    for (int t = 0; t < 80; ++t)
    {
        auto orders = gen::integers(static_cast<size_t>(gen::integer(0, 4)), 1, 12);
        auto g = FiniteAbelianGroup::from_cyclic_orders(orders);
        CHECK(FiniteAbelianGroup::parse(g.to_string()) == g);
        Integer prod = 1;
        for (long o : orders)
            prod *= o;
        CHECK(g.order() == prod);
        for (const auto &h : g.subgroup_types())
        {
            CHECK(h.embeds_in(g));
            CHECK(g.order() % h.order() == 0);
        }
        CHECK(g.direct_sum(FiniteAbelianGroup()) == g);
    }
}
