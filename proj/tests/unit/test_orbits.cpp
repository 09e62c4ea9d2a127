#include <set>

#include <doctest.h>

#include "bdfkit/orbits.hpp"
#include "bdfkit/torus.hpp"
#include "gen.hpp"

using namespace bdf;

namespace
{
    long orbit_index(long m, std::vector<long> res)
    {
        return galois_orbits(m).find(CharacterTuple::make(m, std::move(res)));
    }
}

TEST_CASE("all tuples")
{
    auto t3 = all_tuples(3);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].residues == std::vector<long>{1});
    CHECK(t3[1].residues == std::vector<long>{2});
    auto t5 = all_tuples(5);
    REQUIRE(t5.size() == 4);
    CHECK(t5[0].residues == std::vector<long>{1, 2});
    CHECK(t5[1].residues == std::vector<long>{1, 3});
    CHECK(t5[2].residues == std::vector<long>{2, 4});
    CHECK(t5[3].residues == std::vector<long>{3, 4});
    CHECK(all_tuples(7).size() == 8);
    CHECK_THROWS_AS(all_tuples(2), InvalidInput);
    for (long m = 3; m <= 30; ++m)
        CHECK(static_cast<long>(all_tuples(m).size()) == (1L << (totient(m) / 2)));
}

TEST_CASE("orbit counts and listed representatives")
{
    CHECK(galois_orbits(7).orbits.size() == 2);
    CHECK(orbit_index(7, {1, 2, 3}) != orbit_index(7, {1, 2, 4}));
    CHECK(galois_orbits(9).orbits.size() == 2);
    CHECK(orbit_index(9, {1, 2, 4}) != orbit_index(9, {1, 4, 7}));
    CHECK(galois_orbits(15).orbits.size() == 4);
    CHECK(galois_orbits(20).orbits.size() == 4);

    auto o16 = galois_orbits(16);
    CHECK(o16.orbits.size() == 4);
    std::set<long> idx16;
    for (auto r : {std::vector<long>{1, 3, 5, 9}, {1, 3, 5, 7}, {1, 3, 9, 11}, {1, 5, 9, 13}})
        idx16.insert(orbit_index(16, r));
    CHECK(idx16.size() == 4);

    CHECK(galois_orbits(24).orbits.size() == 5);
    std::set<long> idx24;
    for (auto r : {std::vector<long>{1, 5, 7, 11}, {1, 5, 7, 13}, {1, 5, 13, 17}, {1, 7, 13, 19}, {1, 11, 17, 19}})
        idx24.insert(orbit_index(24, r));
    CHECK(idx24.size() == 5);

    CHECK(galois_orbits(11).orbits.size() == 4);
    CHECK(orbit_index(11, {1, 2, 3, 4, 5}) != orbit_index(11, {1, 2, 3, 4, 6}));
}

TEST_CASE("orbit canonical representatives")
{
    CHECK(orbit_of(CharacterTuple::make(7, {1, 2, 4})).residues == std::vector<long>{1, 2, 4});
    CHECK(orbit_of(CharacterTuple::make(5, {2, 4})).residues == std::vector<long>{1, 2});
    CHECK(orbit_of(CharacterTuple::make(3, {2})).residues == std::vector<long>{1});
    CHECK(CharacterTuple::make(7, {1, 2, 4}).times(2) == CharacterTuple::make(7, {1, 2, 4}));
    CHECK(CharacterTuple::parse(9, "(1,4,7)").residues == std::vector<long>{1, 4, 7});
    CHECK_THROWS_AS(CharacterTuple::make(8, {1, 7}), InvalidInput);
    CHECK_THROWS_AS(CharacterTuple::make(8, {2}), InvalidInput);
    CHECK_THROWS_AS(CharacterTuple::parse(8, "1,x"), InvalidInput);
}

TEST_CASE("orbits partition the tuples and are closed under the group")
{
    for (long m = 3; m <= 30; ++m)
    {
        if (totient(m) > 12)
            continue;
        auto os = galois_orbits(m);
        size_t total = 0;
        for (const auto &o : os.orbits)
        {
            total += o.members.size();
            CHECK(o.representative == o.members.front());
            for (const auto &t : o.members)
            {
                CHECK(orbit_of(t) == o.representative);
                CHECK(orbit_of(t.conjugate()) == o.representative);
                for (long u = 1; u < m; ++u)
                    if (gcd(u, m) == 1)
                        CHECK(orbit_of(t.times(u)) == o.representative);
            }
        }
        CHECK(total == all_tuples(m).size());
        CHECK(os.orbits.size() == hodge_classes(m, 1).size());
    }
}

TEST_CASE("orbit of a random tuple is found")
{
    for (int t = 0; t < 100; ++t)
    {
        long m = gen::integer(3, 40);
        if (totient(m) > 16)
            continue;
        auto tuples = all_tuples(m);
        const auto &tup = tuples[static_cast<size_t>(gen::integer(0, static_cast<long>(tuples.size()) - 1))];
        auto os = galois_orbits(m);
        long i = os.find(tup);
        REQUIRE(i >= 0);
        CHECK(os.orbits[static_cast<size_t>(i)].representative == orbit_of(tup));
    }
}
