#include "bdfkit/orbits.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "bdfkit/arith.hpp"
#include "bdfkit/cycnum.hpp"

namespace bdf
{
    namespace
    {
        std::vector<long> units_mod(long m)
        {
            std::vector<long> us;
            for (long u = 1; u < m; ++u)
                if (gcd(u, m) == 1)
                    us.push_back(u);
            return us;
        }

        std::set<CharacterTuple> closure(const CharacterTuple &t)
        {
            auto us = units_mod(t.m);
            std::set<CharacterTuple> seen{t};
            std::queue<CharacterTuple> todo;
            todo.push(t);
            while (!todo.empty())
            {
                CharacterTuple cur = todo.front();
                todo.pop();
                std::vector<CharacterTuple> next{cur.conjugate()};
                for (long u : us)
                    next.push_back(cur.times(u));
                for (auto &n : next)
                    if (seen.insert(n).second)
                        todo.push(std::move(n));
            }
            return seen;
        }
    } // namespace

    CharacterTuple CharacterTuple::make(long m, std::vector<long> residues)
    {
        if (m < 3)
            throw InvalidInput("character tuples need m >= 3, got " + std::to_string(m));
        for (auto &j : residues)
        {
            j = mod(j, m);
            if (gcd(j, m) != 1)
                throw InvalidInput("residue " + std::to_string(j) + " is not a unit mod " + std::to_string(m));
        }
        std::sort(residues.begin(), residues.end());
        for (size_t i = 0; i < residues.size(); ++i)
        {
            if (i > 0 && residues[i] == residues[i - 1])
                throw InvalidInput("repeated residue " + std::to_string(residues[i]));
            if (std::binary_search(residues.begin(), residues.end(), m - residues[i]))
                throw InvalidInput("residues " + std::to_string(residues[i]) + " and " +
                                   std::to_string(m - residues[i]) + " are complex conjugate mod " + std::to_string(m));
        }
        return CharacterTuple{m, std::move(residues)};
    }

    CharacterTuple CharacterTuple::parse(long m, const std::string &text)
    {
        std::string s;
        for (char c : text)
            if (c != '(' && c != ')' && c != ' ')
                s += c;
        std::vector<long> rs;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
        {
            try
            {
                size_t used = 0;
                rs.push_back(std::stol(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            }
            catch (const std::exception &)
            {
                throw InvalidInput("cannot parse residue '" + tok + "' in '" + text + "'");
            }
        }
        if (rs.empty())
            throw InvalidInput("empty residue tuple");
        return make(m, rs);
    }

    CharacterTuple CharacterTuple::times(long u) const
    {
        std::vector<long> rs;
        for (long j : residues)
            rs.push_back(mod(u * j, m));
        std::sort(rs.begin(), rs.end());
        return CharacterTuple{m, rs};
    }

    CharacterTuple CharacterTuple::conjugate() const { return times(-1); }

    bool CharacterTuple::is_full() const { return static_cast<long>(residues.size()) * 2 == totient(m); }

    std::string CharacterTuple::to_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < residues.size(); ++i)
            s += (i ? "," : "") + std::to_string(residues[i]);
        return s + ")";
    }

    long OrbitSet::find(const CharacterTuple &t) const
    {
        for (size_t i = 0; i < orbits.size(); ++i)
            if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), t))
                return static_cast<long>(i);
        return -1;
    }

    std::vector<CharacterTuple> all_tuples(long m)
    {
        if (m < 3)
            throw InvalidInput("all_tuples needs m >= 3, got " + std::to_string(m));
        std::vector<long> reps;
        for (long a = 1; 2 * a < m; ++a)
            if (gcd(a, m) == 1)
                reps.push_back(a);
        std::vector<CharacterTuple> out;
        for (unsigned long mask = 0; mask < (1UL << reps.size()); ++mask)
        {
            std::vector<long> rs;
            for (size_t i = 0; i < reps.size(); ++i)
                rs.push_back((mask >> i) & 1 ? m - reps[i] : reps[i]);
            std::sort(rs.begin(), rs.end());
            out.push_back(CharacterTuple{m, rs});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    OrbitSet galois_orbits(long m)
    {
        OrbitSet os;
        os.m = m;
        std::set<CharacterTuple> assigned;
        for (const auto &t : all_tuples(m))
        {
            if (assigned.count(t))
                continue;
            auto cl = closure(t);
            Orbit o;
            o.members.assign(cl.begin(), cl.end());
            o.representative = o.members.front();
            assigned.insert(cl.begin(), cl.end());
            os.orbits.push_back(std::move(o));
        }
        std::sort(os.orbits.begin(), os.orbits.end(),
                  [](const Orbit &a, const Orbit &b) { return a.representative < b.representative; });
        return os;
    }

    CharacterTuple orbit_of(const CharacterTuple &t)
    {
        CharacterTuple v = CharacterTuple::make(t.m, t.residues);
        return *closure(v).begin();
    }

} // namespace bdf
