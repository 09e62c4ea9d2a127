#pragma once

// Character tuples on R_m and their orbits under units mod m and complex conjugation.

#include <string>
#include <vector>

namespace bdf
{
    struct CharacterTuple
    {
        long m = 0;
        std::vector<long> residues; // strictly increasing, units mod m, no conjugate pair

        // Validates and sorts; throws InvalidInput on bad residues.
        static CharacterTuple make(long m, std::vector<long> residues);
        // "(1,2,4)" or "1,2,4"
        static CharacterTuple parse(long m, const std::string &text);

        CharacterTuple times(long u) const;
        CharacterTuple conjugate() const;
        bool is_full() const; // one residue from every conjugate pair
        std::string to_string() const;

        friend bool operator==(const CharacterTuple &, const CharacterTuple &) = default;
        friend auto operator<=>(const CharacterTuple &a, const CharacterTuple &b) { return a.residues <=> b.residues; }
    };

    struct Orbit
    {
        CharacterTuple representative; // lexicographic minimum
        std::vector<CharacterTuple> members; // sorted
    };

    struct OrbitSet
    {
        long m = 0;
        std::vector<Orbit> orbits; // sorted by representative
        // index of the orbit containing t, or -1
        long find(const CharacterTuple &t) const;
    };

    std::vector<CharacterTuple> all_tuples(long m);
    OrbitSet galois_orbits(long m);
    CharacterTuple orbit_of(const CharacterTuple &t);

} // namespace bdf
