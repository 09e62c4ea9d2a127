#pragma once

// Torus families with a finite-order automorphism, their products, translation
// subgroups and the split BdF classification in small dimension.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdfkit/intlattice.hpp"
#include "bdfkit/torus.hpp"

namespace bdf
{
    /// One factor of a torus family: a single eigenvalue order k with one Hodge class.
    struct TorusAtom
    {
        long k = 0;
        long dim = 0;
        std::string label; // "S_8'", "A_6", "X_24^(3)", "E"
        ComplexStructure hodge;
        long p = 0;
    };

    /// A torus with an automorphism of order m, given as a product of atoms.
    struct TorusFamily
    {
        long dim = 0;
        long m = 0;
        CyclotomicModule module;
        std::vector<TorusAtom> factors; // sorted by (dim, k, label)
        FiniteAbelianGroup fix;
        long p = 0; // sum of the factor moduli counts
        std::string label;

        std::vector<long> types() const; // eigenvalue order of each factor, label order
        std::string types_string() const; // "(6,3)"
        // The Hodge type of the whole torus: nu-vectors of the factors added per order.
        ComplexStructure hodge() const;
        bool rigid() const; // every factor rigid
        std::string key() const; // "6 | E_rho x S_6 | (6,3)"
        // Factor labels as a sorted multiset joined by " x ": the row name used when type variants merge.
        std::string name() const;
    };

    // Indecomposable Hodge classes of dimension dim with all eigenvalues of order k.
    std::vector<TorusAtom> atoms(long k, long dim);

    // Families whose eigenvalues are all primitive m-th roots of unity.
    std::vector<TorusFamily> primary_families(long d, long m);
    // All products of atoms of total dimension d2 with lcm of eigenvalue orders m
    // and at most one factor with eigenvalue -1.
    std::vector<TorusFamily> composite_b2(long d2, long m);
    // Every family of dimension d, over all admissible orders, sorted by (m, label, types).
    std::vector<TorusFamily> all_families(long d);

    // Representative residues of the labelled rank-1 class (e.g. ("S_8''", 8) -> {1, 5}).
    std::optional<std::vector<long>> rank_one_residues(const std::string &label, long k);
    // Label of the rank-1 class of the given residues of order k.
    std::string rank_one_label(long k, const std::vector<long> &residues);

    // Subgroups T of Fix(b2) with q-rank(T) + q-rank(Z/m) <= 2 b1_dim for every prime q.
    std::vector<FiniteAbelianGroup> translation_options(const TorusFamily &b2, long b1_dim, long m);

    struct DiscrepancyFlag
    {
        std::string table_id;
        std::string row_key;
        std::string column;
        std::string computed_value;
        std::string printed_value;
        std::string note;
    };

    struct BdFFamily
    {
        long n = 0;
        long m = 0;
        long b1_dim = 0;
        TorusFamily b2;
        std::vector<FiniteAbelianGroup> tr_options;
        std::vector<DiscrepancyFlag> flags;

        long p() const { return b1_dim * (b1_dim + 1) / 2 + b2.p; }
    };

    // Sorted by (m, b1_dim, b2 label, b2 types).
    std::vector<BdFFamily> classify(long n);

    /// Rows of the printed BdF tables: type variants of one B2 merged, T options united.
    struct BdFRow
    {
        long m = 0;
        long b1_dim = 0;
        std::string b2; // TorusFamily::name()
        std::vector<std::string> variants; // b2 types strings
        std::vector<FiniteAbelianGroup> tr_options;
        long p = 0;

        std::string key() const; // "6 | E | E x E_rho"
    };
    std::vector<BdFRow> merge_rows(const std::vector<BdFFamily> &families);

    std::string b1_label(long dim); // E, S, X, then "B1_d"
    std::string groups_to_string(const std::vector<FiniteAbelianGroup> &groups); // "0, Z/2, (Z/2)^2"

} // namespace bdf
