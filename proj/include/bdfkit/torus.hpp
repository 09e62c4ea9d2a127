#pragma once

// Lattices with a finite-order automorphism: cyclotomic decomposition, fixed
// loci, Hodge types, moduli counts and eigenvectors.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdfkit/cycnum.hpp"
#include "bdfkit/intlattice.hpp"

namespace bdf
{
    /// Components (k, r_k): r_k copies of R_k = Z[X]/(phi_k), k ascending.
    class CyclotomicModule
    {
    public:
        CyclotomicModule() = default;
        explicit CyclotomicModule(std::vector<std::pair<long, long>> components);

        const std::vector<std::pair<long, long>> &components() const { return comps_; }
        long multiplicity(long k) const;
        long rank() const;  // sum r_k * phi(k)
        long order() const; // lcm of the k
        bool has_trivial_part() const { return multiplicity(1) > 0; }
        std::string to_string() const; // "{5:1}" / "{2:2,4:1}"

        friend bool operator==(const CyclotomicModule &, const CyclotomicModule &) = default;

    private:
        std::vector<std::pair<long, long>> comps_;
    };

    class LatticeAutomorphism
    {
    public:
        // Block-diagonal companion matrices; order 1 rejected unless allow_trivial.
        static LatticeAutomorphism from_module(const CyclotomicModule &mod, bool allow_trivial = false);
        // Any integer matrix of finite order; decomposition recovered from its characteristic polynomial.
        static LatticeAutomorphism from_matrix(const IntMatrix &rep, bool allow_trivial = false);

        long order() const { return m_; }
        const CyclotomicModule &module() const { return module_; }
        const IntMatrix &rep() const { return rep_; }

    private:
        long m_ = 1;
        CyclotomicModule module_;
        IntMatrix rep_;
    };

    constexpr long kFiniteOrderBound = 10000;

    std::map<long, long> character_multiplicities(const IntMatrix &m, long bound = kFiniteOrderBound);
    FiniteAbelianGroup fixed_locus(const LatticeAutomorphism &aut);
    std::vector<long> admissible_orders(long n);

    // Residues a in [1, k/2) coprime to k: one representative per conjugate pair.
    std::vector<long> pair_representatives(long k);

    /// Hodge type of a G-Hodge decomposition on a cyclotomic module.
    /// nu(k)[i] is the multiplicity in H^{1,0} of the character a_i = pair_representatives(k)[i];
    /// its conjugate then has r_k - nu. The eigenvalue -1 part (k = 2) of rank 2s contributes s.
    class ComplexStructure
    {
    public:
        ComplexStructure(CyclotomicModule mod, std::map<long, std::vector<long>> nu, long level = 0);
        // Rank-1 components only: residues mod m, each of order dividing m and not 1.
        static ComplexStructure from_residues(long m, const std::vector<long> &residues);
        // The structure choosing all residues j < m/2 on every component of order k | m, k > 2.
        static ComplexStructure standard(const CyclotomicModule &mod);

        const CyclotomicModule &module() const { return module_; }
        long order() const { return module_.order(); }
        // Modulus in which residues are written (a multiple of order()).
        long level() const { return level_; }
        const std::map<long, std::vector<long>> &nu() const { return nu_; }
        long real_part() const { return s_; }
        long dimension() const { return module_.rank() / 2; }

        // Chosen residues mod level() for all rank-1 components, ascending.
        std::vector<long> residues() const;
        // nu of an arbitrary character a mod k (coprime to k).
        long nu_of(long k, long a) const;

        ComplexStructure conjugate() const;
        // Image under the unit u mod level(): the character a of order k moves to u*a.
        ComplexStructure galois(long u) const;
        // Lexicographically minimal nu-vector over the Galois and conjugation orbit.
        ComplexStructure canonical() const;

        std::string to_string() const;
        friend bool operator==(const ComplexStructure &a, const ComplexStructure &b)
        {
            return a.module_ == b.module_ && a.nu_ == b.nu_;
        }
        friend bool operator<(const ComplexStructure &a, const ComplexStructure &b) { return a.nu_ < b.nu_; }

    private:
        CyclotomicModule module_;
        std::map<long, std::vector<long>> nu_;
        long s_ = 0;
        long level_ = 1;
    };

    long moduli_dimension(const ComplexStructure &cs);
    bool is_rigid(const ComplexStructure &cs);

    // Hodge types of r copies of R_k up to Galois action and conjugation, canonical forms, sorted.
    std::vector<ComplexStructure> hodge_classes(long k, long r);

    /// Eigenvectors v_j = sum_i eps^(-j i) X^i with eps = zeta_m, reduced into Z[X]/(q)
    /// and written in the power basis 1, X, ..., X^(deg q - 1).
    struct EigenvectorBasis
    {
        long m = 0;
        IntPolynomial modulus;
        std::map<long, std::vector<CyclotomicNumber>> vectors;
    };

    // Full lattice Z[X]/(X^m - 1) when q is X^m - 1; residues whose eigenvalue is not a root of q are rejected.
    EigenvectorBasis eigenvector_basis(long m, const std::vector<long> &residues, const IntPolynomial &q);
    // Rank-1 primary structure on R_m: residues must be units mod m.
    EigenvectorBasis eigenvector_basis(const ComplexStructure &cs);

    // Coordinates of X^i in the power basis of Z[X]/(q), q monic.
    std::vector<Integer> reduce_power(long i, const IntPolynomial &q);

} // namespace bdf
