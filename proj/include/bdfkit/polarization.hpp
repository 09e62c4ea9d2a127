#pragma once

// Invariant alternating forms from lambda-vectors and certified checks of the
// Riemann bilinear relations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdfkit/cycnum.hpp"
#include "bdfkit/intlattice.hpp"
#include "bdfkit/torus.hpp"

namespace bdf
{
    /// lambda_1 .. lambda_floor(m/2); E(X^i, X^j) = lambda_{j-i}.
    class LambdaVector
    {
    public:
        // Shorter input is padded with zeros; longer input, lambda_{m/2} != 0 or all zeros are rejected.
        static LambdaVector make(long m, std::vector<long> values);
        // Comma separated integers, "a^k" shorthand allowed: "(-1)^3,0,1".
        static LambdaVector parse(long m, const std::string &text);
        static std::vector<long> expand_shorthand(const std::string &text);

        long m() const { return m_; }
        const std::vector<long> &values() const { return lambdas_; }
        // lambda_i for any integer i, using lambda_0 = 0 and lambda_{m-i} = -lambda_i
        long at(long i) const;
        LambdaVector negated() const;
        std::string to_string() const;

        friend bool operator==(const LambdaVector &, const LambdaVector &) = default;
        friend auto operator<=>(const LambdaVector &a, const LambdaVector &b) { return a.lambdas_ <=> b.lambdas_; }

    private:
        long m_ = 0;
        std::vector<long> lambdas_;
    };

    enum class FormBasis
    {
        full,       // Z[X]/(X^m - 1)
        restricted, // Z[X]/(q), q = 1 + X + ... + X^(m-1) (m odd) or 1 + X^2 + ... + X^(m-2) (m even)
        block       // Z[X]/(phi_k) for one k | m, embedded as the sublattice (q/phi_k) R'
    };

    std::string to_string(FormBasis b);
    IntPolynomial restricted_modulus(long m);

    struct AlternatingFormData
    {
        long m = 0;
        FormBasis basis = FormBasis::full;
        long block_order = 0; // k for block forms
        IntPolynomial modulus;
        IntMatrix matrix;

        long rank() const { return matrix.rows(); }
        // multiplication by X in the lattice basis
        IntMatrix automorphism() const { return companion(modulus); }
    };

    AlternatingFormData build_form(const LambdaVector &lv, FormBasis basis);

    bool check_invariance(const AlternatingFormData &f, const IntMatrix &aut);
    bool check_invariance(const AlternatingFormData &f, const LatticeAutomorphism &aut);

    struct KernelInfo
    {
        long deficiency = 0;
        std::vector<std::vector<Integer>> generators;
    };
    KernelInfo kernel_rank(const AlternatingFormData &f);

    // E(v_h, v_k) == 0 exactly for all chosen residues h, k (residues mod f.m).
    bool first_riemann(const AlternatingFormData &f, const std::vector<long> &residues);
    bool first_riemann(const AlternatingFormData &f, const ComplexStructure &cs);

    enum class PosDef
    {
        yes,
        no,
        inconclusive
    };
    std::string to_string(PosDef p);

    struct GramResult
    {
        PosDef posdef = PosDef::inconclusive;
        std::vector<ComplexInterval> diagonal;
        std::vector<Interval> pivots; // leading pivots that were decided
        long bits = 0;                // precision of the final pass
    };

    // G_jk = E(-i v_j, conj v_k); definiteness from interval Gaussian elimination,
    // doubling the precision from `bits` until decided or max_bits is exceeded.
    GramResult gram_and_posdef(const AlternatingFormData &f, const std::vector<long> &residues, long bits = 128,
                               long max_bits = 4096);

    // Elementary divisors d_1 | ... | d_g (each occurs twice in the Smith form).
    std::vector<Integer> polarization_type(const AlternatingFormData &f);

    struct BlockSplit
    {
        IntMatrix change_of_basis;             // columns: (q/phi_k) X^i
        IntMatrix transformed;                 // C^T E C
        std::map<long, AlternatingFormData> blocks;
        bool cross_blocks_zero = false;
    };
    BlockSplit split_blocks(const AlternatingFormData &f);

    struct PolarizationReport
    {
        bool invariant = false;
        bool riemann1 = false;
        PosDef posdef = PosDef::inconclusive;
        std::optional<std::vector<Integer>> type;
        std::vector<ComplexInterval> gram_diagonal;
        long bits = 0;

        bool ok() const { return invariant && riemann1 && posdef == PosDef::yes; }
        bool principal() const;
    };

    // The form a structure is checked against: the primitive block R_m when the residues form a
    // full tuple of units mod m, otherwise the restricted lattice.
    AlternatingFormData form_for_residues(const LambdaVector &lv, const std::vector<long> &residues);

    PolarizationReport polarize(const AlternatingFormData &f, const std::vector<long> &residues, long bits = 128,
                                long max_bits = 4096);

    // All lambda with entries in [-bound, bound] (lambda_{m/2} = 0 for even m) whose form is a
    // polarization for the given residues, sorted lexicographically. E and -E never both pass.
    std::vector<LambdaVector> search_lambda(long m, const std::vector<long> &residues, long bound);

    std::vector<long> standard_residues(long m); // all j in [1, m/2)

} // namespace bdf
