#pragma once

// Exact linear algebra over Z: Smith form, companion matrices, characteristic
// polynomials, cokernels and determinants.

#include <initializer_list>
#include <string>
#include <vector>

#include "bdfkit/arith.hpp"
#include "bdfkit/cycnum.hpp"

namespace bdf
{
    class IntMatrix
    {
    public:
        IntMatrix() = default;
        IntMatrix(long rows, long cols); // zero matrix
        IntMatrix(long rows, long cols, std::vector<Integer> entries);
        IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

        static IntMatrix identity(long n);
        static IntMatrix diagonal(const std::vector<Integer> &d);
        static IntMatrix block_diagonal(const std::vector<IntMatrix> &blocks);

        long rows() const { return rows_; }
        long cols() const { return cols_; }
        bool is_square() const { return rows_ == cols_; }
        Integer &operator()(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
        const Integer &operator()(long i, long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }
        const std::vector<Integer> &entries() const { return e_; }

        IntMatrix transpose() const;
        IntMatrix submatrix(long r0, long c0, long nr, long nc) const;
        bool is_zero() const;
        bool is_skew() const; // antisymmetric with zero diagonal

        friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
        friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
        friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
        friend IntMatrix operator*(const Integer &s, const IntMatrix &a);
        friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

        IntMatrix power(long k) const;
        std::vector<Integer> apply(const std::vector<Integer> &v) const;

        std::string to_string() const; // rows as [a, b; c, d]

    private:
        long rows_ = 0;
        long cols_ = 0;
        std::vector<Integer> e_;
    };

    struct SNFDecomposition
    {
        IntMatrix U;
        IntMatrix D;
        IntMatrix V;
        std::vector<Integer> diagonal() const;
    };

    /// Finite abelian group by invariant factors d_1 | d_2 | ... (all >= 2).
    class FiniteAbelianGroup
    {
    public:
        FiniteAbelianGroup() = default;
        // Any list of cyclic orders; ones and the divisibility chain are normalized.
        static FiniteAbelianGroup from_cyclic_orders(const std::vector<long> &orders);
        static FiniteAbelianGroup elementary(long p, long rank); // (Z/p)^rank
        // Accepts "0", "Z/2", "Z/2 x Z/4", "(Z/2)^2", "(Z/2)^2 x Z/3".
        static FiniteAbelianGroup parse(const std::string &text);

        const std::vector<long> &invariant_factors() const { return factors_; }
        bool is_trivial() const { return factors_.empty(); }
        Integer order() const;
        long p_rank(long p) const;
        // exponents of the p-primary part, descending
        std::vector<long> p_partition(long p) const;
        std::vector<long> primes() const;

        bool embeds_in(const FiniteAbelianGroup &g) const;
        // Isomorphism types of all subgroups, sorted by (order, factors).
        std::vector<FiniteAbelianGroup> subgroup_types() const;
        FiniteAbelianGroup direct_sum(const FiniteAbelianGroup &o) const;

        std::string to_string() const; // "0", "Z/5", "(Z/2)^2 x Z/3" style
        friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) = default;
        friend bool operator<(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b);

    private:
        std::vector<long> factors_;
    };

    SNFDecomposition smith_normal_form(const IntMatrix &m);
    IntMatrix companion(const IntPolynomial &p);
    IntPolynomial char_poly(const IntMatrix &m);
    FiniteAbelianGroup cokernel(const IntMatrix &m);
    Integer det(const IntMatrix &m);

    long rank(const IntMatrix &m);
    // Integer basis of the rational null space {x : m x = 0}, each vector primitive.
    std::vector<std::vector<Integer>> nullspace(const IntMatrix &m);

} // namespace bdf
