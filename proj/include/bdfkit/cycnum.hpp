#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m), cyclotomic polynomials and the
// small number-theoretic functions the rest of the library is built on.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bdfkit/arith.hpp"
#include "bdfkit/interval.hpp"

namespace bdf
{
    long totient(long m);
    int mobius(long d);

    /// Dense univariate polynomial over Z, lowest degree first.
    class IntPolynomial
    {
    public:
        IntPolynomial() = default;
        explicit IntPolynomial(std::vector<Integer> coeffs);
        static IntPolynomial monomial(long degree, const Integer &c = 1);
        static IntPolynomial from_longs(std::initializer_list<long> coeffs);

        bool is_zero() const { return coeffs_.empty(); }
        long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
        const Integer &leading() const;
        bool is_monic() const { return !is_zero() && leading() == 1; }
        const std::vector<Integer> &coeffs() const { return coeffs_; }
        Integer coeff(long i) const;
        Integer eval(const Integer &x) const;

        friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
        friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
        friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
        friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) = default;

        // Division by a monic divisor; quotient and remainder stay integral.
        std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial &monic_divisor) const;
        // Exact division; throws DomainError when the remainder is nonzero.
        IntPolynomial exact_div(const IntPolynomial &monic_divisor) const;

        std::string to_string(const std::string &var = "X") const;

    private:
        void trim();
        std::vector<Integer> coeffs_;
    };

    IntPolynomial cyclotomic_poly(long k);

    /// Immutable description of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
    class CyclotomicField
    {
    public:
        static std::shared_ptr<const CyclotomicField> make(long m);

        long level() const { return m_; }
        long degree() const { return degree_; }
        const IntPolynomial &modulus() const { return phi_; }
        // Power-basis coordinates of zeta^j, any integer j.
        const std::vector<Integer> &power(long j) const { return powers_[mod(j, m_)]; }

        explicit CyclotomicField(long m); // use make()

    private:
        long m_;
        long degree_;
        IntPolynomial phi_;
        std::vector<std::vector<Integer>> powers_; // zeta^j for j in [0, m)
    };

    using FieldPtr = std::shared_ptr<const CyclotomicField>;

    /// Element of Q(zeta_m), stored by its power-basis coordinates.
    class CyclotomicNumber
    {
    public:
        explicit CyclotomicNumber(FieldPtr field); // zero
        CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);

        static CyclotomicNumber zeta_power(FieldPtr field, long j);
        static CyclotomicNumber from_rational(FieldPtr field, const Rational &q);

        long level() const { return field_->level(); }
        const FieldPtr &field() const { return field_; }
        const std::vector<Rational> &coeffs() const { return coeffs_; }
        bool is_zero() const;

        CyclotomicNumber conj() const;

        CyclotomicNumber &operator+=(const CyclotomicNumber &o);
        CyclotomicNumber &operator-=(const CyclotomicNumber &o);
        CyclotomicNumber &operator*=(const Rational &s);
        // this += s * zeta^j, without a full multiplication
        void add_scaled_power(const Rational &s, long j);

        friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber &b) { return a += b; }
        friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber &b) { return a -= b; }
        friend CyclotomicNumber operator*(const CyclotomicNumber &a, const CyclotomicNumber &b);
        friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational &s) { return a *= s; }
        friend CyclotomicNumber operator-(const CyclotomicNumber &a);
        friend bool operator==(const CyclotomicNumber &a, const CyclotomicNumber &b);

        std::string to_string() const;

    private:
        void require_same_level(const CyclotomicNumber &o) const;
        FieldPtr field_;
        std::vector<Rational> coeffs_;
    };

    enum class CycOp
    {
        add,
        sub,
        mul,
        conj
    };
    // Dispatching form of the four field operations (conj ignores b but still checks levels).
    CyclotomicNumber cyc_arith(const CyclotomicNumber &a, const CyclotomicNumber &b, CycOp op);

    /// Certified image under zeta_m -> exp(2 pi i / m), computed with `bits` of working precision.
    ComplexInterval embed(const CyclotomicNumber &z, long bits);

    // Number of elements of order exactly m in (Z/m)^r: the closed form printed in the
    // torsion-count remark, the Moebius inclusion-exclusion count, and plain enumeration.
    Integer order_count_paper(long m, long r);
    Integer order_count_oracle(long m, long r);
    Integer order_count_bruteforce(long m, long r);

} // namespace bdf
