#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are stored as reduced residues modulo the N-th cyclotomic
 * polynomial in the power basis 1, zeta, ..., zeta^{phi(N)-1}. Coefficients
 * are kept as GMP integer numerators over one positive common denominator,
 * normalized so that the denominator is coprime to the numerator content;
 * that form is unique, so equality and zero testing are exact comparisons.
 */

#include <complex>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace pcring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial; entry i is the coefficient of x^i.
using IntPoly = std::vector<Integer>;

unsigned euler_phi(unsigned n);

/// Phi_n, computed as (x^n - 1) divided by the product of Phi_d over proper divisors d.
IntPoly cyclotomic_polynomial(unsigned n);

class CyclotomicField;

class CycloNum {
public:
    static CycloNum zero(unsigned order);
    static CycloNum one(unsigned order);
    static CycloNum scalar(unsigned order, const Rational& value);
    /// Reduces an arbitrary-length coefficient vector modulo Phi_order.
    static CycloNum from_poly(unsigned order, const std::vector<Rational>& poly);

    unsigned order() const noexcept;
    /// Power-basis coefficients as reduced fractions.
    std::vector<Rational> coeffs() const;
    const std::vector<Integer>& numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept;
    /// True when the value lies in Q; its rational value is coeffs()[0].
    bool is_rational() const noexcept;

    CycloNum& operator+=(const CycloNum& other);
    CycloNum& operator-=(const CycloNum& other);
    CycloNum& operator*=(const CycloNum& other);
    CycloNum& operator*=(const Rational& scale);

    CycloNum operator-() const;
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(CycloNum a, const Rational& k) { return a *= k; }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    /// Throws Error(division_by_zero) for zero.
    CycloNum inverse() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);

    /// Floating-point value with zeta = exp(2*pi*i/N). Display only.
    std::complex<double> approximate() const;

private:
    friend class CycloAccumulator;

    CycloNum(const CyclotomicField* field, std::vector<Integer> num, Integer den);

    void normalize();

    const CyclotomicField* field_;
    std::vector<Integer> num_;
    Integer den_;
};

/// zeta_n^k; k is taken modulo n.
CycloNum root_of_unity(unsigned n, long long k);

inline bool cy_is_zero(const CycloNum& a) noexcept { return a.is_zero(); }

/**
 * Unreduced accumulator for sums of products in Q(zeta_N).
 *
 * Terms are collected as polynomials in Q[x]/(x^N - 1) and reduced modulo
 * Phi_N once in result(). Convolutions and Fourier sums use this to avoid a
 * reduction per term.
 */
class CycloAccumulator {
public:
    explicit CycloAccumulator(unsigned order);

    void clear();
    void add(const CycloNum& a);
    void add_product(const CycloNum& a, const CycloNum& b);
    void add_scaled(const CycloNum& a, const Rational& k);
    /// Adds a * zeta^shift.
    void add_shifted(const CycloNum& a, unsigned shift);
    /// Adds q * zeta^shift.
    void add_root(const Rational& q, unsigned shift);

    CycloNum result() const;

private:
    // Brings the buffer onto a denominator divisible by term_den; returns the term's scale factor.
    Integer align(const Integer& term_den);

    const CyclotomicField* field_;
    std::vector<Integer> buffer_;
    Integer den_ = 1;
    Integer scratch_;
};

} // namespace pcring
