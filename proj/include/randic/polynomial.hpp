#ifndef RANDIC_POLYNOMIAL_HPP
#define RANDIC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial with exact integer coefficients,
/// stored ascending (coeffs()[k] multiplies x^k). The zero polynomial has an
/// empty coefficient list; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one();
    static IntPolynomial monomial(BigInt c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(int k) const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    double eval(double x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    IntPolynomial pow(unsigned e) const;

    /// Descending-power text, e.g. "x^3 - 3x - 2".
    std::string str() const;
    /// Ascending coefficient strings, e.g. ["-2","-3","0","1"].
    std::vector<std::string> coeff_strings() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// Same layout over exact rationals (always in lowest terms, positive
/// denominators; GMP canonicalizes after every ring operation).
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<BigRat> ascending);

    static RatPolynomial zero() { return RatPolynomial(); }
    static RatPolynomial one();
    static RatPolynomial monomial(BigRat c, int degree);
    static RatPolynomial from_int(const IntPolynomial& p);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    const BigRat& coeff(int k) const;

    BigRat eval(const BigRat& x) const;
    double eval(double x) const;

    RatPolynomial& operator+=(const RatPolynomial& rhs);
    RatPolynomial& operator-=(const RatPolynomial& rhs);
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) = default;

    RatPolynomial pow(unsigned e) const;

    std::string str() const;
    std::vector<std::string> coeff_strings() const;

private:
    void normalize();
    std::vector<BigRat> coeffs_;
};

/// Exact characteristic polynomial det(xI - A(g)) via Faddeev-LeVerrier over
/// big integers; the intermediate divisions are exact and are checked.
/// Monic of degree n; n = 0 gives the constant 1. The trace identities
/// (coefficient of x^{n-1} is 0, coefficient of x^{n-2} is -|E|) are asserted
/// on every call.
IntPolynomial charpoly_adjacency(const Graph& g);

/// Tridiagonal determinant sequence L_k = x L_{k-1} - (1/4) L_{k-2},
/// L_1 = x, L_2 = x^2 - 1/4. k >= 1.
RatPolynomial lambda_recurrence(int k);

/// Randic characteristic polynomial of the cycle C_m:
/// x L_{m-1} - (1/2) L_{m-2} - (1/2)^{m-1}. m >= 3.
RatPolynomial randic_charpoly_cycle(int m);

/// For a k-regular graph R = A/k, so RP(x) = k^{-n} P(kx). Throws
/// RegularityError when g is not k-regular (k >= 1).
RatPolynomial randic_charpoly_regular(const Graph& g, int k);

/// Randic characteristic polynomial of the Dutch windmill D_m^n:
/// L_{m-1}^{n-1} * RP(C_m). Degree (m-1)n + 1.
RatPolynomial randic_charpoly_windmill(int m, int n);

}  // namespace randic

#endif
