#pragma once

#include <utility>
#include <vector>

#include "pmaya/scalar.hpp"

namespace pmaya {

// Dense univariate polynomial over Q(sqrt(m)), coefficients stored in
// ascending order with trailing zeros stripped. The zero polynomial is the
// empty coefficient list; degree() reports it as -1 (standing in for -inf).
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);
    Poly(long c) : Poly(Scalar(c)) {}
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly variable();                               // z
    static Poly monomial(const Scalar& coeff, long deg);  // coeff * z^deg

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Scalar coeff(long i) const;  // 0 outside [0, degree()]
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const;
    bool is_rational() const;  // every coefficient in Q

    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(const Poly& x, const Poly& y);
    friend Poly operator-(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const Poly& y);
    friend Poly operator*(const Scalar& c, const Poly& p);

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(long order = 1) const;
    Scalar eval(const Scalar& x) const;

    // Field division with remainder: *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Exact quotient; throws if the division leaves a remainder.
    Poly exact_div(const Poly& d) const;

    // Monic greatest common divisor (gcd(0,0) == 0).
    static Poly gcd(const Poly& a, const Poly& b);
    // Least common multiple a * (b / gcd(a, b)); zero if either is zero.
    static Poly lcm(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly compose_linear(const Scalar& gamma) const;  // p(gamma * z)

    bool is_even() const;  // only even-degree coefficients
    bool is_odd() const;   // only odd-degree coefficients
    // For an even polynomial p(z) = q(z^2), return q; throws otherwise.
    Poly even_decimation() const;
    // For an odd polynomial p(z) = z*q(z^2), return q; throws otherwise.
    Poly odd_decimation() const;

    std::string str() const;  // human-readable, highest degree first

private:
    std::vector<Scalar> c_;
    void strip();
};

// Positive scalar multiple with integer, content-free coefficients (rational
// input); falls back to the monic normalization over extension coefficients.
Poly primitive_part(const Poly& p);

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
// Every interior division is exact and asserted as such.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

// Wronskian determinant Wr[p_1, ..., p_n]: row i holds the (i-1)-th
// derivatives. Wr of the empty list is 1.
Poly wronskian(const std::vector<Poly>& ps);

// Quotient of polynomials kept in lowest terms with a monic denominator;
// that representation is unique, so operator== is member comparison.
class RatFunc {
public:
    RatFunc() : num_(), den_(Scalar(1)) {}
    RatFunc(const Poly& num) : num_(num), den_(Scalar(1)) {}
    RatFunc(const Poly& num, const Poly& den);
    RatFunc(long n) : RatFunc(Poly(n)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const;
    RatFunc compose_linear(const Scalar& gamma) const;

    std::string str() const;

private:
    Poly num_, den_;
};

// Logarithmic derivative p'/p as a reduced rational function.
RatFunc log_derivative(const Poly& p);

}  // namespace pmaya
