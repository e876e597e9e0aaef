#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pmaya {

// Element of the real quadratic field Q(sqrt(m)): value = a + b*sqrt(m).
//
// Invariants:
//   - m is squarefree and >= 0; m == 0 encodes a plain rational.
//   - if b == 0 then m == 0 (rationals always carry radicand 0), so the
//     representation is canonical and operator== is plain member comparison.
//   - m == 1 never appears: sqrt(1) is folded into the rational part.
//
// Arithmetic between two values with distinct nonzero radicands is a domain
// error: this library only ever needs one radical at a time.
class Scalar {
public:
    Scalar() : m_(0) {}
    Scalar(long n) : a_(n), m_(0) {}
    Scalar(int n) : a_(n), m_(0) {}
    explicit Scalar(const mpq_class& a) : a_(a), m_(0) { a_.canonicalize(); }
    Scalar(mpq_class a, mpq_class b, long m);

    static Scalar rational(long num, long den);
    // coeff * sqrt(m); m >= 0 but need not be squarefree (square part is folded out)
    static Scalar surd(const mpq_class& coeff, long m);
    // 1/sqrt(n) for integer n > 0
    static Scalar inv_sqrt(long n);
    // largest s with n = s * q^2, s squarefree; returns {s, q}. n > 0.
    static std::pair<long, long> squarefree_split(long n);

    const mpq_class& rat() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    long radicand() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    Scalar inverse() const;
    // field conjugate a - b*sqrt(m)
    Scalar conjugate() const;

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && m_ == o.m_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "a", or "a+b*sqrt(m)" when the surd part is present
    std::string str() const;

private:
    mpq_class a_, b_;
    long m_;

    void normalize();
    static long merged_radicand(const Scalar& x, const Scalar& y);
};

}  // namespace pmaya
