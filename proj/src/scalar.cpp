#include "pmaya/scalar.hpp"

namespace pmaya {

Scalar::Scalar(mpq_class a, mpq_class b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    if (m < 0) throw std::domain_error("Scalar: negative radicand");
    normalize();
}

void Scalar::normalize() {
    // mpq_class construction from (num, den) does not canonicalize; all GMP
    // rational arithmetic assumes canonical operands, so enforce it here.
    a_.canonicalize();
    b_.canonicalize();
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
        m_ = 0;
    }
    if (b_ == 0) {
        m_ = 0;
    } else if (m_ == 0) {
        // b*sqrt(0) == 0
        b_ = 0;
    }
}

std::pair<long, long> Scalar::squarefree_split(long n) {
    if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
    long s = 1, q = 1;
    for (long d = 2; d * d <= n; ++d) {
        long e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        for (long i = 0; i < e / 2; ++i) q *= d;
        if (e % 2) s *= d;
    }
    s *= n;  // leftover prime
    return {s, q};
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::surd(const mpq_class& coeff, long m) {
    if (m < 0) throw std::domain_error("Scalar: negative radicand");
    if (m == 0 || coeff == 0) return Scalar();
    auto [s, q] = squarefree_split(m);
    return Scalar(mpq_class(0), coeff * q, s);
}

Scalar Scalar::inv_sqrt(long n) {
    if (n <= 0) throw std::domain_error("Scalar: inv_sqrt of non-positive integer");
    auto [s, q] = squarefree_split(n);
    // 1/sqrt(n) = 1/(q*sqrt(s)) = sqrt(s)/(q*s)
    mpq_class coeff(1, q * s);
    coeff.canonicalize();
    return Scalar(mpq_class(0), coeff, s);
}

long Scalar::merged_radicand(const Scalar& x, const Scalar& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || x.m_ == y.m_) return x.m_;
    throw std::domain_error("Scalar: mixing distinct radicands sqrt(" + std::to_string(x.m_) +
                            ") and sqrt(" + std::to_string(y.m_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    long m = Scalar::merged_radicand(x, y);
    return Scalar(x.a_ + y.a_, x.b_ + y.b_, m);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    long m = Scalar::merged_radicand(x, y);
    return Scalar(x.a_ - y.a_, x.b_ - y.b_, m);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    long m = Scalar::merged_radicand(x, y);
    return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
}

Scalar Scalar::conjugate() const { return Scalar(a_, -b_, m_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    // (a + b sqrt(m))^-1 = (a - b sqrt(m)) / (a^2 - b^2 m); the norm is nonzero
    // for nonzero elements because sqrt(m) is irrational for squarefree m > 1.
    mpq_class norm = a_ * a_ - b_ * b_ * m_;
    return Scalar(a_ / norm, -b_ / norm, m_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

std::string Scalar::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s;
    if (a_ != 0) s = a_.get_str() + (b_ > 0 ? "+" : "");
    s += b_.get_str() + "*sqrt(" + std::to_string(m_) + ")";
    return s;
}

}  // namespace pmaya
