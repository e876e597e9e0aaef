#include "pmaya/poly.hpp"

#include <sstream>

namespace pmaya {

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { strip(); }

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::variable() { return monomial(Scalar(1), 1); }

Poly Poly::monomial(const Scalar& coeff, long deg) {
    if (deg < 0) throw std::domain_error("Poly: negative monomial degree");
    if (coeff.is_zero()) return Poly();
    std::vector<Scalar> c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
}

Scalar Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Scalar();
    return c_[i];
}

Scalar Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_rational() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& x, const Poly& y) {
    std::vector<Scalar> c(std::max(x.c_.size(), y.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < x.c_.size()) c[i] += x.c_[i];
        if (i < y.c_.size()) c[i] += y.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& x, const Poly& y) {
    std::vector<Scalar> c(std::max(x.c_.size(), y.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < x.c_.size()) c[i] += x.c_[i];
        if (i < y.c_.size()) c[i] -= y.c_[i];
    }
    return Poly(std::move(c));
}

namespace {

// Clear denominators to an integer coefficient vector; *den receives the
// common multiplier.
std::vector<mpz_class> clear_denominators(const Poly& p, mpz_class* den) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(mpz_class(c.rat() * l));
    *den = l;
    return v;
}

// Kronecker substitution: pack each factor into a single integer with
// fixed-width signed digit slots and let GMP's subquadratic integer
// multiplication do the convolution. Worthwhile once the naive O(n*m)
// big-integer convolution gets large.
std::vector<mpz_class> kronecker_convolve(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b) {
    size_t abits = 1, bbits = 1;
    for (const auto& v : a) abits = std::max(abits, mpz_sizeinbase(v.get_mpz_t(), 2));
    for (const auto& v : b) bbits = std::max(bbits, mpz_sizeinbase(v.get_mpz_t(), 2));
    size_t terms = std::min(a.size(), b.size());
    size_t count_bits = 1;
    while ((size_t{1} << count_bits) < terms) ++count_bits;
    // |c_k| <= terms * 2^abits * 2^bbits, plus a sign bit and margin
    const mp_bitcnt_t slot = abits + bbits + count_bits + 2;

    auto pack = [slot](const std::vector<mpz_class>& v) {
        mpz_class x = 0;
        for (size_t i = v.size(); i-- > 0;) {
            mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), slot);
            x += v[i];
        }
        return x;
    };
    mpz_class z = pack(a) * pack(b);

    std::vector<mpz_class> c(a.size() + b.size() - 1);
    mpz_class r, half = mpz_class(1) << (slot - 1);
    for (auto& out : c) {
        mpz_fdiv_r_2exp(r.get_mpz_t(), z.get_mpz_t(), slot);
        if (r >= half) r -= half << 1;
        out = r;
        z -= r;
        mpz_fdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), slot);
    }
    return c;
}

}  // namespace

Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    if (x.is_rational() && y.is_rational()) {
        // Integer convolution is far cheaper than mpq products, which pay a
        // gcd per term: one rational reduction per output coefficient.
        mpz_class dx, dy;
        std::vector<mpz_class> a = clear_denominators(x, &dx);
        std::vector<mpz_class> b = clear_denominators(y, &dy);
        std::vector<mpz_class> z;
        if (a.size() >= 16 && b.size() >= 16) {
            z = kronecker_convolve(a, b);
        } else {
            z.resize(a.size() + b.size() - 1);
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) z[i + j] += a[i] * b[j];
        }
        mpz_class d = dx * dy;
        std::vector<Scalar> c;
        c.reserve(z.size());
        for (auto& n : z) c.emplace_back(mpq_class(std::move(n), d));
        return Poly(std::move(c));
    }
    std::vector<Scalar> c(x.c_.size() + y.c_.size() - 1);
    for (size_t i = 0; i < x.c_.size(); ++i)
        for (size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
    Poly r(p);
    for (auto& c : r.c_) c = s * c;
    r.strip();
    return r;
}

Poly Poly::derivative(long order) const {
    Poly r(*this);
    for (long k = 0; k < order; ++k) {
        if (r.is_zero()) return r;
        std::vector<Scalar> c(r.c_.size() > 1 ? r.c_.size() - 1 : 0);
        for (size_t i = 1; i < r.c_.size(); ++i) c[i - 1] = Scalar(static_cast<long>(i)) * r.c_[i];
        r = Poly(std::move(c));
    }
    return r;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q, r(*this);
    Scalar lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long shift = r.degree() - d.degree();
        Scalar f = r.leading() * lead_inv;
        Poly term = monomial(f, shift);
        q += term;
        r -= term * d;
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (is_zero()) return Poly();
    if (is_rational() && d.is_rational()) {
        // In-place synthetic division over mpq; divmod's polynomial-object
        // updates copy the whole remainder once per quotient term.
        long dd = d.degree(), nq = degree() - dd;
        if (nq < 0) throw std::domain_error("Poly: inexact division");
        std::vector<mpq_class> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c.rat());
        std::vector<mpq_class> dv;
        dv.reserve(d.c_.size());
        for (const auto& c : d.c_) dv.push_back(c.rat());
        std::vector<Scalar> q(nq + 1);
        for (long k = nq; k >= 0; --k) {
            mpq_class t = r[k + dd] / dv[dd];
            if (t != 0)
                for (long j = 0; j <= dd; ++j) r[k + j] -= t * dv[j];
            q[k] = Scalar(t);
        }
        for (const auto& c : r)
            if (c != 0) throw std::domain_error("Poly: inexact division");
        return Poly(std::move(q));
    }
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return a * b.exact_div(gcd(a, b));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Poly Poly::compose_linear(const Scalar& gamma) const {
    Poly r(*this);
    Scalar pow(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = r.c_[i] * pow;
        pow = pow * gamma;
    }
    r.strip();
    return r;
}

bool Poly::is_even() const {
    for (size_t i = 1; i < c_.size(); i += 2)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Poly::is_odd() const {
    for (size_t i = 0; i < c_.size(); i += 2)
        if (!c_[i].is_zero()) return false;
    return true;
}

Poly Poly::even_decimation() const {
    if (!is_even()) throw std::domain_error("Poly: not an even polynomial");
    std::vector<Scalar> c;
    for (size_t i = 0; i < c_.size(); i += 2) c.push_back(c_[i]);
    return Poly(std::move(c));
}

Poly Poly::odd_decimation() const {
    if (!is_odd()) throw std::domain_error("Poly: not an odd polynomial");
    std::vector<Scalar> c;
    for (size_t i = 1; i < c_.size(); i += 2) c.push_back(c_[i]);
    return Poly(std::move(c));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (!first) {
            if (cs[0] == '-') {
                os << "-";
                cs = cs.substr(1);
            } else {
                os << "+";
            }
        }
        first = false;
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") {
                if (cs == "-1")
                    os << "-";
                else
                    os << cs << "*";
            }
            os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd
//
// Rational inputs take a fraction-free route (primitive pseudo-remainder
// sequence over the integers): coefficient growth in a naive monic Euclid
// over mpq is severe at the degrees the tau determinants produce.
// ---------------------------------------------------------------------------

namespace {

using ZV = std::vector<mpz_class>;  // ascending integer coefficients

void zstrip(ZV& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

mpz_class zcontent(const ZV& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_scalar(ZV& v, const mpz_class& d) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Clear denominators and divide out the content.
ZV to_primitive(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den().get_mpz_t());
    ZV v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(mpz_class(c.rat() * l));
    mpz_class g = zcontent(v);
    if (g > 1) zdiv_scalar(v, g);
    return v;
}

// Pseudo-remainder of a by b (b nonzero), in place of a.
void zprem(ZV& a, const ZV& b) {
    const mpz_class& lb = b.back();
    long db = static_cast<long>(b.size()) - 1;
    while (!a.empty() && static_cast<long>(a.size()) - 1 >= db) {
        long shift = static_cast<long>(a.size()) - 1 - db;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (long j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        zstrip(a);
    }
}

Poly from_primitive_monic(const ZV& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    mpq_class inv_lead(1, 1);
    mpq_class lead(v.back());
    for (const auto& z : v) {
        mpq_class q(z);
        q /= lead;
        c.emplace_back(q);
    }
    return Poly(std::move(c));
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_rational() && b.is_rational()) {
        ZV x = to_primitive(a), y = to_primitive(b);
        if (x.size() < y.size()) std::swap(x, y);
        while (!y.empty()) {
            zprem(x, y);
            if (!x.empty()) {
                mpz_class g = zcontent(x);
                if (g > 1) zdiv_scalar(x, g);
            }
            std::swap(x, y);
        }
        return from_primitive_monic(x);
    }
    // Quadratic-extension coefficients only show up on small polynomials;
    // plain monic Euclid is fine there.
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    if (!p.is_rational()) return p.monic();
    ZV v = to_primitive(p);
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(mpq_class(z));
    return Poly(std::move(c));
}

// ---------------------------------------------------------------------------
// Bareiss determinants
// ---------------------------------------------------------------------------

namespace {

// Integer-polynomial Bareiss core; entries ascending mpz coefficient vectors.
ZV zmul(const ZV& x, const ZV& y) {
    if (x.empty() || y.empty()) return {};
    ZV c(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
    return c;
}

void zsub(ZV& x, const ZV& y) {
    if (x.size() < y.size()) x.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    zstrip(x);
}

// Exact quotient x / d over Z[z]; aborts if the division is inexact.
ZV zexact_div(ZV x, const ZV& d) {
    if (d.empty()) throw std::domain_error("bareiss: division by zero polynomial");
    ZV q;
    long dd = static_cast<long>(d.size()) - 1;
    const mpz_class& ld = d.back();
    long qd = static_cast<long>(x.size()) - 1 - dd;
    if (x.empty()) return {};
    if (qd < 0) throw std::domain_error("bareiss: inexact division");
    q.assign(qd + 1, mpz_class(0));
    while (!x.empty() && static_cast<long>(x.size()) - 1 >= dd) {
        long shift = static_cast<long>(x.size()) - 1 - dd;
        mpz_class t;
        mpz_class r;
        mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), x.back().get_mpz_t(), ld.get_mpz_t());
        if (r != 0) throw std::domain_error("bareiss: inexact division");
        q[shift] = t;
        for (long j = 0; j <= dd; ++j) x[shift + j] -= t * d[j];
        zstrip(x);
    }
    if (!x.empty()) throw std::domain_error("bareiss: inexact division");
    return q;
}

Poly zv_to_poly(const ZV& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(mpq_class(z));
    return Poly(std::move(c));
}

Poly bareiss_int(std::vector<std::vector<ZV>>& m, const mpq_class& prefactor) {
    const size_t n = m.size();
    int sign = 1;
    ZV prev = {mpz_class(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            size_t s = k + 1;
            while (s < n && m[s][k].empty()) ++s;
            if (s == n) return Poly();
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                ZV t = zmul(m[i][j], m[k][k]);
                zsub(t, zmul(m[i][k], m[k][j]));
                m[i][j] = zexact_div(std::move(t), prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    Poly det = zv_to_poly(m[n - 1][n - 1]);
    Scalar pf{mpq_class(sign * prefactor)};
    return pf * det;
}

}  // namespace

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("bareiss: matrix not square");
    if (n == 0) return Poly(Scalar(1));

    bool rational = true;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_rational()) rational = false;

    if (rational) {
        // Scale each row to integer coefficients; the determinant divides out
        // the row multipliers afterwards. Integer Bareiss is much faster than
        // running the elimination over mpq.
        std::vector<std::vector<ZV>> zm(n, std::vector<ZV>(n));
        mpq_class prefactor(1);
        for (size_t i = 0; i < n; ++i) {
            mpz_class l = 1;
            for (const auto& e : m[i])
                for (const auto& c : e.coeffs())
                    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den().get_mpz_t());
            prefactor /= l;
            for (size_t j = 0; j < n; ++j) {
                ZV v;
                v.reserve(m[i][j].coeffs().size());
                for (const auto& c : m[i][j].coeffs()) v.push_back(mpz_class(c.rat() * l));
                zm[i][j] = std::move(v);
            }
        }
        return bareiss_int(zm, prefactor);
    }

    int sign = 1;
    Poly prev(Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) ++s;
            if (s == n) return Poly();
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return Scalar(sign) * m[n - 1][n - 1];
}

Poly wronskian(const std::vector<Poly>& ps) {
    const size_t n = ps.size();
    if (n == 0) return Poly(Scalar(1));
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t j = 0; j < n; ++j) {
        m[0][j] = ps[j];
        for (size_t i = 1; i < n; ++i) m[i][j] = m[i - 1][j].derivative();
    }
    return bareiss_determinant(std::move(m));
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Scalar(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Scalar inv = den_.leading().inverse();
    num_ = inv * num_;
    den_ = inv * den_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose_linear(const Scalar& gamma) const {
    return RatFunc(num_.compose_linear(gamma), den_.compose_linear(gamma));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc log_derivative(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("log_derivative: zero polynomial");
    return RatFunc(p.derivative(), p);
}

}  // namespace pmaya
