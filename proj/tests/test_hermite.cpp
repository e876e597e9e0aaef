#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pmaya/hermite.hpp"

using namespace pmaya;

namespace {
Poly P(std::vector<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.push_back(Scalar(c));
    return Poly(v);
}
}  // namespace

TEST_CASE("first Hermite polynomials") {
    CHECK(hermite(0) == P({1}));
    CHECK(hermite(1) == P({0, 2}));
    CHECK(hermite(2) == P({-2, 0, 4}));
    CHECK(hermite(3) == P({0, -12, 0, 8}));
    CHECK(hermite(4) == P({12, 0, -48, 0, 16}));
}

TEST_CASE("first conjugate Hermite polynomials") {
    CHECK(conjugate_hermite(0) == P({1}));
    CHECK(conjugate_hermite(1) == P({0, 2}));
    CHECK(conjugate_hermite(2) == P({2, 0, 4}));
    CHECK(conjugate_hermite(3) == P({0, 12, 0, 8}));
}

TEST_CASE("conjugate equals sign-flipped-coefficient Hermite") {
    // h_n(z) = (-i)^n H_n(iz): every coefficient's sign becomes +
    for (long n = 0; n <= 20; ++n) {
        const Poly &h = hermite(n), &c = conjugate_hermite(n);
        REQUIRE(h.degree() == n);
        REQUIRE(c.degree() == n);
        for (long j = 0; j <= n; ++j) {
            mpq_class a = h.coeff(j).rat(), b = c.coeff(j).rat();
            CHECK(abs(a) == abs(b));
            CHECK(b >= 0);  // conjugate Hermite has non-negative coefficients
        }
    }
}

TEST_CASE("differential equations") {
    for (long n = 0; n <= 30; ++n) {
        const Poly& h = hermite(n);
        // H_n'' - 2z H_n' + 2n H_n = 0
        CHECK((h.derivative(2) - Scalar(2) * (Poly::variable() * h.derivative()) +
               Scalar(2 * n) * h)
                  .is_zero());
        const Poly& c = conjugate_hermite(n);
        // h_n'' + 2z h_n' - 2n h_n = 0
        CHECK((c.derivative(2) + Scalar(2) * (Poly::variable() * c.derivative()) -
               Scalar(2 * n) * c)
                  .is_zero());
    }
}

TEST_CASE("derivative and leading coefficient") {
    for (long n = 1; n <= 30; ++n) {
        CHECK(hermite(n).derivative() == Scalar(2 * n) * hermite(n - 1));
        mpz_class lead = 1;
        mpz_mul_2exp(lead.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(hermite(n).leading() == Scalar(mpq_class(lead)));
        CHECK(conjugate_hermite(n).leading() == Scalar(mpq_class(lead)));
    }
}

TEST_CASE("parity") {
    for (long n = 0; n <= 25; ++n) {
        CHECK(hermite(n).is_even() == (n % 2 == 0));
        CHECK(hermite(n).is_odd() == (n % 2 == 1));
    }
}

TEST_CASE("cached references stay valid as the cache grows") {
    const Poly& h2 = hermite(2);
    Poly copy = h2;
    (void)hermite(200);  // force many cache insertions
    CHECK(h2 == copy);
    const Poly& c3 = conjugate_hermite(3);
    Poly ccopy = c3;
    (void)conjugate_hermite(150);
    CHECK(c3 == ccopy);
}

TEST_CASE("negative degree is rejected") {
    CHECK_THROWS_AS((void)hermite(-1), std::domain_error);
    CHECK_THROWS_AS((void)conjugate_hermite(-2), std::domain_error);
}
