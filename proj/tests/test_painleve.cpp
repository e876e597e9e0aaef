#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pmaya/painleve.hpp"

using namespace pmaya;

namespace {

std::mt19937 rng(13579);

Poly P(std::vector<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.push_back(Scalar(c));
    return Poly(v);
}

NYSolution ny_of(const CycleSpec& spec) { return to_noumi_yamada(build_cycle(spec)); }

std::vector<long> random_perm(long p) {
    std::vector<long> perm;
    for (long i = 0; i < p; ++i) perm.push_back(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("conversion to the symmetric system") {
    ChainSolution sol = build_cycle({{1, {{0, 3, 8}}}, {2, 1, 0}});
    NYSolution ny = to_noumi_yamada(sol);
    CHECK(ny.p == 3);
    CHECK(ny.even_system());
    CHECK(ny.alphas == std::vector<Scalar>({Scalar(-5), Scalar(-3), Scalar(9)}));
    Scalar sum;
    for (const auto& a : ny.alphas) sum += a;
    CHECK(sum == Scalar(1));
    for (long i = 0; i < 3; ++i) CHECK(ny.Fs[i] == -(sol.ws[i] + sol.ws[(i + 1) % 3]));
    CHECK(verify_ny(ny).all_ok());
}

TEST_CASE("even system verification across random specs") {
    for (auto [p, k] : std::vector<std::pair<long, long>>{{3, 1}, {3, 3}, {5, 3}}) {
        auto kbs = enumerate_cyclic(p, k, 3);
        for (int trial = 0; trial < 2; ++trial) {
            NYSolution ny = ny_of({kbs[rng() % kbs.size()], random_perm(p)});
            NYReport rep = verify_ny(ny);
            CHECK(rep.all_ok());
        }
    }
}

TEST_CASE("odd system verification across random specs") {
    for (auto [p, k] : std::vector<std::pair<long, long>>{{4, 2}, {4, 4}}) {
        auto kbs = enumerate_cyclic(p, k, 3);
        for (int trial = 0; trial < 2; ++trial) {
            NYSolution ny = ny_of({kbs[rng() % kbs.size()], random_perm(p)});
            CHECK(verify_ny(ny).all_ok());
        }
    }
}

TEST_CASE("tampered parameters fail verification") {
    NYSolution ny = ny_of({{1, {{0, 3, 8}}}, {2, 1, 0}});
    ny.alphas[1] += Scalar(1);
    NYReport rep = verify_ny(ny);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("system-variable forms of the four-cycle example") {
    // f_0(x) = (6x^5-24x^3-24x)/(x^6-6x^4-12x^2-24),
    // f_1(x) = -3/x + (4x^3-8x)/(x^4-4x^2-4)
    NYSolution ny = ny_of({{2, {{0, 3, 4}, {2}}}, {0, 1, 3, 2}});
    auto fs = ny_x_forms(ny);
    CHECK(fs[0] == RatFunc(P({0, -24, 0, -24, 0, 6}), P({-24, 0, -12, 0, -6, 0, 1})));
    RatFunc x(Poly::variable());
    CHECK(fs[1] == RatFunc(P({-3}), P({0, 1})) + RatFunc(P({0, -8, 0, 4}), P({-4, 0, -4, 0, 1})));
    // normalization carries over: sum of even-indexed = sum of odd-indexed = x/2
    CHECK(fs[0] + fs[2] == x * RatFunc(Poly(Scalar::rational(1, 2))));
    CHECK(fs[1] + fs[3] == x * RatFunc(Poly(Scalar::rational(1, 2))));
}

TEST_CASE("system-variable forms of the (1,1,1,1) example") {
    NYSolution ny = ny_of({{4, {{0}, {3}, {1}, {2}}}, {0, 1, 3, 2}});
    auto fs = ny_x_forms(ny);
    // f_1 = -9/x + x/4
    CHECK(fs[1] == RatFunc(P({-36, 0, 1}), P({0, 4})));
}

TEST_CASE("x-forms rationalize over the plain rationals") {
    for (auto [p, k] : std::vector<std::pair<long, long>>{{3, 3}, {4, 2}, {5, 3}}) {
        auto kbs = enumerate_cyclic(p, k, 2);
        NYSolution ny = ny_of({kbs[rng() % kbs.size()], random_perm(p)});
        for (const auto& f : ny_x_forms(ny)) {
            CHECK(f.num().is_rational());
            CHECK(f.den().is_rational());
        }
    }
}

TEST_CASE("P_IV reduction of the two worked examples") {
    NYSolution gh = ny_of({{1, {{0, 3, 8}}}, {2, 1, 0}});
    P4Solution p4 = to_p4(gh);
    CHECK(p4.a == Scalar(12));
    CHECK(p4.b == Scalar(-50));
    CHECK(verify_p4(p4));

    NYSolution ok = ny_of({{3, {{0}, {3}, {2}}}, {2, 0, 1}});
    P4Solution o4 = to_p4(ok);
    CHECK(o4.a == Scalar(-3));
    CHECK(o4.b == Scalar::rational(-128, 9));
    CHECK(verify_p4(o4));
    // the reduction stays rational even though delta = 6 brings in sqrt(3)
    CHECK(o4.y.num().is_rational());
    CHECK(o4.y.den().is_rational());
}

TEST_CASE("P_IV verification rejects wrong parameters") {
    P4Solution p4 = to_p4(ny_of({{1, {{0, 3, 8}}}, {2, 1, 0}}));
    p4.b += Scalar(1);
    CHECK_FALSE(verify_p4(p4));
    p4.b -= Scalar(1);
    p4.a += Scalar(2);
    CHECK_FALSE(verify_p4(p4));
    P4Solution zero;
    zero.y = RatFunc(Poly());
    CHECK_THROWS_AS(verify_p4(zero), std::domain_error);
    CHECK_THROWS_AS(to_p4(ny_of({{2, {{0, 3, 4}, {2}}}, {0, 1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("P_V reduction of the three worked examples") {
    P5Solution a = to_p5(ny_of({{2, {{0, 3, 4}, {2}}}, {0, 1, 3, 2}}));
    CHECK(a.a == Scalar::rational(9, 2));
    CHECK(a.b == Scalar::rational(-9, 8));
    CHECK(a.c == Scalar::rational(-5, 2));
    CHECK(a.d == Scalar::rational(-1, 2));
    CHECK(verify_p5(a));
    // y = 7/6 - t/3 + (4t+2)/(12t^2-12t-3)
    RatFunc t(Poly::variable());
    RatFunc want = RatFunc(Poly(Scalar::rational(7, 6))) - t * RatFunc(Poly(Scalar::rational(1, 3))) +
                   RatFunc(P({2, 4}), P({-3, -12, 12}));
    CHECK(a.y == want);

    P5Solution b = to_p5(ny_of({{2, {{0}, {3, 4, 6}}}, {0, 1, 3, 2}}));
    CHECK(b.a == Scalar::rational(49, 8));
    CHECK(b.b == Scalar(-2));
    CHECK(b.c == Scalar::rational(-13, 2));
    CHECK(b.d == Scalar::rational(-1, 2));
    CHECK(verify_p5(b));

    P5Solution c = to_p5(ny_of({{4, {{0}, {3}, {1}, {2}}}, {0, 1, 3, 2}}));
    CHECK(c.a == Scalar::rational(169, 32));
    CHECK(c.b == Scalar::rational(-25, 32));
    CHECK(c.c == Scalar(0));
    CHECK(c.d == Scalar(-2));
    CHECK(verify_p5(c));
    CHECK(c.y == RatFunc(Poly(Scalar(-1))) - RatFunc(P({72}), P({-117, 0, 4})));
}

TEST_CASE("P_V verification rejects wrong parameters and degenerate y") {
    P5Solution sol = to_p5(ny_of({{2, {{0, 3, 4}, {2}}}, {0, 1, 3, 2}}));
    sol.c += Scalar(1);
    CHECK_FALSE(verify_p5(sol));
    P5Solution zero;
    zero.y = RatFunc(Poly());
    CHECK_THROWS_AS(verify_p5(zero), std::domain_error);
    P5Solution one;
    one.y = RatFunc(Poly(1));
    CHECK_THROWS_AS(verify_p5(one), std::domain_error);
    CHECK_THROWS_AS(to_p5(ny_of({{1, {{0, 3, 8}}}, {0, 1, 2}})), std::invalid_argument);
}

TEST_CASE("P_IV isotropy: transposing the first two flips preserves y") {
    long count = 0;
    for (const auto& kb : enumerate_cyclic(3, 1, 4)) {
        std::vector<long> base = {0, 1, 2}, swapped = {1, 0, 2};
        P4Solution a = to_p4(ny_of({kb, base}));
        P4Solution b = to_p4(ny_of({kb, swapped}));
        CHECK(a.y == b.y);
        CHECK(a.a == b.a);
        CHECK(a.b == b.b);
        ++count;
    }
    CHECK(count >= 5);
}

TEST_CASE("P_V isotropy: the Klein-four permutations give the same y") {
    // transposing flips 0<->1 and/or 2<->3 leaves the scalar solution fixed
    const std::vector<std::vector<long>> klein = {
        {0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
    long count = 0;
    for (const auto& kb : enumerate_cyclic(4, 2, 4)) {
        std::vector<P5Solution> sols;
        bool all_defined = true;
        for (const auto& perm : klein) {
            try {
                sols.push_back(to_p5(ny_of({kb, perm})));
            } catch (const std::domain_error&) {
                all_defined = false;
            }
        }
        if (!all_defined) continue;
        for (size_t i = 1; i < sols.size(); ++i) {
            CHECK(sols[i].y == sols[0].y);
            CHECK(sols[i].a == sols[0].a);
            CHECK(sols[i].b == sols[0].b);
            CHECK(sols[i].c == sols[0].c);
            CHECK(sols[i].d == sols[0].d);
        }
        ++count;
        if (count >= 8) break;
    }
    CHECK(count >= 5);
}
