#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pmaya/chain.hpp"
#include "pmaya/hermite.hpp"

using namespace pmaya;

namespace {

std::mt19937 rng(555111);

std::vector<Scalar> scalars(std::vector<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.push_back(Scalar(x));
    return out;
}

std::vector<long> random_perm(long p) {
    std::vector<long> perm;
    for (long i = 0; i < p; ++i) perm.push_back(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

MayaDiagram random_diagram(long max_defects, long max_site) {
    std::uniform_int_distribution<long> count(0, max_defects), site(0, max_site);
    std::vector<long> s, t;
    long n = count(rng);
    for (long i = 0; i < n; ++i) {
        long v = site(rng);
        auto& dst = (rng() % 2) ? s : t;
        if (std::find(dst.begin(), dst.end(), v) == dst.end()) dst.push_back(v);
    }
    return MayaDiagram::from_frobenius(s, t);
}

}  // namespace

TEST_CASE("cycle spec validation") {
    CycleSpec good{{1, {{0, 3, 8}}}, {2, 1, 0}};
    good.validate();
    CHECK_THROWS_AS((CycleSpec{{1, {{0, 3, 8}}}, {0, 1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CycleSpec{{1, {{0, 3, 8}}}, {0, 0, 1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CycleSpec{{1, {{0, 3, 8}}}, {0, 1, 3}}.validate()), std::invalid_argument);
}

TEST_CASE("three-cycle with a genus-one class") {
    ChainSolution sol = build_cycle({{1, {{0, 3, 8}}}, {2, 1, 0}});
    CHECK(sol.k == 1);
    CHECK(sol.delta == Scalar(2));
    CHECK(sol.flip_sites == std::vector<long>({8, 3, 0}));
    CHECK(sol.as == scalars({10, 6, -18}));
    CHECK(sol.sigmas == std::vector<int>({-1, 1, -1}));
    CHECK(sol.diagrams[3] == sol.diagrams[0].shifted(1));
    CHECK(proportional(sol.taus[3].poly, sol.taus[0].poly));
    CHECK(verify_chain(sol).all_ok());
}

TEST_CASE("three-cycle with three classes") {
    ChainSolution sol = build_cycle({{3, {{0}, {3}, {2}}}, {2, 0, 1}});
    CHECK(sol.delta == Scalar(6));
    CHECK(sol.flip_sites == std::vector<long>({8, 0, 10}));
    CHECK(sol.as == scalars({16, -20, -2}));
    CHECK(sol.sigmas == std::vector<int>({-1, -1, -1}));
    CHECK(verify_chain(sol).all_ok());
}

TEST_CASE("five-cycle gold data") {
    ChainSolution sol = build_cycle({{1, {{0, 2, 5, 6, 7}}}, {3, 4, 2, 1, 0}});
    CHECK(sol.flip_sites == std::vector<long>({6, 7, 5, 2, 0}));
    CHECK(sol.as == scalars({-2, 4, 6, 4, -14}));
    CHECK(sol.sigmas == std::vector<int>({1, -1, -1, 1, -1}));
    CHECK(verify_chain(sol).all_ok());
}

TEST_CASE("degenerate five-cycle (repeated site)") {
    ChainSolution sol = build_cycle({{1, {{0, 1, 2, 4, 4}}}, {4, 2, 1, 3, 0}});
    CHECK(sol.flip_sites == std::vector<long>({4, 2, 1, 4, 0}));
    CHECK(sol.as == scalars({4, 2, -6, 8, -10}));
    ChainReport rep = verify_chain(sol);
    CHECK(rep.all_ok());
}

TEST_CASE("parameter sum and first integral for random specs") {
    for (auto [p, k] : std::vector<std::pair<long, long>>{{3, 1}, {4, 2}, {5, 3}}) {
        auto kbs = enumerate_cyclic(p, k, 3);
        for (int trial = 0; trial < 3; ++trial) {
            const auto& kb = kbs[rng() % kbs.size()];
            ChainSolution sol = build_cycle({kb, random_perm(p)});
            Scalar sum;
            for (const auto& a : sol.as) sum += a;
            CHECK(sum == Scalar(-2 * k));
            ChainReport rep = verify_chain(sol);
            CHECK(rep.parameter_sum_ok);
            CHECK(rep.first_integral_ok);
            CHECK(rep.all_ok());
        }
    }
}

TEST_CASE("tampering breaks exactly the touched equation") {
    ChainSolution sol = build_cycle({{1, {{0, 3, 8}}}, {2, 1, 0}});
    sol.as[0] += Scalar(1);
    ChainReport rep = verify_chain(sol);
    CHECK_FALSE(rep.equation_ok[0]);
    CHECK(rep.equation_ok[1]);
    CHECK(rep.equation_ok[2]);
    CHECK_FALSE(rep.parameter_sum_ok);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("bilinear relation at the vacuum is the Hermite equation") {
    for (long n = 0; n <= 6; ++n) {
        MayaDiagram m = MayaDiagram::from_frobenius({}, {});
        auto [eps, holds] = verify_bilinear(m, n);
        CHECK(eps == 2 * n);
        CHECK(holds);
    }
}

TEST_CASE("bilinear relation degree bookkeeping") {
    MayaDiagram m = MayaDiagram::from_frobenius({}, {3, 4, 5, 6, 7});
    auto [eps, holds] = verify_bilinear(m, 8);
    CHECK(eps == 6);  // deg 15 -> deg 18
    CHECK(holds);
    CHECK_THROWS_AS(verify_bilinear(m, 5), std::invalid_argument);
}

TEST_CASE("bilinear relation on random diagrams") {
    for (int trial = 0; trial < 40; ++trial) {
        MayaDiagram m = random_diagram(6, 8);
        std::uniform_int_distribution<long> site(-4, 8);
        long s = site(rng);
        if (m.contains(s)) continue;
        auto [eps, holds] = verify_bilinear(m, s);
        (void)eps;
        CHECK(holds);
    }
}

TEST_CASE("reversal symmetry") {
    ChainSolution sol = build_cycle({{1, {{0, 3, 8}}}, {2, 1, 0}});
    ChainSolution rev = apply_symmetry(sol, ChainSymmetry::reversal);
    CHECK(rev.delta == -sol.delta);
    CHECK(verify_chain(rev).all_ok());
    // the reversed parameters are a signed permutation of the originals
    std::vector<Scalar> want = sol.as, got = rev.as;
    for (auto& a : got) a = -a;
    std::sort(want.begin(), want.end(),
              [](const Scalar& x, const Scalar& y) { return x.rat() < y.rat(); });
    std::sort(got.begin(), got.end(),
              [](const Scalar& x, const Scalar& y) { return x.rat() < y.rat(); });
    CHECK(want == got);
}

TEST_CASE("cyclic symmetry has order p") {
    ChainSolution sol = build_cycle({{3, {{0}, {3}, {2}}}, {2, 0, 1}});
    ChainSolution rot = sol;
    for (long i = 0; i < sol.p(); ++i) {
        rot = apply_symmetry(rot, ChainSymmetry::cyclic);
        CHECK(verify_chain(rot).all_ok());
    }
    CHECK(rot.ws == sol.ws);
    CHECK(rot.as == sol.as);
    // one application rotates the parameter list
    ChainSolution once = apply_symmetry(sol, ChainSymmetry::cyclic);
    CHECK(once.as[0] == sol.as[1]);
}

TEST_CASE("scaling symmetry") {
    ChainSolution sol = build_cycle({{1, {{0, 3, 8}}}, {2, 1, 0}});
    CHECK(apply_scaling(sol, Scalar(1)).ws == sol.ws);
    ChainSolution doubled = apply_scaling(sol, Scalar(2));
    CHECK(doubled.delta == Scalar(8));
    CHECK(doubled.as[0] == Scalar(4) * sol.as[0]);
    CHECK(verify_chain(doubled).all_ok());
    // an irrational scale factor works over the extension field
    ChainSolution surd = apply_scaling(sol, Scalar::surd(1, 2));
    CHECK(surd.delta == Scalar(4));
    CHECK(verify_chain(surd).all_ok());
    CHECK_THROWS_AS(apply_scaling(sol, Scalar(0)), std::invalid_argument);
}
