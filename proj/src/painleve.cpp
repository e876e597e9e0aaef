#include "pmaya/painleve.hpp"

namespace pmaya {

NYSolution to_noumi_yamada(const ChainSolution& sol) {
    const long p = sol.p();
    if (p < 3) throw std::invalid_argument("to_noumi_yamada: need p >= 3");
    if (!(sol.delta.is_integer() && sol.delta.rat() > 0))
        throw std::invalid_argument("to_noumi_yamada: delta must be a positive integer");
    NYSolution ny;
    ny.p = p;
    ny.delta = sol.delta;
    const bool have_taus = static_cast<long>(sol.taus.size()) == p + 1 &&
                           static_cast<long>(sol.sigmas.size()) == p;
    for (long i = 0; i < p; ++i) {
        long j = (i + 1) % p;
        if (have_taus) {
            // w_i + w_{i+1} telescopes to (sigma_i + sigma_{i+1}) z
            // + (log tau_{i+2}/tau_i)', which keeps the rational-function
            // reduction far smaller than adding the two w's directly.
            const Poly& ta = sol.taus[i].poly;
            const Poly& tb = sol.taus[i + 2 <= p ? i + 2 : 1].poly;
            Poly den = ta * tb;
            Poly num = Poly::monomial(Scalar(sol.sigmas[i] + sol.sigmas[j]), 1) * den +
                       tb.derivative() * ta - ta.derivative() * tb;
            ny.Fs.push_back(RatFunc(-num, den));
        } else {
            ny.Fs.push_back(-(sol.ws[i] + sol.ws[j]));
        }
        ny.alphas.push_back(-sol.as[i] / sol.delta);
    }
    if (have_taus)
        for (long i = 0; i < p; ++i) ny.taus.push_back(sol.taus[i].poly);
    return ny;
}

bool NYReport::all_ok() const {
    if (!normalization_ok || !parameter_sum_ok) return false;
    for (bool b : equation_ok)
        if (!b) return false;
    return !equation_ok.empty();
}

NYReport verify_ny(const NYSolution& ny) {
    const long p = ny.p;
    if (p < 3 || static_cast<long>(ny.Fs.size()) != p ||
        static_cast<long>(ny.alphas.size()) != p)
        throw std::invalid_argument("verify_ny: inconsistent solution data");
    NYReport rep;

    Scalar asum;
    for (const auto& al : ny.alphas) asum += al;
    rep.parameter_sum_ok = (asum == Scalar(1));

    // The denominators share almost all their factors, so residuals are
    // cleared by powers of their lcm L, not of the product — the degree
    // difference dominates the verification cost.
    std::vector<Poly> n(p), d(p);
    for (long i = 0; i < p; ++i) {
        n[i] = ny.Fs[i].num();
        d[i] = ny.Fs[i].den();
    }
    // Common multiple of the denominators: the tau product when the taus are
    // carried along (den(F_i) | tau_i tau_{i+2}, no gcd needed), else the lcm.
    Poly L(Scalar(1));
    std::vector<Poly> E(p);  // E_i = L / d_i
    if (static_cast<long>(ny.taus.size()) == p) {
        // Primitive-scaled taus keep the residual arithmetic over
        // (near-)integer coefficients; the residuals are homogeneous in L,
        // so the scaling is harmless.
        std::vector<Poly> t(p);
        for (long i = 0; i < p; ++i) t[i] = primitive_part(ny.taus[i]);
        for (long i = 0; i < p; ++i) L *= t[i];
        for (long i = 0; i < p; ++i) {
            long b = (i + 2) % p;
            Poly rest(Scalar(1));  // product of the taus outside {i, i+2}
            for (long j = 0; j < p; ++j)
                if (j != i && j != b) rest *= t[j];
            E[i] = rest * (t[i] * t[b]).exact_div(d[i]);
        }
    } else {
        for (long i = 0; i < p; ++i) L = Poly::lcm(L, d[i]);
        L = primitive_part(L);
        for (long i = 0; i < p; ++i) E[i] = L.exact_div(d[i]);
    }
    const Poly L1 = L.derivative();
    const Poly LL = L * L;
    std::vector<Poly> g(p);  // g_i = F_i L
    for (long i = 0; i < p; ++i) g[i] = n[i] * E[i];

    const Scalar delta = ny.delta;
    auto a_of = [&](long i) { return -delta * ny.alphas[((i % p) + p) % p]; };
    auto idx = [&](long i) { return ((i % p) + p) % p; };

    if (p % 2 == 1) {
        // even system: F_i' - sum_{j=1}^{p-1} (-1)^{j+1} F_i F_{i+j} + a_i = 0,
        // cleared by L^2 (note F_i' L^2 = g_i' L - g_i L'). The cross terms
        // factor as g_i * sum_j (+/-) g_{i+j}, one product per equation.
        for (long i = 0; i < p; ++i) {
            Poly h;
            for (long j = 1; j < p; ++j) {
                const Poly& gj = g[idx(i + j)];
                h += (j % 2 == 1) ? -gj : gj;
            }
            Poly res = g[i].derivative() * L - g[i] * L1 + g[i] * h + a_of(i) * LL;
            rep.equation_ok.push_back(res.is_zero());
        }
        // normalization: sum F_i = delta z, cleared by L
        Poly s;
        for (long i = 0; i < p; ++i) s += g[i];
        rep.normalization_ok = (s - Poly::monomial(delta, 1) * L).is_zero();
    } else {
        // odd system (p = 2n), cleared by delta and L^3 (triple products):
        //   delta z F_i' - F_i (delta + 2 sum_k a_{i+2k})
        //   - 2 F_i sum_{j=1}^n sum_{k=1}^{n-1} sgn(2k+1-2j) F_{2j+i-1} F_{2k+i}
        //   + 2 a_i sum_{k=1}^{n-1} F_{i+2k} = 0
        const long nn = p / 2;
        // pair products F_a F_b L^2, computed on demand and shared
        std::vector<std::vector<Poly>> G(p, std::vector<Poly>(p));
        std::vector<std::vector<bool>> haveG(p, std::vector<bool>(p, false));
        auto pair_prod = [&](long a, long b) -> const Poly& {
            if (!haveG[a][b]) {
                G[a][b] = G[b][a] = g[a] * g[b];
                haveG[a][b] = haveG[b][a] = true;
            }
            return G[a][b];
        };
        for (long i = 0; i < p; ++i) {
            Scalar bracket = delta;
            for (long k = 1; k <= nn - 1; ++k) bracket += Scalar(2) * a_of(i + 2 * k);
            // The triple terms factor as g_i * K with K a signed sum of pair
            // products; summing before multiplying saves the large products.
            Poly K, sb;
            for (long j = 1; j <= nn; ++j) {
                for (long k = 1; k <= nn - 1; ++k) {
                    long sg = (2 * k + 1 - 2 * j > 0) ? 1 : ((2 * k + 1 - 2 * j < 0) ? -1 : 0);
                    if (sg == 0) continue;
                    K += Scalar(-2 * sg) * pair_prod(idx(2 * j + i - 1), idx(2 * k + i));
                }
            }
            for (long k = 1; k <= nn - 1; ++k) sb += g[idx(i + 2 * k)];
            Poly res = Poly::monomial(delta, 1) * ((g[i].derivative() * L - g[i] * L1) * L) -
                       bracket * (g[i] * LL) + g[i] * K +
                       Scalar(2) * a_of(i) * (sb * LL);
            rep.equation_ok.push_back(res.is_zero());
        }
        // normalizations: sum of even-indexed F = sum of odd-indexed F = (delta/2) z
        Poly se, so;
        for (long i = 0; i < p; ++i) {
            if (i % 2 == 0)
                se += g[i];
            else
                so += g[i];
        }
        Poly half = Poly::monomial(delta / Scalar(2), 1) * L;
        rep.normalization_ok = (se - half).is_zero() && (so - half).is_zero();
    }
    return rep;
}

std::vector<RatFunc> ny_x_forms(const NYSolution& ny) {
    long delta = mpz_get_si(ny.delta.rat().get_num().get_mpz_t());
    Scalar g = Scalar::inv_sqrt(delta);  // 1/sqrt(delta)
    std::vector<RatFunc> fs;
    for (const auto& F : ny.Fs) fs.push_back(RatFunc(Poly(g)) * F.compose_linear(g));
    return fs;
}

P4Solution to_p4(const NYSolution& ny) {
    if (ny.p != 3) throw std::invalid_argument("to_p4: need a 3-cycle solution");
    // y(t) = sqrt(2) f_0(x) at x = -sqrt(2) t, i.e. y(t) = c F_0(-c t) with
    // c = sqrt(2/delta).
    long delta = mpz_get_si(ny.delta.rat().get_num().get_mpz_t());
    Scalar c = Scalar(2) * Scalar::inv_sqrt(2 * delta);  // sqrt(2/delta)
    P4Solution out;
    out.y = RatFunc(Poly(c)) * ny.Fs[0].compose_linear(-c);
    out.a = ny.alphas[2] - ny.alphas[1];
    out.b = Scalar(-2) * ny.alphas[0] * ny.alphas[0];
    return out;
}

bool verify_p4(const P4Solution& sol) {
    if (sol.y.is_zero()) throw std::domain_error("verify_p4: y is identically zero");
    const RatFunc& y = sol.y;
    RatFunc t(Poly::variable());
    RatFunc y1 = y.derivative(), y2 = y1.derivative();
    // residual multiplied by 2y
    RatFunc res = RatFunc(2) * y * y2 - y1 * y1 - RatFunc(3) * y * y * y * y -
                  RatFunc(8) * t * y * y * y -
                  RatFunc(4) * (t * t - RatFunc(Poly(sol.a))) * y * y - RatFunc(Poly(sol.b * Scalar(2)));
    return res.is_zero();
}

P5Solution to_p5(const NYSolution& ny) {
    if (ny.p != 4) throw std::invalid_argument("to_p5: need a 4-cycle solution");
    RatFunc r = -(ny.Fs[2] / ny.Fs[0]);  // even function of z
    const Poly& nu = r.num();
    const Poly& de = r.den();
    Poly nt, dt;
    if (nu.is_even() && de.is_even()) {
        nt = nu.even_decimation();
        dt = de.even_decimation();
    } else if (nu.is_odd() && de.is_odd()) {
        nt = nu.odd_decimation();
        dt = de.odd_decimation();
    } else {
        throw std::domain_error("to_p5: -f_2/f_0 is not a function of t = z^2");
    }
    P5Solution out;
    out.y = RatFunc(nt, dt);  // y as a function of t = z^2 = x^2/delta
    out.a = ny.alphas[0] * ny.alphas[0] / Scalar(2);
    out.b = -(ny.alphas[2] * ny.alphas[2]) / Scalar(2);
    out.c = (ny.delta / Scalar(4)) * (ny.alphas[3] - ny.alphas[1]);
    out.d = -(ny.delta * ny.delta) / Scalar(32);
    return out;
}

bool verify_p5(const P5Solution& sol) {
    const RatFunc& y = sol.y;
    if (y.is_zero()) throw std::domain_error("verify_p5: y is identically zero");
    if (y == RatFunc(1)) throw std::domain_error("verify_p5: y is identically one");
    RatFunc t(Poly::variable());
    RatFunc one(1);
    RatFunc y1 = y.derivative(), y2 = y1.derivative();
    RatFunc ym1 = y - one;
    RatFunc res = y2 - y1 * y1 * (one / (RatFunc(2) * y) + one / ym1) + y1 / t -
                  (ym1 * ym1 / (t * t)) * (RatFunc(Poly(sol.a)) * y + RatFunc(Poly(sol.b)) / y) -
                  RatFunc(Poly(sol.c)) * y / t -
                  RatFunc(Poly(sol.d)) * y * (y + one) / ym1;
    return res.is_zero();
}

}  // namespace pmaya
