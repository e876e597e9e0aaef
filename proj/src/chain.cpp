#include "pmaya/chain.hpp"

#include <algorithm>

namespace pmaya {

void CycleSpec::validate() const {
    kblocks.validate();
    const long p = kblocks.p();
    if (static_cast<long>(perm.size()) != p)
        throw std::invalid_argument("cycle spec: permutation length must equal p");
    std::vector<bool> seen(p, false);
    for (long v : perm) {
        if (v < 0 || v >= p || seen[v])
            throw std::invalid_argument("cycle spec: not a permutation of 0..p-1");
        seen[v] = true;
    }
}

ChainSolution build_cycle(const CycleSpec& spec) {
    spec.validate();
    FlipSequence mu = canonical_flip_sequence(spec.kblocks);
    const long p = spec.kblocks.p();
    const long k = spec.kblocks.k;

    ChainSolution sol;
    sol.k = k;
    sol.delta = Scalar(2 * k);
    sol.perm = spec.perm;
    for (long i = 0; i < p; ++i) sol.flip_sites.push_back(mu.mus[spec.perm[i]]);

    sol.diagrams.push_back(diagram_of(spec.kblocks));
    for (long i = 0; i < p; ++i) {
        auto [next, sigma] = sol.diagrams.back().flip(sol.flip_sites[i]);
        sol.sigmas.push_back(sigma);
        sol.diagrams.push_back(std::move(next));
    }
    if (sol.diagrams.back() != sol.diagrams.front().shifted(k))
        throw std::logic_error("build_cycle: flip sequence did not close onto M + k");

    for (long i = 0; i < p; ++i) {
        long next_site = (i + 1 < p) ? sol.flip_sites[i + 1] : sol.flip_sites[0] + k;
        sol.as.push_back(Scalar(2 * (sol.flip_sites[i] - next_site)));
    }

    for (const auto& d : sol.diagrams) sol.taus.push_back(tau_of_diagram(d));
    // tau is translation invariant, so the w-sequence closes exactly
    for (long i = 0; i < p; ++i) {
        RatFunc w = RatFunc(Poly::monomial(Scalar(sol.sigmas[i]), 1)) +
                    log_derivative(sol.taus[i + 1].poly) - log_derivative(sol.taus[i].poly);
        sol.ws.push_back(std::move(w));
    }
    return sol;
}

bool ChainReport::all_ok() const {
    if (!parameter_sum_ok || !first_integral_ok || !alternating_ok) return false;
    for (bool b : equation_ok)
        if (!b) return false;
    return !equation_ok.empty();
}

ChainReport verify_chain(const ChainSolution& sol) {
    const long p = sol.p();
    if (p < 1 || static_cast<long>(sol.as.size()) != p)
        throw std::invalid_argument("verify_chain: inconsistent solution data");
    ChainReport rep;

    // Work with raw numerator/denominator pairs; every residual is cleared of
    // denominators so that only polynomial arithmetic is involved. Adjacent
    // denominators share large factors, so clear by their lcm, not the
    // product — the degree difference dominates the cost.
    std::vector<Poly> n(p), d(p);
    for (long i = 0; i < p; ++i) {
        n[i] = sol.ws[i].num();
        d[i] = sol.ws[i].den();
    }

    // Common multiple of the denominators. When the tau polynomials are
    // present, den(w_i) divides tau_i tau_{i+1}, so the product of the taus
    // is a common multiple available without any gcd computation; otherwise
    // fall back to the lcm.
    Poly L;
    std::vector<Poly> E(p);  // E_i = L / d_i
    if (static_cast<long>(sol.taus.size()) == p + 1) {
        // Primitive-scaled taus keep every residual term over (near-)integer
        // coefficients; the residuals are homogeneous in L, so the scaling is
        // harmless. Fractions with huge denominators make every later
        // addition pay a big-integer gcd.
        std::vector<Poly> t(p);
        for (long i = 0; i < p; ++i) t[i] = primitive_part(sol.taus[i].poly);
        L = Poly(Scalar(1));
        for (long i = 0; i < p; ++i) L *= t[i];
        for (long i = 0; i < p; ++i) {
            Poly rest(Scalar(1));  // product of the taus outside {i, i+1}
            for (long j = 0; j < p; ++j)
                if (j != i && j != (i + 1) % p) rest *= t[j];
            E[i] = rest * (t[i] * t[(i + 1) % p]).exact_div(d[i]);
        }
    } else {
        L = Poly(Scalar(1));
        for (long i = 0; i < p; ++i) L = Poly::lcm(L, d[i]);
        L = primitive_part(L);
        for (long i = 0; i < p; ++i) E[i] = L.exact_div(d[i]);
    }
    const Poly L1 = L.derivative();
    const Poly LL = L * L;
    std::vector<Poly> g(p), g2(p);  // g_i = w_i L and its square
    for (long i = 0; i < p; ++i) {
        g[i] = n[i] * E[i];
        g2[i] = g[i] * g[i];
    }

    for (long i = 0; i < p; ++i) {
        long j = (i + 1) % p;
        // residual * L^2
        Poly S = g[i] + g[j];
        Poly res = S.derivative() * L - S * L1 + g2[j] - g2[i] - sol.as[i] * LL;
        rep.equation_ok.push_back(res.is_zero());
    }

    Scalar asum;
    for (const auto& a : sol.as) asum += a;
    rep.parameter_sum_ok = (asum + sol.delta).is_zero();

    // sum w_i + (delta/2) z = 0, cleared by L
    Poly wsum;
    for (long i = 0; i < p; ++i) wsum += g[i];
    Scalar half_delta = sol.delta / Scalar(2);
    rep.first_integral_ok = (wsum + Poly::monomial(half_delta, 1) * L).is_zero();

    if (p % 2 == 0) {
        // alternating combination of the chain equations:
        //   2 sum (-1)^{i+1} w_i^2 = sum (-1)^i a_i   (0-based), cleared by L^2
        Poly lhs;
        Scalar rhs;
        for (long i = 0; i < p; ++i) {
            lhs += (i % 2 == 0) ? -(Scalar(2) * g2[i]) : Scalar(2) * g2[i];
            rhs += (i % 2 == 0) ? sol.as[i] : -sol.as[i];
        }
        rep.alternating_ok = (lhs - rhs * LL).is_zero();
    }
    return rep;
}

std::pair<long, bool> verify_bilinear(const MayaDiagram& m1, long site) {
    if (m1.contains(site))
        throw std::invalid_argument("verify_bilinear: site is already a member");
    MayaDiagram m2 = m1.flip(site).first;
    Poly f = tau_of_diagram(m1).poly;
    Poly g = tau_of_diagram(m2).poly;
    long eps = 2 * (g.degree() - f.degree());
    // D g.f = g'f - f'g: the ordering is pinned down by the base case
    // (f = 1, g = H_m), where the relation must reduce to the Hermite
    // equation H'' - 2z H' + 2m H = 0.
    Poly d1 = g.derivative() * f - g * f.derivative();
    Poly d2 = f.derivative(2) * g - Scalar(2) * (f.derivative() * g.derivative()) +
              f * g.derivative(2);
    Poly res = d2 - Scalar(2) * (Poly::variable() * d1) + Scalar(eps) * (f * g);
    return {eps, res.is_zero()};
}

ChainSolution apply_symmetry(const ChainSolution& sol, ChainSymmetry which) {
    const long p = sol.p();
    ChainSolution out;
    if (which == ChainSymmetry::reversal) {
        out.k = -sol.k;
        out.delta = -sol.delta;
        for (long i = 0; i < p; ++i) {
            out.ws.push_back(-sol.ws[p - 1 - i]);
            out.as.push_back(-sol.as[((p - 2 - i) % p + p) % p]);
            if (!sol.sigmas.empty()) out.sigmas.push_back(-sol.sigmas[p - 1 - i]);
            if (!sol.flip_sites.empty()) out.flip_sites.push_back(sol.flip_sites[p - 1 - i]);
        }
        for (long i = 0; i <= p; ++i) {
            if (static_cast<long>(sol.diagrams.size()) == p + 1)
                out.diagrams.push_back(sol.diagrams[p - i]);
            if (static_cast<long>(sol.taus.size()) == p + 1) out.taus.push_back(sol.taus[p - i]);
        }
    } else {  // cyclic
        out.k = sol.k;
        out.delta = sol.delta;
        for (long i = 0; i < p; ++i) {
            long j = (i + 1) % p;
            out.ws.push_back(sol.ws[j]);
            out.as.push_back(sol.as[j]);
            if (!sol.sigmas.empty()) out.sigmas.push_back(sol.sigmas[j]);
            if (!sol.flip_sites.empty())
                out.flip_sites.push_back(i + 1 < p ? sol.flip_sites[i + 1]
                                                   : sol.flip_sites[0] + sol.k);
        }
        if (static_cast<long>(sol.diagrams.size()) == p + 1) {
            for (long i = 1; i <= p; ++i) out.diagrams.push_back(sol.diagrams[i]);
            out.diagrams.push_back(sol.diagrams[1].shifted(sol.k));
            if (static_cast<long>(sol.taus.size()) == p + 1) {
                for (long i = 1; i <= p; ++i) out.taus.push_back(sol.taus[i]);
                out.taus.push_back(tau_of_diagram(out.diagrams.back()));
            }
        }
    }
    return out;
}

ChainSolution apply_scaling(const ChainSolution& sol, const Scalar& kappa) {
    if (kappa.is_zero()) throw std::invalid_argument("apply_scaling: kappa must be nonzero");
    ChainSolution out;
    out.k = sol.k;
    out.delta = kappa * kappa * sol.delta;
    out.perm = sol.perm;
    out.flip_sites = sol.flip_sites;
    out.sigmas = sol.sigmas;
    out.diagrams = sol.diagrams;
    for (const auto& a : sol.as) out.as.push_back(kappa * kappa * a);
    for (const auto& w : sol.ws)
        out.ws.push_back(RatFunc(Poly(kappa)) * w.compose_linear(kappa));
    return out;
}

}  // namespace pmaya
