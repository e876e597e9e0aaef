#pragma once

#include "pmaya/maya.hpp"
#include "pmaya/poly.hpp"
#include "pmaya/tau.hpp"

namespace pmaya {

// A cycle specification: k-block coordinates of a (p,k)-cyclic diagram plus
// the permutation applied to the canonical flip sequence.
struct CycleSpec {
    KBlockCoordinates kblocks;
    std::vector<long> perm;  // permutation of 0..p-1

    void validate() const;
};

// A rational solution of the p-cyclic dressing chain with shift delta = 2k:
//   (w_i + w_{i+1})' + w_{i+1}^2 - w_i^2 = a_i  (indices mod p)
// built from a cycle of Maya diagrams M_0 -> ... -> M_p = M_0 + k.
struct ChainSolution {
    long k = 0;
    Scalar delta;                       // 2k for built cycles; scaling changes it
    std::vector<long> perm;
    std::vector<long> flip_sites;       // nu_i = mu_{perm(i)}, p entries
    std::vector<MayaDiagram> diagrams;  // p+1 diagrams
    std::vector<TauFunction> taus;      // p+1 tau functions (empty after scaling)
    std::vector<int> sigmas;            // sigma_i = +1 iff nu_i was a member of M_i
    std::vector<Scalar> as;             // a_i = 2(nu_i - nu_{i+1}), nu_p = nu_0 + k
    std::vector<RatFunc> ws;            // w_i = sigma_i z + (log tau_{i+1}/tau_i)'

    long p() const { return static_cast<long>(ws.size()); }
};

ChainSolution build_cycle(const CycleSpec& spec);

struct ChainReport {
    std::vector<bool> equation_ok;  // one residual per chain equation
    bool parameter_sum_ok = false;  // sum a_i = -delta
    bool first_integral_ok = false; // sum w_i = -(delta/2) z
    bool alternating_ok = true;     // even p only: alternating square identity

    bool all_ok() const;
};

ChainReport verify_chain(const ChainSolution& sol);

// Hirota bilinear relation between the tau polynomials of M1 and
// M2 = M1 with site added (site must not be a member):
//   D^2 tau2.tau1 - 2z D tau2.tau1 + eps tau1 tau2 = 0,
// eps = 2(deg tau2 - deg tau1). Returns (eps, holds).
std::pair<long, bool> verify_bilinear(const MayaDiagram& m1, long site);

enum class ChainSymmetry { reversal, cyclic };

// Reversal:  w_i -> -w_{p-1-i} (with matching a, sigma, diagram data);
// cyclic:    rotate every list by one step.
ChainSolution apply_symmetry(const ChainSolution& sol, ChainSymmetry which);

// Scaling symmetry w_i(z) -> kappa w_i(kappa z), a_i -> kappa^2 a_i,
// delta -> kappa^2 delta. Tau data does not survive scaling and is dropped.
ChainSolution apply_scaling(const ChainSolution& sol, const Scalar& kappa);

}  // namespace pmaya
