#pragma once

#include "pmaya/maya.hpp"
#include "pmaya/poly.hpp"

namespace pmaya {

// Tau polynomial attached to a Maya diagram. `poly` is translation
// invariant (the normalized pseudo-Wronskian), so two diagrams in the same
// translation class carry the identical polynomial.
struct TauFunction {
    MayaDiagram diagram;
    Poly poly;
    // translate actually used for the determinant (poly was computed from
    // diagram + translation)
    long translation = 0;

    long degree() const { return poly.degree(); }
};

// Wronskian of Hermite polynomials for a diagram in standard form:
// Wr[H_{t_q}, ..., H_{t_1}] over the positive defects in ascending order.
TauFunction tau_standard(const MayaDiagram& m);

// deg tau = sum(t_i) - q(q-1)/2 for a standard-form diagram with positive
// defects t_1 > ... > t_q.
long tau_expected_degree(const MayaDiagram& standard);

// The determinant of eq-style mixed Casoratian/Wronskian type: rows are
// conjugate Hermite runs for the s-indices (descending) followed by Hermite
// derivative rows for the t-indices (ascending values at the top of that
// group). s and t are the Frobenius data of a diagram: duplicates rejected.
Poly pseudo_wronskian(std::vector<long> s, std::vector<long> t);

// Normalized pseudo-Wronskian: (-1)^{rq} pW / (prod_{i<j}(2s_j-2s_i) *
// prod_{i<j}(2t_i-2t_j)). Invariant under translation of the diagram.
Poly tau_normalized(const MayaDiagram& m);

// Workhorse: tau polynomial of an arbitrary diagram, computed from the
// translate with the fewest defects (smallest determinant) and normalized,
// so equal diagrams-up-to-translation give equal polynomials. Cached.
TauFunction tau_of_diagram(const MayaDiagram& m);

// Partitions are non-increasing lists of positive integers.
MayaDiagram diagram_of_partition(const std::vector<long>& lambda);
std::vector<long> partition_of_diagram(const MayaDiagram& standard);
std::vector<std::vector<long>> partitions_up_to(long n);  // all |lambda| <= n

// Independent determinantal oracle: tau_standard(M_lambda).poly via the
// Jacobi-Trudi determinant of scaled Hermite polynomials,
//   tau_lambda = 2^{n(n-1)/2} prod(t_i!) * det[ B_{lambda_i + j - i} ],
// with B_n = H_n / n! (zero for n < 0) and n = length(lambda).
Poly schur_tau(const std::vector<long>& lambda);

// p and q agree up to a nonzero constant factor.
bool proportional(const Poly& p, const Poly& q);

}  // namespace pmaya
