#pragma once

#include "pmaya/chain.hpp"

namespace pmaya {

// Rational solution of the A_{p-1} Noumi-Yamada system. The functions are
// stored in chain coordinates: F_i(z) = -(w_i + w_{i+1})(z). The system
// variables are x = sqrt(delta) z and f_i(x) = F_i(z)/sqrt(delta), with
// parameters alpha_i = -a_i/delta.
struct NYSolution {
    long p = 0;
    Scalar delta;              // positive even integer 2k
    std::vector<RatFunc> Fs;   // z-form functions, p entries
    std::vector<Scalar> alphas;
    // Optional: tau_0..tau_{p-1} of the source chain. den(F_i) divides
    // tau_i tau_{i+2}, which lets the verifier build denominator-clearing
    // cofactors without gcd computations. Not required for correctness.
    std::vector<Poly> taus;

    bool even_system() const { return p % 2 == 1; }  // A_{p-1} even for odd p
};

NYSolution to_noumi_yamada(const ChainSolution& sol);

struct NYReport {
    std::vector<bool> equation_ok;
    bool normalization_ok = false;  // sum f_i = x (even) / both half sums = x/2 (odd)
    bool parameter_sum_ok = false;  // sum alpha_i = 1

    bool all_ok() const;
};

// Exact residual check of the Noumi-Yamada equations (even system for odd p,
// odd system for even p), performed in the z-form after clearing
// denominators and the sqrt(delta) change of variables.
NYReport verify_ny(const NYSolution& ny);

// The system-variable functions f_i(x); always rational over Q because every
// F_i is odd.
std::vector<RatFunc> ny_x_forms(const NYSolution& ny);

// Scalar P_IV:  y'' = y'^2/(2y) + (3/2) y^3 + 4t y^2 + 2(t^2 - a) y + b/y,
// obtained from a 3-cycle via y(t) = sqrt(2) f_0(x), x = -sqrt(2) t.
struct P4Solution {
    RatFunc y;  // in t
    Scalar a, b;
};

P4Solution to_p4(const NYSolution& ny);
bool verify_p4(const P4Solution& sol);  // throws on identically zero y

// Scalar P_V:
//   y'' = y'^2 (1/(2y) + 1/(y-1)) - y'/t + (y-1)^2/t^2 (a y + b/y)
//         + c y/t + d y(y+1)/(y-1),
// obtained from a 4-cycle via y = -f_2/f_0, t = x^2/delta (so t = z^2).
struct P5Solution {
    RatFunc y;  // in t
    Scalar a, b, c, d;
};

P5Solution to_p5(const NYSolution& ny);
bool verify_p5(const P5Solution& sol);  // throws on y identically 0 or 1

}  // namespace pmaya
