#pragma once

#include <vector>

#include "diagasym/bigfloat.hpp"
#include "diagasym/rational.hpp"
#include "diagasym/sparse_polynomial.hpp"

namespace diagasym {

// Everything in this module concerns the strictly minimal critical point
// c = (1/(d-1), ..., 1/(d-1)) of the denominator H_d and requires d >= 3
// (d - 2 appears in denominators of the closed forms).

struct PartialDerivatives {
    Rat dH;    // dH/dx_d at c
    Rat ddH;   // d^2H/dx_d^2 at c
    Rat d1dH;  // d^2H/dx_1 dx_d at c
};

struct HessianQuantities {
    Rat q;      // 1 + (c_1/dH)(ddH - d1dH), equals (d-2)/d
    Rat det_g;  // d * q^(d-1), equals (d-2)^(d-1)/d^(d-2)
};

// One factor base^exponent of the closed-form constant.
struct PowerTerm {
    Int base;
    Rat exponent;
};

// C_d(n) ~ constant * growth^n * n^poly_exponent.
struct AsymptoticForm {
    Int growth;                            // (d-1)^d
    Rat poly_exponent;                     // (1-d)/2
    std::vector<PowerTerm> constant_power_terms;
    Rat pi_power;                          // exponent of pi in the constant
    BigFloat constant_float;               // evaluated at precision_bits
    Rat l0;                                // (d-1)^(d-1) / (d^(d-2) (d-2)^d)
    int precision_bits = 0;
};

struct MinimalitySampleReport {
    int d = 0;
    int samples = 0;
    int passed = 0;
    bool all_strict = false;
    Rat max_value;  // largest sum observed; strictly below 1 iff all_strict
};

// Full verification record for one d; every rational field is exact.
struct SmoothPointReport {
    int d = 0;
    Rat c;          // 1/(d-1)
    Rat s_at_c;     // must be 0 (c lies on the variety)
    Rat dH, ddH, d1dH;
    Rat q, det_g, l0;
    bool gradient_symmetric = false;  // c_1 dH_1(c) == c_d dH_d(c), exact
    bool aperiodic = false;
    bool isolation_identity = false;
    MinimalitySampleReport minimality;
    AsymptoticForm form;
};

// S(c) = 1 - sum_{i=2}^d (i-1) C(d,i) (1/(d-1))^i, exactly; the value is 0.
Rat verify_on_variety(int d);

// Exact symbolic derivatives of the expanded H_d evaluated at c, checked
// against their closed forms (mismatch throws ConsistencyError).
PartialDerivatives partials_at_c(int d);

HessianQuantities hessian_quantities(int d);

AsymptoticForm leading_constant(int d, Prec precision_bits = 200);

// True iff the exponent vectors of the nonconstant monomials of p generate
// all of Z^d, decided by exact integer row reduction (Hermite form).
bool check_aperiodic(const SparsePolynomial& p);

// Samples y uniformly from (0, 1/(d-1)]^d \ {c} (deterministic in seed) and
// checks sum_{i=2}^d (i-1) e_i(y) < 1 strictly.  Evidence, not proof.
MinimalitySampleReport check_minimality_samples(int d, int n_samples, unsigned long seed);

// Coefficient-wise equality of 1 - sum_{i=2}^d (i-1) C(d,i) y^i and
// (y+1)^(d-1) (1-(d-1)y), plus the certificate that y = 1/(d-1) is the
// unique positive real root and is simple.
bool check_isolation_identity(int d);

// r_n = C_d(n) / (constant * growth^n * n^poly_exponent) and its first-order
// Richardson extrapolation n r_n - (n-1) r_{n-1}.
struct RatioRow {
    int n = 0;
    BigFloat ratio;
    BigFloat richardson;  // defined from the second row on
};
std::vector<RatioRow> ratio_diagnostics(const std::vector<Int>& series, int d, Prec precision_bits = 200);

// Runs every check above and assembles the record (used by the verify
// command and the acceptance suite).
SmoothPointReport smooth_point_report(int d, int n_samples = 200, unsigned long seed = 0,
                                      Prec precision_bits = 200);

}  // namespace diagasym
