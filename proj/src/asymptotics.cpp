#include "diagasym/asymptotics.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "diagasym/errors.hpp"
#include "diagasym/rational_poly.hpp"
#include "diagasym/series_engine.hpp"

namespace diagasym {

namespace {

void require_d3(int d, const char* who) {
    if (d < 3) throw DomainError(std::string(who) + ": requires d >= 3 (d=2 lies outside the smooth-point analysis)");
}

Rat critical_coordinate(int d) {
    return Rat(1, d - 1);
}

// closed forms for the partials of H_d at c
Rat closed_dh(int d) {
    Rat num = Rat(-pow_int(Int(d - 2), static_cast<unsigned long>(d)) * pow_int(Int(d), static_cast<unsigned long>(d - 2)));
    return num / Rat(pow_int(Int(d - 1), static_cast<unsigned long>(2 * d - 2)));
}

Rat closed_ddh(int d) {
    Rat num = Rat(2 * pow_int(Int(d), static_cast<unsigned long>(d - 2)) * pow_int(Int(d - 2), static_cast<unsigned long>(d - 1)));
    return num / Rat(pow_int(Int(d - 1), static_cast<unsigned long>(2 * d - 3)));
}

Rat closed_d1dh(int d) {
    Rat num = Rat(4 * pow_int(Int(d), static_cast<unsigned long>(d - 3)) * pow_int(Int(d - 2), static_cast<unsigned long>(d - 1)));
    return num / Rat(pow_int(Int(d - 1), static_cast<unsigned long>(2 * d - 3)));
}

}  // namespace

Rat verify_on_variety(int d) {
    require_d3(d, "verify_on_variety");
    // e_i(k 1) = C(d,i) k^i
    Rat c = critical_coordinate(d);
    Rat s(1);
    for (int i = 2; i <= d; ++i) {
        s -= Rat(i - 1) * Rat(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(i))) * pow_rat(c, i);
    }
    return s;
}

PartialDerivatives partials_at_c(int d) {
    require_d3(d, "partials_at_c");
    SparsePolynomial h = build_denominator(d);
    Rat c = critical_coordinate(d);

    SparsePolynomial h_d = h.derivative(d - 1);
    SparsePolynomial h_dd = h_d.derivative(d - 1);
    SparsePolynomial h_1d = h_d.derivative(0);

    PartialDerivatives p;
    p.dH = h_d.evaluate_equal(c);
    p.ddH = h_dd.evaluate_equal(c);
    p.d1dH = h_1d.evaluate_equal(c);

    if (p.dH != closed_dh(d) || p.ddH != closed_ddh(d) || p.d1dH != closed_d1dh(d)) {
        throw ConsistencyError("partials_at_c: symbolic evaluation disagrees with closed form at d=" +
                               std::to_string(d));
    }
    return p;
}

HessianQuantities hessian_quantities(int d) {
    require_d3(d, "hessian_quantities");
    PartialDerivatives p = partials_at_c(d);
    Rat c = critical_coordinate(d);

    HessianQuantities h;
    h.q = Rat(1) + (c / p.dH) * (p.ddH - p.d1dH);
    if (h.q != frac(d - 2, d)) {
        throw ConsistencyError("hessian_quantities: q != (d-2)/d at d=" + std::to_string(d));
    }
    h.det_g = Rat(d) * pow_rat(h.q, d - 1);
    Rat det_closed = Rat(pow_int(Int(d - 2), static_cast<unsigned long>(d - 1))) /
                     Rat(pow_int(Int(d), static_cast<unsigned long>(d - 2)));
    if (h.det_g != det_closed) {
        throw ConsistencyError("hessian_quantities: det g would not match its closed form at d=" + std::to_string(d));
    }
    return h;
}

AsymptoticForm leading_constant(int d, Prec precision_bits) {
    require_d3(d, "leading_constant");
    if (precision_bits < 64) throw DomainError("leading_constant: precision_bits >= 64 required");

    AsymptoticForm f;
    f.precision_bits = static_cast<int>(precision_bits);
    f.growth = pow_int(Int(d - 1), static_cast<unsigned long>(d));
    f.poly_exponent = frac(1 - d, 2);

    // L0 = G(c) / (-c_d dH(c))
    Rat c = critical_coordinate(d);
    Rat g_at_c = pow_rat(c, d);
    PartialDerivatives p = partials_at_c(d);
    f.l0 = g_at_c / (-c * p.dH);
    Rat l0_closed = Rat(pow_int(Int(d - 1), static_cast<unsigned long>(d - 1))) /
                    Rat(pow_int(Int(d), static_cast<unsigned long>(d - 2)) *
                        pow_int(Int(d - 2), static_cast<unsigned long>(d)));
    if (f.l0 != l0_closed) {
        throw ConsistencyError("leading_constant: L0 does not match its closed form at d=" + std::to_string(d));
    }

    // constant = (d-1)^(d-1) / ((2 pi)^((d-1)/2) d^((d-2)/2) (d-2)^((3d-1)/2))
    f.constant_power_terms = {
        {Int(d - 1), Rat(d - 1)},
        {Int(2), frac(1 - d, 2)},
        {Int(d), frac(2 - d, 2)},
        {Int(d - 2), frac(1 - 3 * d, 2)},
    };
    f.pi_power = frac(1 - d, 2);

    BigFloat value = BigFloat::from(1L, precision_bits);
    for (const PowerTerm& t : f.constant_power_terms) {
        value *= pow_rat(BigFloat::from(t.base, precision_bits), t.exponent);
    }
    value *= pow_rat(BigFloat::pi(precision_bits), f.pi_power);
    f.constant_float = value;

    // independent route: L0 / sqrt((2 pi)^(d-1) det g); must agree
    HessianQuantities hq = hessian_quantities(d);
    BigFloat two_pi = BigFloat::pi(precision_bits) * 2L;
    BigFloat alt = BigFloat::from(f.l0, precision_bits) /
                   sqrt(pow(two_pi, static_cast<long>(d - 1)) * BigFloat::from(hq.det_g, precision_bits));
    if (agreement_bits(f.constant_float, alt) < static_cast<long>(precision_bits) - 50) {
        throw ConsistencyError("leading_constant: the two evaluations of the constant disagree at d=" +
                               std::to_string(d));
    }
    return f;
}

bool check_aperiodic(const SparsePolynomial& p) {
    const int d = p.nvars();
    std::vector<std::vector<long>> rows;
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) == 0) continue;
        rows.emplace_back(e.begin(), e.end());
    }
    if (rows.empty()) throw DomainError("check_aperiodic: no nonconstant terms");

    // Hermite-style integer elimination: the rows generate Z^d iff the
    // reduced form has d pivots, each equal to 1.
    int pivot_row = 0;
    for (int col = 0; col < d && pivot_row < static_cast<int>(rows.size()); ++col) {
        // gcd elimination in this column
        while (true) {
            int nonzero = -1;
            long best = 0;
            for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
                long v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
                if (v != 0 && (nonzero < 0 || std::abs(v) < std::abs(best))) {
                    nonzero = i;
                    best = v;
                }
            }
            if (nonzero < 0) break;
            std::swap(rows[static_cast<std::size_t>(pivot_row)], rows[static_cast<std::size_t>(nonzero)]);
            long pv = rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
            bool reduced_all = true;
            for (int i = pivot_row + 1; i < static_cast<int>(rows.size()); ++i) {
                long v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
                if (v == 0) continue;
                long f = v / pv;
                for (int j = 0; j < d; ++j) {
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        f * rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(j)];
                }
                if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (rows[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)] != 0) ++pivot_row;
    }
    if (pivot_row < d) return false;
    // lattice determinant = |product of pivots|; Z^d iff it is 1
    Int det(1);
    int r = 0;
    for (int col = 0; col < d; ++col) {
        // pivots sit in echelon order
        long v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (v == 0) continue;
        det *= Int(v);
        ++r;
    }
    return det == 1 || det == -1;
}

MinimalitySampleReport check_minimality_samples(int d, int n_samples, unsigned long seed) {
    require_d3(d, "check_minimality_samples");
    if (n_samples < 1) throw DomainError("check_minimality_samples: n_samples >= 1 required");

    MinimalitySampleReport rep;
    rep.d = d;
    rep.samples = n_samples;
    rep.max_value = Rat(0);

    // y_i = k_i / (M (d-1)) with k_i uniform in [1, M]: y in (0, 1/(d-1)]^d.
    // Raw mt19937_64 draws keep the stream platform-independent.
    std::mt19937_64 rng(seed);
    const unsigned long m_grid = 1UL << 20;
    std::vector<Rat> y(static_cast<std::size_t>(d));
    for (int s = 0; s < n_samples; ++s) {
        bool at_c = true;
        for (int i = 0; i < d; ++i) {
            unsigned long k = 1 + static_cast<unsigned long>(rng() % m_grid);
            if (k != m_grid) at_c = false;
            y[static_cast<std::size_t>(i)] = frac(static_cast<long>(k), static_cast<long>(m_grid) * (d - 1));
        }
        if (at_c) {
            --s;  // the excluded point itself; redraw
            continue;
        }
        // elementary symmetric values e_1..e_d of y by the usual DP
        std::vector<Rat> e(static_cast<std::size_t>(d) + 1);
        e[0] = 1;
        for (int j = 0; j < d; ++j) {
            for (int k = std::min(d, j + 1); k >= 1; --k) {
                e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k) - 1] * y[static_cast<std::size_t>(j)];
            }
        }
        Rat value(0);
        for (int i = 2; i <= d; ++i) value += Rat(i - 1) * e[static_cast<std::size_t>(i)];
        if (value < 1) ++rep.passed;
        if (value > rep.max_value) rep.max_value = value;
    }
    rep.all_strict = rep.passed == rep.samples;
    return rep;
}

bool check_isolation_identity(int d) {
    require_d3(d, "check_isolation_identity");

    // left side: S restricted to the diagonal, 1 - sum (i-1) C(d,i) y^i
    std::vector<Rat> lhs_coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
    lhs_coeffs[0] = 1;
    for (int i = 2; i <= d; ++i) {
        lhs_coeffs[static_cast<std::size_t>(i)] =
            -Rat(i - 1) * Rat(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(i)));
    }
    RationalPoly lhs(std::move(lhs_coeffs));

    RationalPoly y_plus_1(std::vector<Rat>{Rat(1), Rat(1)});
    RationalPoly linear(std::vector<Rat>{Rat(1), Rat(1 - d)});
    RationalPoly rhs = RationalPoly::pow(y_plus_1, d - 1) * linear;
    if (!(lhs == rhs)) return false;

    // y = 1/(d-1) is a root, is simple, and is the only positive real root:
    // the cofactor (y+1)^(d-1) has positive coefficients only
    Rat root(1, d - 1);
    if (lhs.eval(root) != 0) return false;
    if (lhs.derivative().eval(root) == 0) return false;
    RationalPoly cofactor = RationalPoly::div_exact(lhs, linear);
    for (const Rat& c : cofactor.coeffs()) {
        if (c <= 0) return false;
    }
    return true;
}

std::vector<RatioRow> ratio_diagnostics(const std::vector<Int>& series, int d, Prec precision_bits) {
    require_d3(d, "ratio_diagnostics");
    if (series.size() < 10) throw DomainError("ratio_diagnostics: need at least 10 series terms");

    AsymptoticForm form = leading_constant(d, precision_bits);
    std::vector<RatioRow> rows;
    BigFloat growth_n = BigFloat::from(1L, precision_bits);
    BigFloat growth = BigFloat::from(form.growth, precision_bits);
    for (int n = 1; n < static_cast<int>(series.size()); ++n) {
        growth_n *= growth;
        BigFloat predicted = form.constant_float * growth_n *
                             pow_rat(BigFloat::from(static_cast<long>(n), precision_bits), form.poly_exponent);
        RatioRow row;
        row.n = n;
        row.ratio = BigFloat::from(series[static_cast<std::size_t>(n)], precision_bits) / predicted;
        if (!rows.empty()) {
            row.richardson = row.ratio * static_cast<long>(n) - rows.back().ratio * static_cast<long>(n - 1);
        } else {
            row.richardson = row.ratio;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SmoothPointReport smooth_point_report(int d, int n_samples, unsigned long seed, Prec precision_bits) {
    require_d3(d, "smooth_point_report");

    SmoothPointReport rep;
    rep.d = d;
    rep.c = critical_coordinate(d);
    rep.s_at_c = verify_on_variety(d);
    PartialDerivatives p = partials_at_c(d);
    rep.dH = p.dH;
    rep.ddH = p.ddH;
    rep.d1dH = p.d1dH;
    HessianQuantities h = hessian_quantities(d);
    rep.q = h.q;
    rep.det_g = h.det_g;
    rep.form = leading_constant(d, precision_bits);
    rep.l0 = rep.form.l0;

    // criticality: c_j dH_j(c) all coincide; by symmetry checking the first
    // and last partials exactly is enough to exercise the computation
    SparsePolynomial hd = build_denominator(d);
    Rat g1 = hd.derivative(0).evaluate_equal(rep.c);
    Rat gd = hd.derivative(d - 1).evaluate_equal(rep.c);
    rep.gradient_symmetric = (rep.c * g1 == rep.c * gd);

    rep.aperiodic = check_aperiodic(s_polynomial(d));
    rep.isolation_identity = check_isolation_identity(d);
    rep.minimality = check_minimality_samples(d, n_samples, seed);
    return rep;
}

}  // namespace diagasym
