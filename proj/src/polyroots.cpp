#include "diagasym/polyroots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

#include "diagasym/errors.hpp"

namespace diagasym {

namespace {

// Horner evaluation of p and p' at z; coefficients already at working precision.
void eval_with_derivative(const std::vector<BigFloat>& c, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    const Prec bits = z.precision();
    p = BigComplex(bits);
    dp = BigComplex(bits);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z;
        p.re += *it;
    }
}

// double-precision seeds from the companion matrix of the monic-normalized
// polynomial; falls back to a circle of radius given by the Cauchy bound
// when the coefficients do not fit in doubles
std::vector<std::complex<double>> initial_seeds(const std::vector<BigFloat>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<double> cd(c.size());
    bool finite = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        cd[i] = (c[i] / c.back()).to_double();
        if (!std::isfinite(cd[i])) finite = false;
    }
    std::vector<std::complex<double>> seeds;
    if (finite && n <= 128) {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            companion(i, n - 1) = -cd[static_cast<std::size_t>(i)];
            if (i > 0) companion(i, i - 1) = 1.0;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        if (solver.info() == Eigen::Success) {
            for (int i = 0; i < n; ++i) {
                std::complex<double> z = solver.eigenvalues()(i);
                if (std::isfinite(z.real()) && std::isfinite(z.imag())) seeds.push_back(z);
            }
        }
    }
    if (static_cast<int>(seeds.size()) != n) {
        seeds.clear();
        double radius = 0.0;
        for (int i = 0; i < n; ++i) {
            double v = std::abs(finite ? cd[static_cast<std::size_t>(i)] : 1.0);
            radius = std::max(radius, v);
        }
        radius = 1.0 + radius;
        for (int i = 0; i < n; ++i) {
            double angle = 2.0 * M_PI * (static_cast<double>(i) + 0.35) / static_cast<double>(n);
            seeds.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
        }
    }
    // separate coincident seeds so the Aberth correction is well defined
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(seeds[i] - seeds[j]) < 1e-12 * (1.0 + std::abs(seeds[i]))) {
                seeds[i] += std::complex<double>(1e-6 * static_cast<double>(i + 1), 2e-6);
            }
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return seeds;
}

// simultaneous Aberth-Ehrlich refinement of all roots of a squarefree factor
std::vector<RootEstimate> aberth_roots(const RationalPoly& q, Prec bits) {
    const int n = q.degree();
    const Prec work = bits + 96;
    std::vector<BigFloat> c;
    c.reserve(q.coeffs().size());
    for (const Rat& r : q.coeffs()) c.push_back(BigFloat::from(r, work));

    std::vector<BigComplex> z;
    for (const auto& s : initial_seeds(c)) z.push_back(BigComplex::from(s.real(), s.imag(), work));

    const BigFloat tol = pow(BigFloat::from(2L, work), -(bits + 16));
    std::vector<BigFloat> last_step(static_cast<std::size_t>(n), BigFloat(work));
    const int max_sweeps = 240;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool converged = true;
        for (int i = 0; i < n; ++i) {
            BigComplex p(work), dp(work);
            eval_with_derivative(c, z[static_cast<std::size_t>(i)], p, dp);
            if (p.is_zero()) {
                last_step[static_cast<std::size_t>(i)] = BigFloat(work);
                continue;
            }
            if (dp.is_zero()) {
                // nudge off the stationary point
                z[static_cast<std::size_t>(i)].re += tol + abs(z[static_cast<std::size_t>(i)]) * tol;
                converged = false;
                continue;
            }
            BigComplex newton = p / dp;
            BigComplex s(work);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                BigComplex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (diff.is_zero()) continue;
                BigComplex one(BigFloat::from(1L, work), BigFloat(work));
                s = s + one / diff;
            }
            BigComplex one(BigFloat::from(1L, work), BigFloat(work));
            BigComplex denom = one - newton * s;
            BigComplex w = denom.is_zero() ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - w;
            BigFloat step = abs(w);
            last_step[static_cast<std::size_t>(i)] = step;
            if (step > tol * (BigFloat::from(1L, work) + abs(z[static_cast<std::size_t>(i)]))) converged = false;
        }
        if (converged) break;
    }

    // near-real roots of a real polynomial: kill the imaginary fuzz with a
    // few real Newton steps so downstream realness tests are clean
    const BigFloat real_cut = pow(BigFloat::from(2L, work), -(bits / 2));
    for (auto& zi : z) {
        if (zi.im.is_zero()) continue;
        if (abs(zi.im) > real_cut * (BigFloat::from(1L, work) + abs(zi.re))) continue;
        BigFloat x = zi.re;
        bool ok = true;
        for (int it = 0; it < 8 && ok; ++it) {
            BigComplex p(work), dp(work);
            BigComplex zx(x, BigFloat(work));
            eval_with_derivative(c, zx, p, dp);
            if (dp.re.is_zero()) {
                ok = false;
                break;
            }
            x = x - p.re / dp.re;
        }
        if (ok) {
            BigComplex p(work), dp(work);
            BigComplex zx(x, BigFloat(work));
            eval_with_derivative(c, zx, p, dp);
            if (!dp.re.is_zero() && abs(p.re / dp.re) <= abs(zi.im) + tol) {
                zi = BigComplex(x, BigFloat(work));
            }
        }
    }

    std::vector<RootEstimate> out;
    for (int i = 0; i < n; ++i) {
        RootEstimate r;
        r.value = z[static_cast<std::size_t>(i)];
        r.multiplicity = 1;
        BigComplex p(work), dp(work);
        eval_with_derivative(c, r.value, p, dp);
        BigFloat resid = dp.is_zero() ? last_step[static_cast<std::size_t>(i)] : abs(p / dp);
        r.uncertainty = max(resid, last_step[static_cast<std::size_t>(i)]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<RootEstimate> all_roots(const RationalPoly& p, Prec bits) {
    if (p.degree() < 1) throw DomainError("all_roots: polynomial has no roots (degree < 1)");

    std::vector<RootEstimate> roots;

    // strip zero roots exactly
    RationalPoly q = p;
    int zero_mult = 0;
    while (q.coeff(0) == 0 && q.degree() >= 1) {
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = RationalPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) {
        RootEstimate r;
        r.value = BigComplex(bits);
        r.multiplicity = zero_mult;
        r.uncertainty = BigFloat(bits);
        roots.push_back(std::move(r));
    }
    if (q.degree() < 1) return roots;

    for (const auto& [factor, mult] : RationalPoly::squarefree_decomposition(q)) {
        if (factor.degree() == 1) {
            // exact root -c0/c1
            Rat root = -factor.coeff(0) / factor.coeff(1);
            RootEstimate r;
            r.value = BigComplex(BigFloat::from(root, bits), BigFloat(bits));
            r.multiplicity = mult;
            r.uncertainty = BigFloat(bits);
            roots.push_back(std::move(r));
            continue;
        }
        for (RootEstimate r : aberth_roots(factor, bits)) {
            r.multiplicity = mult;
            roots.push_back(std::move(r));
        }
    }

    std::sort(roots.begin(), roots.end(), [](const RootEstimate& a, const RootEstimate& b) {
        int c = cmp(a.value.re, b.value.re);
        if (c != 0) return c < 0;
        return cmp(a.value.im, b.value.im) < 0;
    });
    return roots;
}

}  // namespace diagasym
