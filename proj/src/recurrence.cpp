#include "diagasym/recurrence.hpp"

#include <algorithm>
#include <string>

#include "diagasym/errors.hpp"
#include "diagasym/linalg.hpp"

namespace diagasym {

namespace {

constexpr int kOverdetermination = 10;

// clear denominators, divide by integer content, make lc(p_0) positive
PRecurrence normalize(PRecurrence rec) {
    Int den_lcm(1);
    for (const RationalPoly& p : rec.coeffs) {
        for (const Rat& c : p.coeffs()) {
            Int den = c.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        }
    }
    Int content(0);
    for (const RationalPoly& p : rec.coeffs) {
        for (const Rat& c : p.coeffs()) {
            Int num = Rat(c * Rat(den_lcm)).get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        }
    }
    if (content == 0) content = 1;
    Rat scale = Rat(den_lcm) / Rat(content);
    if (rec.coeffs[0].leading_coeff() * scale < 0) scale = -scale;
    for (RationalPoly& p : rec.coeffs) p = p * scale;
    return rec;
}

// builds p_i from the flat unknown vector laid out i-major, degree minor
PRecurrence assemble(const std::vector<Rat>& x, int order, int degree) {
    PRecurrence rec;
    rec.order = order;
    rec.offset = order;
    for (int i = 0; i <= order; ++i) {
        std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
        for (int j = 0; j <= degree; ++j) {
            c[static_cast<std::size_t>(j)] =
                x[static_cast<std::size_t>(i) * (static_cast<std::size_t>(degree) + 1) + static_cast<std::size_t>(j)];
        }
        rec.coeffs.emplace_back(std::move(c));
    }
    return rec;
}

}  // namespace

std::optional<PRecurrence> guess_p_recurrence(const std::vector<Int>& terms, int max_order, int max_degree) {
    if (max_order < 1 || max_degree < 0) throw DomainError("guess_p_recurrence: invalid ansatz bounds");
    const int len = static_cast<int>(terms.size());

    // smallest ansatz must be admissible, otherwise the caller cannot
    // possibly succeed: report how many terms that shape would need
    {
        const int unknowns = 2;  // order 1, degree 0
        if (len - 1 < unknowns + kOverdetermination) {
            throw DomainError("guess_p_recurrence: need at least " + std::to_string(unknowns + kOverdetermination + 1) +
                              " terms, got " + std::to_string(len));
        }
    }

    // precomputed n^j up to the largest degree
    std::vector<std::vector<Int>> npow(static_cast<std::size_t>(len));
    for (int n = 0; n < len; ++n) {
        auto& row = npow[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(max_degree) + 1);
        row[0] = 1;
        for (int j = 1; j <= max_degree; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] * n;
    }

    for (int order = 1; order <= max_order; ++order) {
        const int equations = len - order;
        for (int degree = 0; degree <= max_degree; ++degree) {
            const int unknowns = (order + 1) * (degree + 1);
            if (equations < unknowns + kOverdetermination) continue;

            IntMatrix mat(static_cast<std::size_t>(equations));
            for (int n = order; n < len; ++n) {
                auto& row = mat[static_cast<std::size_t>(n - order)];
                row.reserve(static_cast<std::size_t>(unknowns));
                for (int i = 0; i <= order; ++i) {
                    const Int& term = terms[static_cast<std::size_t>(n - i)];
                    for (int j = 0; j <= degree; ++j) {
                        row.push_back(term * npow[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]);
                    }
                }
            }

            auto basis = nullspace(std::move(mat));
            for (const auto& vec : basis) {
                PRecurrence rec = assemble(vec, order, degree);
                if (rec.coeffs[0].is_zero()) continue;  // p_0 must not vanish identically
                rec = normalize(std::move(rec));
                return rec;
            }
        }
    }
    return std::nullopt;
}

bool verify_recurrence(const PRecurrence& rec, const std::vector<Int>& terms) {
    const int len = static_cast<int>(terms.size());
    const int first = std::max(rec.offset, rec.order);
    if (first >= len) throw DomainError("verify_recurrence: no applicable index in the supplied terms");
    for (int n = first; n < len; ++n) {
        Rat acc(0);
        for (int i = 0; i <= rec.order; ++i) {
            acc += rec.coeffs[static_cast<std::size_t>(i)].eval(Rat(n)) * Rat(terms[static_cast<std::size_t>(n - i)]);
        }
        if (acc != 0) return false;
    }
    return true;
}

std::vector<Int> extend_series(const PRecurrence& rec, std::vector<Int> terms, int n_target) {
    if (static_cast<int>(terms.size()) <= rec.order) {
        throw DomainError("extend_series: need more initial terms than the recurrence order");
    }
    for (int n = static_cast<int>(terms.size()); n <= n_target; ++n) {
        Rat lead = rec.coeffs[0].eval(Rat(n));
        if (lead == 0) {
            throw SingularLeadingCoefficientError(n, "extend_series: p_0 vanishes at n=" + std::to_string(n));
        }
        Rat acc(0);
        for (int i = 1; i <= rec.order; ++i) {
            acc += rec.coeffs[static_cast<std::size_t>(i)].eval(Rat(n)) * Rat(terms[static_cast<std::size_t>(n - i)]);
        }
        Rat value = -acc / lead;
        if (value.get_den() != 1) {
            throw ConsistencyError("extend_series: non-integer value produced at n=" + std::to_string(n));
        }
        terms.push_back(value.get_num());
    }
    return terms;
}

RationalPoly characteristic_polynomial(const PRecurrence& rec) {
    int max_deg = 0;
    for (const RationalPoly& p : rec.coeffs) max_deg = std::max(max_deg, p.degree());
    std::vector<Rat> c(static_cast<std::size_t>(rec.order) + 1);
    for (int i = 0; i <= rec.order; ++i) {
        c[static_cast<std::size_t>(rec.order - i)] = rec.coeffs[static_cast<std::size_t>(i)].coeff(max_deg);
    }
    RationalPoly chi(std::move(c));
    if (chi.is_zero()) throw ConsistencyError("characteristic_polynomial: identically zero");
    return chi;
}

GrowthCandidates growth_candidates(const PRecurrence& rec, Prec precision_bits) {
    // >= 50 decimal digits regardless of the caller's choice
    Prec bits = std::max<Prec>(precision_bits, 192);
    GrowthCandidates g;
    RationalPoly chi = characteristic_polynomial(rec);
    if (chi.degree() < 1) return g;  // no growth information (degenerate leading row)
    g.roots = all_roots(chi, bits);
    return g;
}

}  // namespace diagasym
