#include "diagasym/series_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "diagasym/errors.hpp"

namespace diagasym {

SparsePolynomial s_polynomial(int d) {
    if (d < 2) throw DomainError("s_polynomial: requires d >= 2");
    SparsePolynomial s = SparsePolynomial::constant(d, 1);
    for (int i = 2; i <= d; ++i) {
        s -= SparsePolynomial::elementary_symmetric(d, i) * Rat(i - 1);
    }
    return s;
}

SparsePolynomial build_denominator(int d) {
    if (d < 2) throw DomainError("build_denominator: requires d >= 2");
    SparsePolynomial p = SparsePolynomial::constant(d, 1);
    for (int i = 0; i < d; ++i) {
        SparsePolynomial factor = SparsePolynomial::constant(d, 1);
        factor -= SparsePolynomial::variable(d, i);
        p = p * factor;
    }
    return p * s_polynomial(d);
}

namespace {

// Dense multivariate polynomial truncated to the box prod_i [0, caps[i]],
// flat storage with mixed-radix indexing.  Only what the product-formula
// extraction needs.
struct TruncPoly {
    std::vector<int> caps;     // per-variable degree cap (inclusive)
    std::vector<int> strides;  // strides[i] for variable i
    std::vector<Int> c;

    explicit TruncPoly(const std::vector<int>& caps_) : caps(caps_) {
        strides.resize(caps.size());
        std::size_t size = 1;
        for (std::size_t i = 0; i < caps.size(); ++i) {
            strides[i] = static_cast<int>(size);
            size *= static_cast<std::size_t>(caps[i]) + 1;
        }
        c.assign(size, Int(0));
    }
};

// odometer increment over the cap box; returns false after the last cell
bool advance(std::vector<int>& e, const std::vector<int>& caps) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < caps[i]) {
            ++e[i];
            return true;
        }
        e[i] = 0;
    }
    return false;
}

TruncPoly trunc_multiply(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r(a.caps);
    const std::size_t d = a.caps.size();
    std::vector<int> ea(d, 0), eb(d, 0);
    std::size_t ia = 0;
    do {
        if (a.c[ia] != 0) {
            std::fill(eb.begin(), eb.end(), 0);
            std::size_t ib = 0;
            do {
                if (b.c[ib] != 0) {
                    bool fits = true;
                    std::size_t ir = 0;
                    for (std::size_t i = 0; i < d; ++i) {
                        int e = ea[i] + eb[i];
                        if (e > a.caps[i]) {
                            fits = false;
                            break;
                        }
                        ir += static_cast<std::size_t>(e) * static_cast<std::size_t>(a.strides[i]);
                    }
                    if (fits) {
                        mpz_addmul(r.c[ir].get_mpz_t(), a.c[ia].get_mpz_t(), b.c[ib].get_mpz_t());
                    }
                }
                ++ib;
            } while (advance(eb, b.caps));
        }
        ++ia;
    } while (advance(ea, a.caps));
    return r;
}

}  // namespace

Int tuple_count_product(const MultiIndex& m) {
    if (m.empty()) throw DomainError("tuple_count_product: empty index");
    if (!all_nonnegative(m)) throw DomainError("tuple_count_product: negative entry");
    if (std::any_of(m.begin(), m.end(), [](int e) { return e == 0; })) return 0;

    const std::size_t d = m.size();
    std::vector<int> caps(d);
    for (std::size_t i = 0; i < d; ++i) caps[i] = m[i] - 1;

    TruncPoly product(caps);
    product.c[0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        // that_i = sum_{j != i} t_j
        TruncPoly hat(caps);
        for (std::size_t j = 0; j < d; ++j) {
            if (j != i && caps[j] >= 1) hat.c[static_cast<std::size_t>(hat.strides[j])] = 1;
        }
        // factor = sum_{k=0}^{m_i-1} that_i^k * t_i^(m_i-1-k)
        TruncPoly factor(caps);
        TruncPoly hat_pow(caps);  // that_i^k, degree 0 in t_i throughout
        hat_pow.c[0] = 1;
        for (int k = 0; k <= caps[i]; ++k) {
            if (k > 0) hat_pow = trunc_multiply(hat_pow, hat);
            const int shift = (caps[i] - k) * product.strides[i];
            for (std::size_t idx = 0; idx < hat_pow.c.size(); ++idx) {
                if (hat_pow.c[idx] != 0) factor.c[idx + static_cast<std::size_t>(shift)] += hat_pow.c[idx];
            }
        }
        product = trunc_multiply(product, factor);
    }
    return product.c.back();
}

CoefficientTable::CoefficientTable(int d, int n_max) : d_(d), n_max_(n_max) {}

std::size_t CoefficientTable::rank_sorted(const int* m) const {
    // combinatorial number system on b_i = m_i + (d - 1 - i), strictly
    // decreasing since m is nonincreasing
    std::size_t r = 0;
    for (int i = 0; i < d_; ++i) {
        const int b = m[i] + (d_ - 1 - i);
        const int k = d_ - i;
        r += binom_[static_cast<std::size_t>(b) * static_cast<std::size_t>(d_ + 1) + static_cast<std::size_t>(k)];
    }
    return r;
}

const Int& CoefficientTable::lookup(const MultiIndex& m) const {
    if (static_cast<int>(m.size()) != d_) throw DomainError("CoefficientTable::lookup: arity mismatch");
    int buf[16];
    for (int i = 0; i < d_; ++i) {
        int e = m[static_cast<std::size_t>(i)];
        if (e < 0 || e > n_max_) throw DomainError("CoefficientTable::lookup: index outside table box");
        buf[i] = e;
    }
    std::sort(buf, buf + d_, std::greater<int>());
    return values_[rank_sorted(buf)];
}

const Int& CoefficientTable::diagonal(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("CoefficientTable::diagonal: n outside table box");
    int buf[16];
    std::fill(buf, buf + d_, n);
    return values_[rank_sorted(buf)];
}

CoefficientTable gf_coefficients(int d, int n_max, std::size_t max_entries) {
    if (d < 2) throw DomainError("gf_coefficients: requires d >= 2");
    if (d > 15) throw DomainError("gf_coefficients: d > 15 not supported");
    if (n_max < 0) throw DomainError("gf_coefficients: requires n_max >= 0");

    // table size = C(n_max + d, d); refuse before allocating
    Int entries = binomial(static_cast<unsigned long>(n_max + d), static_cast<unsigned long>(d));
    if (entries > Int(static_cast<unsigned long>(max_entries))) {
        throw ResourceError("gf_coefficients: table for d=" + std::to_string(d) +
                            ", n_max=" + std::to_string(n_max) + " needs " + entries.get_str() +
                            " entries, over the budget of " + std::to_string(max_entries));
    }

    CoefficientTable table(d, n_max);

    // binomial lookup C(n, k), n <= n_max + d, k <= d
    const int nb = n_max + d + 1;
    table.binom_.assign(static_cast<std::size_t>(nb) * static_cast<std::size_t>(d + 1), 0);
    for (int n = 0; n < nb; ++n) {
        for (int k = 0; k <= d; ++k) {
            std::uint64_t v;
            if (k == 0) {
                v = 1;
            } else if (n == 0) {
                v = 0;
            } else {
                v = table.binom_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(d + 1) +
                                 static_cast<std::size_t>(k)] +
                    table.binom_[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(d + 1) +
                                 static_cast<std::size_t>(k - 1)];
            }
            table.binom_[static_cast<std::size_t>(n) * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(k)] = v;
        }
    }
    table.values_.assign(entries.get_ui(), Int(0));

    // kernel terms: nonzero coefficients of H_d, excluding the constant 1
    struct KernelTerm {
        int v[16];
        long coeff;
    };
    std::vector<KernelTerm> kernel;
    SparsePolynomial h = build_denominator(d);
    if (h.constant_term() != 1) throw ConsistencyError("gf_coefficients: H_d constant term is not 1");
    for (const auto& [e, c] : h.terms()) {
        if (total_degree(e) == 0) continue;
        KernelTerm t{};
        for (int i = 0; i < d; ++i) t.v[i] = e[static_cast<std::size_t>(i)];
        if (c.get_den() != 1) throw ConsistencyError("gf_coefficients: non-integer kernel coefficient");
        t.coeff = c.get_num().get_si();
        kernel.push_back(t);
    }

    // process sorted indices layer by layer in total degree; each a(m - v)
    // lives in a strictly smaller layer
    std::vector<int> m(static_cast<std::size_t>(d));
    int shifted[16], srt[16];
    std::function<void(int, int, int)> enumerate = [&](int pos, int remaining, int bound) {
        if (pos == d - 1) {
            if (remaining > bound) return;
            m[static_cast<std::size_t>(pos)] = remaining;

            // a(m) = [m == 1] - sum_{v != 0} h_v a(m - v)
            Int acc(0);
            bool all_ones = std::all_of(m.begin(), m.end(), [](int e) { return e == 1; });
            if (all_ones) acc = 1;
            for (const KernelTerm& t : kernel) {
                bool ok = true;
                for (int i = 0; i < d; ++i) {
                    shifted[i] = m[static_cast<std::size_t>(i)] - t.v[i];
                    if (shifted[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::copy(shifted, shifted + d, srt);
                std::sort(srt, srt + d, std::greater<int>());
                const Int& prev = table.values_[table.rank_sorted(srt)];
                if (prev == 0) continue;
                if (t.coeff > 0) {
                    mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(t.coeff));
                } else {
                    mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(-t.coeff));
                }
            }
            std::copy(m.begin(), m.end(), srt);  // m is already nonincreasing
            table.values_[table.rank_sorted(srt)] = std::move(acc);
            return;
        }
        const int tail = d - 1 - pos;
        for (int e = std::min(bound, remaining); e >= 0; --e) {
            if (static_cast<long>(e) * tail < remaining - e) break;  // tail cannot absorb the rest
            m[static_cast<std::size_t>(pos)] = e;
            enumerate(pos + 1, remaining - e, e);
        }
    };

    for (int s = 0; s <= d * n_max; ++s) enumerate(0, s, n_max);
    return table;
}

std::vector<Int> cubical_series(int d, int n_max, std::size_t max_entries) {
    CoefficientTable table = gf_coefficients(d, n_max, max_entries);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(table.diagonal(n));
    return out;
}

}  // namespace diagasym
