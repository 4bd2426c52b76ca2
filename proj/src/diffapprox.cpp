#include "diagasym/diffapprox.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "diagasym/errors.hpp"
#include "diagasym/linalg.hpp"

namespace diagasym {

namespace {

// falling factorial a (a-1) ... (a-k+1)
Int falling(int a, int k) {
    Int r(1);
    for (int i = 0; i < k; ++i) r *= a - i;
    return r;
}

}  // namespace

DifferentialApproximant fit_approximant(const std::vector<Int>& terms, int K, const std::vector<int>& degrees,
                                        int inhom_degree) {
    if (K < 1) throw DomainError("fit_approximant: order K >= 1 required");
    if (static_cast<int>(degrees.size()) != K + 1) throw DomainError("fit_approximant: need K+1 degree bounds");
    for (int dg : degrees) {
        if (dg < 0) throw DomainError("fit_approximant: negative degree bound");
    }
    if (inhom_degree < -1) throw DomainError("fit_approximant: inhom_degree must be >= -1");

    const int inhom_cols = inhom_degree + 1;
    int unknowns = inhom_cols;
    for (int dg : degrees) unknowns += dg + 1;
    const int equations = unknowns - 1;  // one scale is fixed by normalization
    const int needed = equations + K;
    if (static_cast<int>(terms.size()) < needed) {
        throw DomainError("fit_approximant: shape needs " + std::to_string(needed) + " series terms, got " +
                          std::to_string(terms.size()));
    }

    // homogeneous system in all unknowns; rows are coefficient conditions
    // [x^n] (sum_k Q_k F^(k) - P) = 0 for n = 0 .. equations-1
    IntMatrix mat(static_cast<std::size_t>(equations));
    for (int n = 0; n < equations; ++n) {
        auto& row = mat[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(unknowns));
        for (int k = 0; k <= K; ++k) {
            for (int j = 0; j <= degrees[static_cast<std::size_t>(k)]; ++j) {
                if (n - j < 0) {
                    row.emplace_back(0);
                } else {
                    row.push_back(falling(n - j + k, k) * terms[static_cast<std::size_t>(n - j + k)]);
                }
            }
        }
        for (int j = 0; j < inhom_cols; ++j) row.emplace_back(n == j ? -1 : 0);
    }

    auto basis = nullspace(std::move(mat));
    // Q_K must not vanish identically; take the first basis vector where it
    // does not (if none does, no combination can either)
    int qk_begin = inhom_cols;  // recomputed below as offset of Q_K block
    {
        int off = 0;
        for (int k = 0; k < K; ++k) off += degrees[static_cast<std::size_t>(k)] + 1;
        qk_begin = off;
    }
    const int qk_len = degrees[static_cast<std::size_t>(K)] + 1;

    for (const auto& vec : basis) {
        bool qk_nonzero = false;
        for (int j = 0; j < qk_len; ++j) {
            if (vec[static_cast<std::size_t>(qk_begin + j)] != 0) {
                qk_nonzero = true;
                break;
            }
        }
        if (!qk_nonzero) continue;

        // normalize: lowest-degree nonzero coefficient of Q_K scaled to 1
        Rat pivot;
        for (int j = 0; j < qk_len; ++j) {
            if (vec[static_cast<std::size_t>(qk_begin + j)] != 0) {
                pivot = vec[static_cast<std::size_t>(qk_begin + j)];
                break;
            }
        }

        DifferentialApproximant da;
        da.order = K;
        da.terms_used = needed;
        int off = 0;
        for (int k = 0; k <= K; ++k) {
            std::vector<Rat> c(static_cast<std::size_t>(degrees[static_cast<std::size_t>(k)]) + 1);
            for (int j = 0; j <= degrees[static_cast<std::size_t>(k)]; ++j) {
                c[static_cast<std::size_t>(j)] = vec[static_cast<std::size_t>(off + j)] / pivot;
            }
            da.q_polys.emplace_back(std::move(c));
            off += degrees[static_cast<std::size_t>(k)] + 1;
        }
        std::vector<Rat> pc(static_cast<std::size_t>(std::max(inhom_cols, 0)));
        for (int j = 0; j < inhom_cols; ++j) pc[static_cast<std::size_t>(j)] = vec[static_cast<std::size_t>(off + j)] / pivot;
        da.inhom = RationalPoly(std::move(pc));
        return da;
    }
    throw DegenerateFitError("fit_approximant: no approximant with Q_K != 0 for this shape");
}

std::vector<SingularityEstimate> singularities(const DifferentialApproximant& da, Prec precision_bits) {
    const RationalPoly& qk = da.q_polys.back();
    if (qk.degree() < 1) return {};
    std::vector<SingularityEstimate> out;
    for (const RootEstimate& r : all_roots(qk, precision_bits)) {
        SingularityEstimate s;
        s.location = r.value;
        s.uncertainty = r.uncertainty;
        s.multiplicity = r.multiplicity;
        s.n_supporting = 1;
        out.push_back(std::move(s));
    }
    return out;
}

BigFloat exponent_at(const DifferentialApproximant& da, const BigFloat& x_c) {
    const Prec bits = x_c.precision();
    const RationalPoly& qk = da.q_polys.back();
    const RationalPoly& qk1 = da.q_polys[static_cast<std::size_t>(da.order) - 1];
    BigFloat dq = qk.derivative().eval(x_c);
    BigFloat qprev = qk1.eval(x_c);
    BigFloat tiny = pow(BigFloat::from(2L, bits), -(bits - 24));
    if (abs(dq) <= tiny * (BigFloat::from(1L, bits) + abs(qprev))) {
        throw DegenerateIndicialError("exponent_at: Q_K' vanishes at the requested point (non-simple root)");
    }
    return BigFloat::from(static_cast<long>(da.order - 1), bits) - qprev / dq;
}

std::vector<SingularityEstimate> pool_estimates(const std::vector<DifferentialApproximant>& das,
                                                const BigFloat& clustering_radius, Prec precision_bits) {
    if (das.size() < 3) throw DomainError("pool_estimates: need at least 3 approximants");

    struct Raw {
        BigComplex z;
        BigFloat unc;
        std::optional<BigFloat> exponent;
        int approximant = 0;
    };
    std::vector<Raw> raw;
    for (std::size_t a = 0; a < das.size(); ++a) {
        for (const SingularityEstimate& s : singularities(das[a], precision_bits)) {
            Raw r;
            r.z = s.location;
            r.unc = s.uncertainty;
            r.approximant = static_cast<int>(a);
            if (s.multiplicity == 1 && s.location.im.is_zero()) {
                try {
                    r.exponent = exponent_at(das[a], s.location.re);
                } catch (const DegenerateIndicialError&) {
                }
            }
            raw.push_back(std::move(r));
        }
    }

    // deterministic order before clustering
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        int c = cmp(a.z.re, b.z.re);
        if (c != 0) return c < 0;
        return cmp(a.z.im, b.z.im) < 0;
    });

    // single-linkage union-find on pairwise relative distance
    std::vector<std::size_t> parent(raw.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            BigFloat dist = abs(raw[i].z - raw[j].z);
            BigFloat scale = max(abs(raw[i].z), abs(raw[j].z));
            if (dist <= clustering_radius * scale) {
                parent[find(i)] = find(j);
            }
        }
    }

    std::vector<std::vector<std::size_t>> groups;
    {
        std::vector<long> group_of(raw.size(), -1);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            std::size_t root = find(i);
            if (group_of[root] < 0) {
                group_of[root] = static_cast<long>(groups.size());
                groups.emplace_back();
            }
            groups[static_cast<std::size_t>(group_of[root])].push_back(i);
        }
    }

    const Prec bits = precision_bits;
    std::vector<SingularityEstimate> clusters;
    for (const auto& members : groups) {
        SingularityEstimate c;
        BigComplex mean(bits);
        for (std::size_t i : members) mean = mean + raw[i].z;
        BigFloat inv = BigFloat::from(1L, bits) / BigFloat::from(static_cast<long>(members.size()), bits);
        mean = mean * inv;
        c.location = mean;

        BigFloat dev(bits);
        for (std::size_t i : members) {
            dev = max(dev, abs(raw[i].z - mean));
            dev = max(dev, raw[i].unc);
        }
        c.uncertainty = dev;

        BigFloat esum(bits);
        int ecount = 0;
        for (std::size_t i : members) {
            if (raw[i].exponent) {
                esum += *raw[i].exponent;
                ++ecount;
            }
        }
        if (ecount > 0) c.exponent = esum / static_cast<long>(ecount);

        c.n_supporting = static_cast<int>(members.size());
        std::vector<int> distinct;
        for (std::size_t i : members) distinct.push_back(raw[i].approximant);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        c.spurious = distinct.size() * 2 < das.size();
        clusters.push_back(std::move(c));
    }

    std::sort(clusters.begin(), clusters.end(), [](const SingularityEstimate& a, const SingularityEstimate& b) {
        return abs(a.location) < abs(b.location);
    });
    return clusters;
}

SubdominanceReport subdominance_report(std::vector<SingularityEstimate> estimates, std::optional<int> d) {
    if (estimates.size() < 2) throw DomainError("subdominance_report: need at least 2 estimates");

    SubdominanceReport rep;
    for (SingularityEstimate& e : estimates) {
        if (!e.spurious) rep.ordered.push_back(std::move(e));
    }
    std::sort(rep.ordered.begin(), rep.ordered.end(), [](const SingularityEstimate& a, const SingularityEstimate& b) {
        return abs(a.location) < abs(b.location);
    });
    if (rep.ordered.size() >= 2) {
        const SingularityEstimate& closest = rep.ordered.front();
        for (std::size_t i = 1; i < rep.ordered.size(); ++i) {
            if (closest.uncertainty > rep.ordered[i].uncertainty) {
                rep.signature = true;
                break;
            }
        }
    }

    if (d && rep.ordered.size() >= 1) {
        const Prec bits = rep.ordered.front().location.precision();
        Rat conj = Rat(1) / Rat(pow_int(Int(2 * *d - 3), static_cast<unsigned long>(*d - 1)));
        Rat growth = Rat(1) / Rat(pow_int(Int(*d - 1), static_cast<unsigned long>(*d)));
        BigFloat conj_f = BigFloat::from(conj, bits);
        BigFloat growth_f = BigFloat::from(growth, bits);
        rep.closest_vs_conjecture_reldev =
            (abs(abs(rep.ordered.front().location) - conj_f) / conj_f).to_double();
        // best-resolved non-spurious cluster
        std::size_t best = 0;
        for (std::size_t i = 1; i < rep.ordered.size(); ++i) {
            if (rep.ordered[i].uncertainty < rep.ordered[best].uncertainty) best = i;
        }
        rep.dominant_vs_growth_reldev = (abs(abs(rep.ordered[best].location) - growth_f) / growth_f).to_double();
    }
    return rep;
}

std::vector<DifferentialApproximant> fit_family(const std::vector<Int>& terms, const FamilyParams& params) {
    const int available = std::min<int>(static_cast<int>(terms.size()), params.max_terms);
    std::vector<DifferentialApproximant> family;
    for (int K : params.orders) {
        for (int offset : params.degree_offsets) {
            for (int ip : params.inhom_degrees) {
                // choose the balanced degree so the shape consumes as much
                // of the available prefix as possible:
                // unknowns = (K+1)(D+1) + offset + ip + 1 <= available - K + 1
                const int budget = available - K + 1 - (ip + 1) - offset;
                const int dplus1 = budget / (K + 1);
                const int D = dplus1 - 1;
                if (D < 1 || D + offset < 1) continue;
                std::vector<int> degrees(static_cast<std::size_t>(K) + 1, D);
                degrees.back() = D + offset;
                try {
                    family.push_back(fit_approximant(terms, K, degrees, ip));
                } catch (const DegenerateFitError&) {
                    // shape cannot represent the series; skip
                } catch (const DomainError&) {
                    // not enough terms for this shape; skip
                }
            }
        }
    }
    return family;
}

}  // namespace diagasym
