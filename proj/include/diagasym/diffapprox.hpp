#pragma once

#include <optional>
#include <vector>

#include "diagasym/bigfloat.hpp"
#include "diagasym/polyroots.hpp"
#include "diagasym/rational.hpp"
#include "diagasym/rational_poly.hpp"

namespace diagasym {

// Exactly fitted linear ODE with polynomial coefficients,
//   Q_0(x) F(x) + Q_1(x) F'(x) + ... + Q_K(x) F^(K)(x) = P(x),
// matching the series expansion of F through order terms_used - 1.
// Roots of Q_K estimate the singularities of F.
struct DifferentialApproximant {
    int order = 0;                     // K
    std::vector<RationalPoly> q_polys; // Q_0 ... Q_K
    RationalPoly inhom;                // P (zero when fitted homogeneously)
    int terms_used = 0;                // length of the series prefix consumed
};

// Interpolatory fit: the linear system uses exactly as many coefficient
// conditions as free unknowns (one unknown is fixed by normalization:
// the lowest-degree nonzero coefficient of Q_K is scaled to 1).
// degrees[k] bounds deg Q_k; inhom_degree = -1 requests a homogeneous fit.
// Throws DomainError when terms are too few and DegenerateFitError when no
// approximant of this shape exists (Q_K forced identically zero).
DifferentialApproximant fit_approximant(const std::vector<Int>& terms, int K, const std::vector<int>& degrees,
                                        int inhom_degree);

struct SingularityEstimate {
    BigComplex location;
    BigFloat uncertainty;
    std::optional<BigFloat> exponent;
    int multiplicity = 1;
    int n_supporting = 1;
    bool spurious = false;
};

// Roots of Q_K at the requested precision, each with multiplicity;
// clustered roots that converge short of full precision are reported with
// enlarged uncertainty rather than dropped.
std::vector<SingularityEstimate> singularities(const DifferentialApproximant& da, Prec precision_bits);

// Critical exponent from the indicial equation at a simple root x_c of Q_K:
//   exponent = K - 1 - Q_{K-1}(x_c) / Q_K'(x_c),
// the theta for which F ~ (x_c - x)^theta.  Throws DegenerateIndicialError
// when Q_K'(x_c) vanishes to working precision (non-simple root).
BigFloat exponent_at(const DifferentialApproximant& da, const BigFloat& x_c);

// Pools all roots of a family of approximants: single-linkage clustering at
// the given relative radius.  Cluster location = member mean, uncertainty =
// max deviation from the mean (operationalizing digit-agreement error bars),
// exponent = mean over members where the indicial equation applies,
// n_supporting = member count.  Clusters touched by fewer than half the
// approximants are flagged spurious but still reported.
std::vector<SingularityEstimate> pool_estimates(const std::vector<DifferentialApproximant>& das,
                                                const BigFloat& clustering_radius, Prec precision_bits);

// Orders pooled estimates by distance from the origin and flags the
// subdominant-constant signature: the estimate closest to the origin
// resolved strictly worse than some estimate farther out.  When d is given,
// the closest cluster is compared against 1/(2d-3)^(d-1) and the
// best-resolved cluster against 1/(d-1)^d.
struct SubdominanceReport {
    bool signature = false;
    std::vector<SingularityEstimate> ordered;  // non-spurious, by |location|
    // set when d was supplied
    std::optional<double> closest_vs_conjecture_reldev;   // |loc| vs 1/(2d-3)^(d-1)
    std::optional<double> dominant_vs_growth_reldev;      // |loc| vs 1/(d-1)^d
};
SubdominanceReport subdominance_report(std::vector<SingularityEstimate> estimates, std::optional<int> d = std::nullopt);

// Standard family used by the analyze pipeline: orders 1..3, last-column
// degree offsets {-2, 0, +2}, inhomogeneous degrees {0, 1, 2}, each shape
// sized to consume as much of the series as possible (at most max_terms).
struct FamilyParams {
    std::vector<int> orders{1, 2, 3};
    std::vector<int> degree_offsets{-2, 0, 2};
    std::vector<int> inhom_degrees{0, 1, 2};
    int max_terms = 101;
};
std::vector<DifferentialApproximant> fit_family(const std::vector<Int>& terms, const FamilyParams& params);

}  // namespace diagasym
