#pragma once

#include <optional>
#include <vector>

#include "diagasym/polyroots.hpp"
#include "diagasym/rational.hpp"
#include "diagasym/rational_poly.hpp"

namespace diagasym {

// Linear recurrence with polynomial coefficients,
//   p_0(n) a(n) + p_1(n) a(n-1) + ... + p_k(n) a(n-k) = 0   for n >= offset.
// Invariants: p_0 is not identically zero; coefficients are integral with
// content 1 and the leading coefficient of p_0 positive.
struct PRecurrence {
    int order = 0;
    int offset = 0;
    std::vector<RationalPoly> coeffs;  // coeffs[i] = p_i, size order + 1
};

// Searches ansatz shapes in (order, degree) lexicographic order -- order
// minimized first, then degree -- and returns the first recurrence whose
// exact nullspace is nontrivial.  Every candidate system must be
// overdetermined by at least 10 equations; shapes too large for the data are
// skipped, and if no shape fits at all a DomainError reports the length
// needed.  A returned recurrence annihilates all supplied terms exactly.
std::optional<PRecurrence> guess_p_recurrence(const std::vector<Int>& terms, int max_order, int max_degree);

// Exact check of the recurrence on every applicable index of terms.
// Throws DomainError when no index is applicable.
bool verify_recurrence(const PRecurrence& rec, const std::vector<Int>& terms);

// Extends terms through index n_target by exact rational division.  Every
// produced value must be an integer (ConsistencyError otherwise); a zero of
// p_0 in the extension range raises SingularLeadingCoefficientError.
std::vector<Int> extend_series(const PRecurrence& rec, std::vector<Int> terms, int n_target);

// Characteristic polynomial sum_i lc(p_i) lambda^(k-i), where lc takes the
// coefficient of the maximal n-degree attained across all p_i.
RationalPoly characteristic_polynomial(const PRecurrence& rec);

// Roots of the characteristic polynomial: the candidate exponential growth
// rates of solutions of the recurrence.
struct GrowthCandidates {
    std::vector<RootEstimate> roots;
};
GrowthCandidates growth_candidates(const PRecurrence& rec, Prec precision_bits = 256);

}  // namespace diagasym
