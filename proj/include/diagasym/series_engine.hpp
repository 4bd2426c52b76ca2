#pragma once

#include <cstdint>
#include <vector>

#include "diagasym/multi_index.hpp"
#include "diagasym/rational.hpp"
#include "diagasym/sparse_polynomial.hpp"

namespace diagasym {

// S_d(x) = 1 - sum_{i=2}^d (i-1) e_i(x)
SparsePolynomial s_polynomial(int d);

// H_d(x) = (prod_i (1 - x_i)) * S_d(x), expanded.  Constant term 1,
// symmetric, degree <= 2 in each variable.
SparsePolynomial build_denominator(int d);

// Number of simple singular vector tuples of a generic m_1 x ... x m_d
// tensor, computed by truncated expansion of the product formula
//   prod_i sum_{k=0}^{m_i-1} that_i^k t_i^{m_i-1-k},  that_i = (sum_j t_j) - t_i,
// reading off the coefficient of t_1^{m_1-1} ... t_d^{m_d-1}.  Slower than
// the generating-function route; kept as an independent cross-check.
// Returns 0 when any entry is 0.
Int tuple_count_product(const MultiIndex& m);

// Symmetry-reduced table of the coefficients a_d(m) of the generating
// function A_d = G_d / H_d over the box [0, n_max]^d.  Storage holds one
// value per sorted multi-index, addressed through a combinatorial ranking,
// and is immutable once built (safe for concurrent reads).
class CoefficientTable {
  public:
    static constexpr std::size_t kDefaultMaxEntries = 32u * 1000u * 1000u;

    int dimension() const { return d_; }
    int degree_cap() const { return n_max_; }

    // a_d(m) for any m in the box; entry order does not matter
    const Int& lookup(const MultiIndex& m) const;
    // a_d(n, ..., n)
    const Int& diagonal(int n) const;

    friend CoefficientTable gf_coefficients(int d, int n_max, std::size_t max_entries);

  private:
    CoefficientTable(int d, int n_max);
    std::size_t rank_sorted(const int* m) const;

    int d_;
    int n_max_;
    std::vector<std::uint64_t> binom_;  // binom_[n * (d_+1) + k] = C(n, k)
    std::vector<Int> values_;
};

// Builds the full table by the kernel recurrence implied by H_d A_d = G_d:
// with h_v the coefficients of H_d (h_0 = 1),
//   a(m) = [m == (1,...,1)] - sum_{v != 0} h_v a(m - v),
// iterating in nondecreasing total degree so dependencies are ready.
// Throws ResourceError when the table would exceed max_entries.
CoefficientTable gf_coefficients(int d, int n_max,
                                 std::size_t max_entries = CoefficientTable::kDefaultMaxEntries);

// [C_d(0), ..., C_d(n_max)], the diagonal of the coefficient table.
std::vector<Int> cubical_series(int d, int n_max,
                                std::size_t max_entries = CoefficientTable::kDefaultMaxEntries);

}  // namespace diagasym
