#pragma once

#include <map>
#include <vector>

#include "diagasym/multi_index.hpp"
#include "diagasym/rational.hpp"

namespace diagasym {

// Multivariate polynomial with exact rational coefficients, stored sparsely
// as exponent-vector -> coefficient.  The ordered map keeps iteration (and
// hence every downstream computation) deterministic.
class SparsePolynomial {
  public:
    using TermMap = std::map<MultiIndex, Rat>;

    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, const Rat& c);
    static SparsePolynomial variable(int nvars, int i);
    // e_i(x_1, ..., x_nvars): sum of all i-fold products of distinct variables
    static SparsePolynomial elementary_symmetric(int nvars, int i);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coefficient(const MultiIndex& e) const;
    Rat constant_term() const;
    int degree_in(int var) const;

    // merges into the term map, dropping the term if it cancels to zero
    void add_term(const MultiIndex& e, const Rat& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(SparsePolynomial a, const Rat& s);

    SparsePolynomial derivative(int var) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    // fast path for points with all coordinates equal: terms contribute by
    // total degree only
    Rat evaluate_equal(const Rat& v) const;

  private:
    int nvars_;
    TermMap terms_;
};

}  // namespace diagasym
