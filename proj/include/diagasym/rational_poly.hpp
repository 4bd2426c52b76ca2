#pragma once

#include <utility>
#include <vector>

#include "diagasym/bigfloat.hpp"
#include "diagasym/rational.hpp"

namespace diagasym {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial is the empty coefficient vector (degree() == -1).
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rat& v);
    static RationalPoly monomial(const Rat& coeff, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[static_cast<std::size_t>(i)];
    }
    Rat leading_coeff() const { return c_.empty() ? Rat(0) : c_.back(); }

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const Rat& s);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    RationalPoly derivative() const;
    static RationalPoly pow(const RationalPoly& base, int e);

    Rat eval(const Rat& x) const;
    BigFloat eval(const BigFloat& x) const;
    BigComplex eval(const BigComplex& x) const;

    // quotient and remainder; divisor must be nonzero
    static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
    // exact division; throws ConsistencyError on nonzero remainder
    static RationalPoly div_exact(const RationalPoly& a, const RationalPoly& b);
    // monic gcd; gcd(0, 0) == 0
    static RationalPoly gcd(RationalPoly a, RationalPoly b);
    // Yun squarefree decomposition: pairwise-coprime monic factors with
    // their multiplicities, product (up to scale) recovering the input
    static std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p);

    RationalPoly monic() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace diagasym
