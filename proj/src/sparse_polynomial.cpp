#include "diagasym/sparse_polynomial.hpp"

#include "diagasym/errors.hpp"

namespace diagasym {

SparsePolynomial SparsePolynomial::constant(int nvars, const Rat& c) {
    SparsePolynomial p(nvars);
    p.add_term(MultiIndex(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DomainError("SparsePolynomial::variable: index out of range");
    SparsePolynomial p(nvars);
    MultiIndex e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePolynomial SparsePolynomial::elementary_symmetric(int nvars, int i) {
    if (i < 0 || i > nvars) throw DomainError("elementary_symmetric: order out of range");
    // iterative DP on prod_j (1 + x_j z): e[k] after j factors holds e_k(x_1..x_j)
    std::vector<SparsePolynomial> e(static_cast<std::size_t>(i) + 1, SparsePolynomial(nvars));
    e[0] = constant(nvars, 1);
    for (int j = 0; j < nvars; ++j) {
        SparsePolynomial xj = variable(nvars, j);
        for (int k = std::min(i, j + 1); k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k) - 1] * xj;
        }
    }
    return e[static_cast<std::size_t>(i)];
}

Rat SparsePolynomial::coefficient(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat SparsePolynomial::constant_term() const {
    return coefficient(MultiIndex(static_cast<std::size_t>(nvars_), 0));
}

int SparsePolynomial::degree_in(int var) const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(var)]);
    return deg;
}

void SparsePolynomial::add_term(const MultiIndex& e, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("add_term: exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r(a.nvars_);
    MultiIndex e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePolynomial operator*(SparsePolynomial a, const Rat& s) {
    if (s == 0) return SparsePolynomial(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

SparsePolynomial SparsePolynomial::derivative(int var) const {
    SparsePolynomial r(nvars_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        MultiIndex de = e;
        de[v] -= 1;
        r.add_term(de, c * e[v]);
    }
    return r;
}

Rat SparsePolynomial::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DomainError("evaluate: arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= pow_rat(point[i], e[i]);
        }
        total += t;
    }
    return total;
}

Rat SparsePolynomial::evaluate_equal(const Rat& v) const {
    int max_deg = 0;
    for (const auto& [e, c] : terms_) max_deg = std::max(max_deg, total_degree(e));
    std::vector<Rat> powers(static_cast<std::size_t>(max_deg) + 1);
    powers[0] = 1;
    for (int k = 1; k <= max_deg; ++k) powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k) - 1] * v;
    Rat total(0);
    for (const auto& [e, c] : terms_) total += c * powers[static_cast<std::size_t>(total_degree(e))];
    return total;
}

}  // namespace diagasym
