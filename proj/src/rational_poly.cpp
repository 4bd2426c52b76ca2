#include "diagasym/rational_poly.hpp"

#include "diagasym/errors.hpp"

namespace diagasym {

RationalPoly RationalPoly::constant(const Rat& v) {
    return RationalPoly(std::vector<Rat>{v});
}

RationalPoly RationalPoly::monomial(const Rat& coeff, int deg) {
    if (deg < 0) throw DomainError("monomial: negative degree");
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    c.back() = coeff;
    return RationalPoly(std::move(c));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(r));
}

RationalPoly operator*(RationalPoly a, const Rat& s) {
    if (s == 0) return {};
    for (auto& c : a.c_) c *= s;
    return a;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::pow(const RationalPoly& base, int e) {
    if (e < 0) throw DomainError("RationalPoly::pow: negative exponent");
    RationalPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

BigFloat RationalPoly::eval(const BigFloat& x) const {
    BigFloat r(x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + BigFloat::from(*it, x.precision());
    }
    return r;
}

BigComplex RationalPoly::eval(const BigComplex& x) const {
    Prec bits = x.precision();
    BigComplex r(bits);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x;
        r.re += BigFloat::from(*it, bits);
    }
    return r;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DomainError("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {RationalPoly{}, a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rat& lead = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::div_exact(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("div_exact: nonzero remainder");
    return q;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / c_.back());
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

namespace {

// gcd(p, p') over Z_q for a word-size prime certifies squarefreeness over Q
// when it is constant (the subresultant is then nonzero); this keeps the
// expensive exact gcd off the common path, where fitted polynomials carry
// coefficients of thousands of bits.
bool squarefree_certificate(const std::vector<Rat>& coeffs) {
    static constexpr unsigned long primes[] = {2305843009213693951UL,  // 2^61 - 1
                                               4611686018427387847UL};
    auto mulmod = [](unsigned long a, unsigned long b, unsigned long q) {
        return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % q);
    };
    auto powmod = [&](unsigned long a, unsigned long e, unsigned long q) {
        unsigned long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a, q);
            a = mulmod(a, a, q);
            e >>= 1;
        }
        return r;
    };
    for (unsigned long q : primes) {
        std::vector<unsigned long> a(coeffs.size());
        bool usable = true;
        for (std::size_t i = 0; i < coeffs.size() && usable; ++i) {
            unsigned long num = mpz_fdiv_ui(coeffs[i].get_num_mpz_t(), q);
            unsigned long den = mpz_fdiv_ui(coeffs[i].get_den_mpz_t(), q);
            if (den == 0) usable = false;
            a[i] = mulmod(num, powmod(den, q - 2, q), q);
        }
        if (!usable || a.back() == 0) continue;  // prime divides a denominator or the leading term
        std::vector<unsigned long> b(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = mulmod(a[i], i % q, q);
        while (!b.empty() && b.back() == 0) b.pop_back();
        if (b.empty()) continue;
        // Euclid over Z_q
        while (true) {
            if (b.empty()) break;
            if (b.size() == 1) {
                a = std::move(b);
                b.clear();
                break;
            }
            unsigned long lead_inv = powmod(b.back(), q - 2, q);
            for (long k = static_cast<long>(a.size()) - static_cast<long>(b.size()); k >= 0; --k) {
                unsigned long f = mulmod(a[static_cast<std::size_t>(k) + b.size() - 1], lead_inv, q);
                if (f == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j) {
                    unsigned long sub = mulmod(f, b[j], q);
                    std::size_t idx = static_cast<std::size_t>(k) + j;
                    a[idx] = (a[idx] + q - sub) % q;
                }
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            std::swap(a, b);
        }
        if (a.size() == 1) return true;  // constant gcd mod q: squarefree over Q
    }
    return false;
}

}  // namespace

std::vector<std::pair<RationalPoly, int>> RationalPoly::squarefree_decomposition(const RationalPoly& p) {
    if (p.degree() < 1) throw DomainError("squarefree_decomposition: constant polynomial");
    std::vector<std::pair<RationalPoly, int>> out;
    if (squarefree_certificate(p.coeffs())) {
        out.emplace_back(p.monic(), 1);
        return out;
    }
    RationalPoly d = gcd(p, p.derivative());
    if (d.degree() == 0) {
        out.emplace_back(p.monic(), 1);
        return out;
    }
    RationalPoly w = div_exact(p, d);
    RationalPoly y = div_exact(p.derivative(), d);
    int i = 1;
    while (w.degree() > 0) {
        RationalPoly z = y - w.derivative();
        RationalPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = div_exact(w, g);
        y = div_exact(z, g);
        ++i;
    }
    return out;
}

}  // namespace diagasym
