#include "diagasym/rational.hpp"

#include "diagasym/errors.hpp"

namespace diagasym {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (b == 0 && e < 0) throw DomainError("pow_rat: 0 cannot be raised to a negative power");
    Rat base = e > 0 ? b : Rat(1) / b;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    // base was canonical, so num^k / den^k already is
    return r;
}

std::string rat_string(const Rat& r) {
    return r.get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("parse_rat: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace diagasym
