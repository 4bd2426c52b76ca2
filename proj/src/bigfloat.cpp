#include "diagasym/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace diagasym {

std::string BigFloat::to_string(int digits) const {
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return mpfr_sgn(x_) > 0 ? "inf" : "-inf";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
    return std::string(buf.data());
}

BigFloat pow_rat(const BigFloat& base, const Rat& e) {
    if (mpz_cmp_ui(e.get_den_mpz_t(), 1) == 0 && mpz_fits_slong_p(e.get_num_mpz_t())) {
        return pow(base, mpz_get_si(e.get_num_mpz_t()));
    }
    return pow(base, BigFloat::from(e, base.precision()));
}

long agreement_bits(const BigFloat& a, const BigFloat& b) {
    if (a == b) return std::max(a.precision(), b.precision());
    BigFloat diff = abs(a - b);
    BigFloat scale = max(abs(a), abs(b));
    if (scale.is_zero()) return 0;
    // exponent difference of |a-b| against max(|a|,|b|)
    long ediff = mpfr_get_exp(scale.raw()) - mpfr_get_exp(diff.raw());
    return ediff;
}

}  // namespace diagasym
