#pragma once

#include <gmpxx.h>

#include <string>

namespace diagasym {

using Int = mpz_class;
using Rat = mpq_class;

// canonicalized num/den (mpq_class's two-argument constructor does not
// reduce, and the GMP comparison functions require canonical form)
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// b^e, e >= 0
Int pow_int(const Int& b, unsigned long e);

// b^e with e possibly negative (b != 0 required for e < 0)
Rat pow_rat(const Rat& b, long e);

// Canonical "p/q" rendering ("p" when the denominator is 1); used by every
// JSON and text report so output is byte-reproducible.
std::string rat_string(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace diagasym
