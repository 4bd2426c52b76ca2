#pragma once

#include <vector>

#include "diagasym/bigfloat.hpp"
#include "diagasym/rational_poly.hpp"

namespace diagasym {

struct RootEstimate {
    BigComplex value;
    int multiplicity = 1;
    // bound on the residual Newton correction; clustered roots that failed
    // to converge all the way are reported with this enlarged, never dropped
    BigFloat uncertainty;
};

// All complex roots of p (with multiplicity, via exact squarefree
// decomposition) to roughly `bits` of precision.  Seeds come from
// double-precision companion-matrix eigenvalues and are polished by Aberth
// iteration in mpfr arithmetic; near-real roots are re-polished on the real
// line.  Deterministic.  Throws DomainError when p is constant.
std::vector<RootEstimate> all_roots(const RationalPoly& p, Prec bits);

}  // namespace diagasym
