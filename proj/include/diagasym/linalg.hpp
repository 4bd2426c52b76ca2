#pragma once

#include <vector>

#include "diagasym/rational.hpp"

namespace diagasym {

// Exact dense linear algebra over the integers.  Elimination is
// fraction-free (Bareiss), so intermediate entries stay integral and are
// bounded by minors of the input; pivots are chosen by minimal bit size to
// limit growth.  Deterministic.
using IntMatrix = std::vector<std::vector<Int>>;

// Basis of the rational nullspace of A (possibly empty).  Basis vectors are
// produced in the canonical order of the free columns, each with a 1 in its
// free coordinate.
std::vector<std::vector<Rat>> nullspace(IntMatrix a);

}  // namespace diagasym
