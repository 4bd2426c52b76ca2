#include "diagasym/linalg.hpp"

namespace diagasym {

namespace {

struct Echelon {
    IntMatrix mat;               // row echelon, rows 0..rank-1 nonzero
    std::vector<int> pivot_col;  // pivot column of each echelon row
    int rank = 0;
};

// Fraction-free row echelon form (Bareiss with column skipping).  After k
// pivot steps every entry is an exact (k+1)x(k+1) minor of the input, so the
// division by the previous pivot is exact by Sylvester's identity.
Echelon bareiss_echelon(IntMatrix a) {
    Echelon e;
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    Int prev(1);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // pivot: nonzero entry of minimal bit size in this column
        int pivot = -1;
        std::size_t best_size = 0;
        for (int i = r; i < rows; ++i) {
            const Int& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (v == 0) continue;
            std::size_t sz = mpz_sizeinbase(v.get_mpz_t(), 2);
            if (pivot < 0 || sz < best_size) {
                pivot = i;
                best_size = sz;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        auto& prow = a[static_cast<std::size_t>(r)];
        Int t;
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const Int head = row[static_cast<std::size_t>(col)];
            for (int j = col + 1; j < cols; ++j) {
                auto& cell = row[static_cast<std::size_t>(j)];
                // cell = (prow[col]*cell - head*prow[j]) / prev, exactly
                cell *= prow[static_cast<std::size_t>(col)];
                t = head * prow[static_cast<std::size_t>(j)];
                cell -= t;
                if (prev != 1) mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        e.pivot_col.push_back(col);
        ++r;
    }
    e.rank = r;
    e.mat = std::move(a);
    return e;
}

}  // namespace

std::vector<std::vector<Rat>> nullspace(IntMatrix a) {
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    Echelon e = bareiss_echelon(std::move(a));

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : e.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(cols), Rat(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int r = e.rank - 1; r >= 0; --r) {
            const auto& row = e.mat[static_cast<std::size_t>(r)];
            int pc = e.pivot_col[static_cast<std::size_t>(r)];
            Rat s(0);
            for (int j = pc + 1; j < cols; ++j) {
                if (x[static_cast<std::size_t>(j)] != 0 && row[static_cast<std::size_t>(j)] != 0) {
                    s += Rat(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
                }
            }
            x[static_cast<std::size_t>(pc)] = -s / Rat(row[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace diagasym
