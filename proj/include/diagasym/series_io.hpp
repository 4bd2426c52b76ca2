#pragma once

#include <filesystem>
#include <vector>

#include "diagasym/rational.hpp"

namespace diagasym {

// Line-oriented series cache format:
//   diagasym-series v1 d=<d> n_max=<n>
// followed by one decimal integer per line, C_d(0) ... C_d(n_max).
struct SeriesFile {
    int d = 0;
    int n_max = 0;
    std::vector<Int> terms;
};

void write_series_file(const std::filesystem::path& path, int d, const std::vector<Int>& terms);

// Parses and validates the header and line count; throws DomainError on any
// malformed content.
SeriesFile read_series_file(const std::filesystem::path& path);

}  // namespace diagasym
