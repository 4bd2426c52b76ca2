#include "diagasym/series_io.hpp"

#include <fstream>
#include <sstream>

#include "diagasym/errors.hpp"

namespace diagasym {

void write_series_file(const std::filesystem::path& path, int d, const std::vector<Int>& terms) {
    if (terms.empty()) throw DomainError("write_series_file: empty series");
    std::ofstream out(path);
    if (!out) throw DomainError("write_series_file: cannot open " + path.string());
    out << "diagasym-series v1 d=" << d << " n_max=" << (terms.size() - 1) << "\n";
    for (const Int& t : terms) out << t.get_str() << "\n";
    if (!out) throw DomainError("write_series_file: write failed for " + path.string());
}

SeriesFile read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("read_series_file: cannot open " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw DomainError("read_series_file: empty file " + path.string());

    SeriesFile sf;
    {
        std::istringstream hs(header);
        std::string word;
        hs >> word;
        if (word != "diagasym-series") throw DomainError("read_series_file: bad magic in " + path.string());
        hs >> word;
        if (word != "v1") throw DomainError("read_series_file: unsupported version in " + path.string());
        hs >> word;
        if (word.rfind("d=", 0) != 0) throw DomainError("read_series_file: missing d= field");
        sf.d = std::stoi(word.substr(2));
        hs >> word;
        if (word.rfind("n_max=", 0) != 0) throw DomainError("read_series_file: missing n_max= field");
        sf.n_max = std::stoi(word.substr(6));
    }
    if (sf.d < 2 || sf.n_max < 0) throw DomainError("read_series_file: invalid header values");

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Int v;
        if (mpz_set_str(v.get_mpz_t(), line.c_str(), 10) != 0) {
            throw DomainError("read_series_file: bad integer line '" + line + "'");
        }
        sf.terms.push_back(std::move(v));
    }
    if (static_cast<int>(sf.terms.size()) != sf.n_max + 1) {
        throw DomainError("read_series_file: expected " + std::to_string(sf.n_max + 1) + " terms, found " +
                          std::to_string(sf.terms.size()));
    }
    return sf;
}

}  // namespace diagasym
