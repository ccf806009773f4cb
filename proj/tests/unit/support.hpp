#ifndef MODGAL_TESTS_SUPPORT_HPP
#define MODGAL_TESTS_SUPPORT_HPP

#include "modgal/cli/table.hpp"
#include "modgal/exact/int_poly.hpp"

#include <random>
#include <string>
#include <vector>

namespace test {

inline std::string data_dir() { return MODGAL_DATA_DIR; }
inline std::string poly_path(const std::string& name) { return data_dir() + "/polys/" + name + ".poly"; }

inline std::vector<std::string> all_rows()
{
    return {"psl25_1", "psl25_2", "psl25_3", "psl32", "psl49_1",
            "psl49_2", "pgl25",   "pgl27_1", "pgl27_2", "pgl27_3"};
}

inline std::vector<modgal::TableRow> table_rows() { return modgal::read_table_file(data_dir() + "/table.txt"); }

inline modgal::TableRow table_row(const std::string& id)
{
    for (auto& r : table_rows())
        if (r.id == id) return r;
    throw modgal::DataError("no table row " + id);
}

inline modgal::IntPoly row_poly(const std::string& id) { return modgal::read_poly_file(poly_path(id)); }

inline modgal::IntPoly random_poly(std::mt19937_64& rng, int degree, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<modgal::Integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = d(rng);
    while (c.back() == 0) c.back() = d(rng);
    return modgal::IntPoly(std::move(c));
}

}  // namespace test

#endif
