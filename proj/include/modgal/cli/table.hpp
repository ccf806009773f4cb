#ifndef MODGAL_CLI_TABLE_HPP
#define MODGAL_CLI_TABLE_HPP

#include "modgal/exact/int_poly.hpp"
#include "modgal/factor/pattern.hpp"
#include "modgal/ffield/projective_group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modgal {

/// One row of the expected table.
struct TableRow {
    std::string id;
    GroupKind kind = GroupKind::PSL2;
    std::uint64_t q = 0;
    std::map<std::uint64_t, int> disc;                 // prime -> exponent
    std::map<std::uint64_t, SplittingType> splitting;  // prime -> type
    std::uint64_t level = 0;
    int weight = 0;
    std::optional<IntPoly> a2_minpoly;
    int a2_degree = 0;
    std::optional<Integer> a2_constant;
    std::optional<int> atkin_lehner;

    std::uint64_t ell() const;  // characteristic of F_q
    int field_degree() const;   // [F_q : F_ell]
    std::string group_name() const;
};

std::vector<TableRow> parse_table(const std::string& text);
std::vector<TableRow> read_table_file(const std::string& path);

}  // namespace modgal

#endif  // MODGAL_CLI_TABLE_HPP
