#include "modgal/cli/table.hpp"

#include <fstream>
#include <sstream>

namespace modgal {

std::uint64_t TableRow::ell() const { return prime_power(q).prime; }
int TableRow::field_degree() const { return static_cast<int>(prime_power(q).exponent); }

std::string TableRow::group_name() const
{
    return std::string(kind == GroupKind::PSL2 ? "PSL2" : "PGL2") + "(F_" + std::to_string(q) + ")";
}

namespace {

std::uint64_t parse_u64(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DataError("table line " + std::to_string(line) + ": expected a nonnegative integer, got '" + s + "'");
    }
}

}  // namespace

std::vector<TableRow> parse_table(const std::string& text)
{
    std::vector<TableRow> rows;
    std::optional<TableRow> cur;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;
        std::vector<std::string> args;
        for (std::string a; ls >> a;) args.push_back(a);
        auto need = [&](std::size_t n) {
            if (args.size() < n) throw DataError("table line " + std::to_string(line) + ": too few fields for " + key);
        };
        if (key == "row") {
            if (cur) throw DataError("table line " + std::to_string(line) + ": row without end");
            need(1);
            cur = TableRow{};
            cur->id = args[0];
            continue;
        }
        if (!cur) throw DataError("table line " + std::to_string(line) + ": entry outside a row");
        if (key == "end") {
            if (cur->q == 0 || cur->level == 0) throw DataError("row " + cur->id + " is incomplete");
            rows.push_back(std::move(*cur));
            cur.reset();
        } else if (key == "group") {
            need(2);
            if (args[0] == "PSL2") cur->kind = GroupKind::PSL2;
            else if (args[0] == "PGL2") cur->kind = GroupKind::PGL2;
            else throw DataError("table line " + std::to_string(line) + ": unknown group " + args[0]);
            cur->q = parse_u64(args[1], line);
            if (prime_power(cur->q).prime == 0) throw DataError("table line " + std::to_string(line) + ": q is not a prime power");
        } else if (key == "disc") {
            need(2);
            cur->disc[parse_u64(args[0], line)] = static_cast<int>(parse_u64(args[1], line));
        } else if (key == "splitting") {
            need(2);
            std::string rest;
            for (std::size_t i = 1; i < args.size(); ++i) rest += (i > 1 ? " " : "") + args[i];
            cur->splitting[parse_u64(args[0], line)] = parse_splitting_type(rest);
        } else if (key == "level") {
            need(1);
            cur->level = parse_u64(args[0], line);
        } else if (key == "weight") {
            need(1);
            cur->weight = static_cast<int>(parse_u64(args[0], line));
        } else if (key == "a2_minpoly") {
            need(2);
            std::string rest;
            for (const auto& a : args) rest += a + " ";
            cur->a2_minpoly = parse_poly(rest);
            cur->a2_degree = cur->a2_minpoly->degree();
            cur->a2_constant = (*cur->a2_minpoly)[0];
        } else if (key == "a2_minpoly_degree") {
            need(1);
            cur->a2_degree = static_cast<int>(parse_u64(args[0], line));
        } else if (key == "a2_minpoly_constant") {
            need(1);
            cur->a2_constant = Integer(args[0]);
        } else if (key == "atkin_lehner") {
            need(1);
            cur->atkin_lehner = std::stoi(args[0]);
        } else {
            throw DataError("table line " + std::to_string(line) + ": unknown key " + key);
        }
    }
    if (cur) throw DataError("table ends inside row " + cur->id);
    return rows;
}

std::vector<TableRow> read_table_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open table file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

}  // namespace modgal
