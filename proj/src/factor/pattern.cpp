#include "modgal/factor/pattern.hpp"

#include "modgal/exact/integer.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace modgal {

FactorPattern FactorPattern::from_degrees(std::vector<int> degrees)
{
    std::sort(degrees.begin(), degrees.end());
    FactorPattern out;
    for (int d : degrees) out.parts.emplace_back(d, 1);
    return out;
}

int FactorPattern::total_degree() const
{
    int s = 0;
    for (auto [d, m] : parts) s += d * m;
    return s;
}

bool FactorPattern::squarefree() const
{
    return std::all_of(parts.begin(), parts.end(), [](auto pm) { return pm.second == 1; });
}

std::vector<int> FactorPattern::degrees() const
{
    std::vector<int> out;
    for (auto [d, m] : parts) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

std::string FactorPattern::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? " " : "") << parts[i].first;
        if (parts[i].second > 1) os << "^" << parts[i].second;
    }
    return os.str();
}

SplittingType::SplittingType(std::vector<std::pair<int, int>> fe) : parts(std::move(fe))
{
    for (auto [f, e] : parts)
        if (f < 1 || e < 1) throw DomainError("residue degree and ramification index must be positive");
    std::sort(parts.begin(), parts.end());
}

int SplittingType::degree() const
{
    int s = 0;
    for (auto [f, e] : parts) s += f * e;
    return s;
}

bool SplittingType::unramified() const
{
    return std::all_of(parts.begin(), parts.end(), [](auto fe) { return fe.second == 1; });
}

std::string SplittingType::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t count = j - i;
        const auto [f, e] = parts[i];
        if (count >= 3) {
            os << (first ? "" : " ") << "(" << f << "^" << e << ")^" << count;
            first = false;
        } else {
            for (std::size_t c = 0; c < count; ++c) {
                os << (first ? "" : " ") << f << "^" << e;
                first = false;
            }
        }
        i = j;
    }
    return os.str();
}

SplittingType parse_splitting_type(const std::string& text)
{
    static const std::regex grouped(R"(^\((\d+)\^(\d+)\)\^(\d+)$)");
    static const std::regex single(R"(^(\d+)\^(\d+)$)");
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, int>> fe;
    std::smatch m;
    while (is >> tok) {
        if (std::regex_match(tok, m, grouped)) {
            const int count = std::stoi(m[3]);
            for (int c = 0; c < count; ++c) fe.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
        } else if (std::regex_match(tok, m, single)) {
            fe.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
        } else {
            throw DataError("bad splitting-type term: " + tok);
        }
    }
    if (fe.empty()) throw DataError("empty splitting type");
    return SplittingType(std::move(fe));
}

}  // namespace modgal
