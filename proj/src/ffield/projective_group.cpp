#include "modgal/ffield/projective_group.hpp"

#include <algorithm>
#include <sstream>

namespace modgal {

SmallField::SmallField(const FqField& field)
{
    const std::uint64_t q = field.order();
    if (q > kMaxOrder) throw DomainError("field too large for lookup tables");
    q_ = static_cast<std::uint32_t>(q);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    square_.assign(q, false);
    std::vector<FqElement> el = field.elements();
    for (std::uint32_t a = 0; a < q_; ++a) {
        neg_[a] = static_cast<std::uint32_t>((-el[a]).index());
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_[a * q_ + b] = static_cast<std::uint32_t>((el[a] + el[b]).index());
            mul_[a * q_ + b] = static_cast<std::uint32_t>((el[a] * el[b]).index());
        }
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
        square_[mul(a, a)] = true;
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1) inv_[a] = b;
    }
}

std::uint32_t SmallField::inv(std::uint32_t a) const
{
    if (a == 0) throw DomainError("inverse of zero");
    return inv_[a];
}

ProjectiveGroup::ProjectiveGroup(const FqField& field, GroupKind kind) : F_(field)
{
    const std::uint32_t q = F_.q();
    auto admit = [&](std::uint32_t det) {
        return det != 0 && (kind == GroupKind::PGL2 || F_.is_square(det));
    };
    for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
            for (std::uint32_t d = 0; d < q; ++d)
                if (admit(F_.sub(d, F_.mul(b, c)))) elems_.push_back({1, b, c, d});
    for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
            if (admit(F_.neg(c))) elems_.push_back({0, 1, c, d});
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(key(elems_[i]), i);
    identity_ = index_of({1, 0, 0, 1});
}

std::uint64_t ProjectiveGroup::key(const Matrix& m) const
{
    const std::uint64_t q = F_.q();
    return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

ProjectiveGroup::Matrix ProjectiveGroup::normalise(Matrix m) const
{
    const std::uint32_t s = F_.inv(m[0] != 0 ? m[0] : m[1]);
    for (auto& x : m) x = F_.mul(x, s);
    return m;
}

std::size_t ProjectiveGroup::index_of(const Matrix& m) const
{
    auto it = index_.find(key(normalise(m)));
    if (it == index_.end()) throw DomainError("matrix is not in the group");
    return it->second;
}

std::size_t ProjectiveGroup::multiply(std::size_t i, std::size_t j) const
{
    const Matrix& x = elems_[i];
    const Matrix& y = elems_[j];
    Matrix m{F_.add(F_.mul(x[0], y[0]), F_.mul(x[1], y[2])), F_.add(F_.mul(x[0], y[1]), F_.mul(x[1], y[3])),
             F_.add(F_.mul(x[2], y[0]), F_.mul(x[3], y[2])), F_.add(F_.mul(x[2], y[1]), F_.mul(x[3], y[3]))};
    return index_.find(key(normalise(m)))->second;
}

std::uint32_t ProjectiveGroup::theta(std::size_t i) const
{
    const Matrix& m = elems_[i];
    const std::uint32_t tr = F_.add(m[0], m[3]);
    const std::uint32_t det = F_.sub(F_.mul(m[0], m[3]), F_.mul(m[1], m[2]));
    return F_.mul(F_.mul(tr, tr), F_.inv(det));
}

std::uint32_t ProjectiveGroup::act(std::size_t i, std::uint32_t z) const
{
    const Matrix& m = elems_[i];
    const std::uint32_t inf = F_.q();
    std::uint32_t num, den;
    if (z == inf) {
        num = m[0];
        den = m[2];
    } else {
        num = F_.add(F_.mul(m[0], z), m[1]);
        den = F_.add(F_.mul(m[2], z), m[3]);
    }
    if (den == 0) return inf;
    return F_.mul(num, F_.inv(den));
}

std::vector<int> ProjectiveGroup::cycle_type(std::size_t i) const
{
    const std::uint32_t npts = F_.q() + 1;
    std::vector<bool> seen(npts, false);
    std::vector<int> out;
    for (std::uint32_t s = 0; s < npts; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::uint32_t z = s; !seen[z]; z = act(i, z)) {
            seen[z] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<CycleType> cycle_type_fingerprint(const FqField& field, GroupKind kind)
{
    ProjectiveGroup G(field, kind);
    std::set<CycleType> out;
    for (std::size_t i = 0; i < G.order(); ++i) out.insert(G.cycle_type(i));
    return out;
}

std::string format_fingerprint(const std::set<CycleType>& types)
{
    std::vector<std::string> lines;
    for (const auto& t : types) {
        std::ostringstream os;
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        lines.push_back(os.str());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

}  // namespace modgal
