#include "modgal/ffield/dickson.hpp"

#include "modgal/ffield/projective_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modgal {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

struct Closure {
    const std::vector<std::uint32_t>& table;
    std::size_t n;

    // Smallest subgroup containing `start` and the generators.
    Bits operator()(const Bits& start, const std::vector<std::size_t>& gens) const
    {
        Bits in = start;
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < n; ++i)
            if (test_bit(in, i)) queue.push_back(i);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            for (std::size_t g : gens) {
                const std::size_t y = table[x * n + g];
                if (!test_bit(in, y)) {
                    set_bit(in, y);
                    queue.push_back(y);
                }
            }
        }
        return in;
    }
};

}  // namespace

DicksonReport dickson_prop1_bruteforce(std::uint64_t q)
{
    if (q != 4 && q != 5 && q != 7 && q != 8 && q != 9) throw DomainError("brute-force check supports q in {4,5,7,8,9}");
    PrimePower pp = prime_power(q);
    FqField field(pp.prime, static_cast<int>(pp.exponent));
    ProjectiveGroup G(field, GroupKind::PSL2);
    const std::size_t n = G.order();

    std::vector<std::uint32_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint32_t>(G.multiply(i, j));
    Closure close{table, n};

    const std::size_t words = (n + 63) / 64;
    Bits trivial(words, 0);
    set_bit(trivial, G.identity());

    // every subgroup is a join of cyclic subgroups
    std::map<Bits, std::size_t> cyclic;
    for (std::size_t g = 0; g < n; ++g) cyclic.emplace(close(trivial, {g}), g);

    std::map<Bits, std::vector<std::size_t>> all;
    all.emplace(trivial, std::vector<std::size_t>{});
    std::vector<Bits> frontier;
    for (const auto& [bits, g] : cyclic)
        if (all.emplace(bits, std::vector<std::size_t>{g}).second) frontier.push_back(bits);
    while (!frontier.empty()) {
        std::vector<Bits> next;
        for (const Bits& H : frontier) {
            const std::vector<std::size_t> gens = all.at(H);
            for (const auto& [cbits, g] : cyclic) {
                if (test_bit(H, g)) continue;
                std::vector<std::size_t> kg = gens;
                kg.push_back(g);
                Bits K = close(H, kg);
                if (all.emplace(K, kg).second) next.push_back(std::move(K));
            }
        }
        frontier = std::move(next);
    }

    DicksonReport rep;
    rep.q = q;
    rep.group_order = n;
    rep.subgroup_count = all.size();
    std::set<std::uint32_t> whole_image;
    for (std::size_t i = 0; i < n; ++i) whole_image.insert(G.theta(i));
    rep.theta_image_size = whole_image.size();
    for (const auto& [bits, gens] : all) {
        std::set<std::uint32_t> th;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (test_bit(bits, i)) {
                ++size;
                th.insert(G.theta(i));
            }
        const bool full_theta = th.size() == q;
        const bool whole = size == n;
        if (full_theta) ++rep.full_theta_count;
        if (full_theta != whole) rep.counterexamples.push_back(size);
        if (!whole && th == whole_image) rep.image_variant_counterexamples.push_back(size);
    }
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    std::sort(rep.image_variant_counterexamples.begin(), rep.image_variant_counterexamples.end());
    rep.verified = rep.counterexamples.empty();
    return rep;
}

}  // namespace modgal
