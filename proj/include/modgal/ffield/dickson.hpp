#ifndef MODGAL_FFIELD_DICKSON_HPP
#define MODGAL_FFIELD_DICKSON_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace modgal {

struct DicksonReport {
    std::uint64_t q = 0;
    std::size_t group_order = 0;
    std::size_t subgroup_count = 0;
    /// Subgroups whose theta values cover F_q.
    std::size_t full_theta_count = 0;
    /// Orders of subgroups where "theta covers F_q" and "G is everything" disagree.
    std::vector<std::size_t> counterexamples;
    bool verified = false;
    /// Size of theta(PSL2(F_q)). For odd q this is (q+1)/2: only squares
    /// and 0 occur, since every element lifts to determinant 1.
    std::size_t theta_image_size = 0;
    /// Orders of proper subgroups with theta(G) = theta(PSL2(F_q)).
    std::vector<std::size_t> image_variant_counterexamples;
};

/// Exhaustive check over every subgroup G of PSL2(F_q) that theta(G) = F_q
/// exactly when G = PSL2(F_q). Supported for q in {4, 5, 7, 8, 9}.
DicksonReport dickson_prop1_bruteforce(std::uint64_t q);

}  // namespace modgal

#endif  // MODGAL_FFIELD_DICKSON_HPP
