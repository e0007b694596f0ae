#pragma once

#include <cstdint>
#include <vector>

namespace lahbell::detail {

// Walks every assignment of nonnegative integers v_0 .. v_{P-1} to slots,
// where slot p carries a weight w_p and belongs to a group g_p, subject to
//
//     sum over slots of group g of v_p  = count_target[g]   for every group
//     sum over all slots of w_p * v_p   = weight_target
//
// Assignments come out in decreasing lexicographic order of (v_0, v_1, ...).
//
// Within a group the slot weights at or after any position must form a run
// of consecutive integers (slots of one group may be interleaved with other
// groups only as whole blocks). Under that condition the totals reachable by
// the remaining slots form an integer interval, so the feasibility test below
// is exact and the walk never backtracks into a dead end.
class constrained_stepper {
public:
    struct slot {
        std::uint32_t weight;
        std::uint32_t group;
    };

    constrained_stepper(std::vector<slot> slots, std::vector<std::uint32_t> count_target,
                        std::uint32_t weight_target);

    // Positions on the first assignment. False when the constraint set is empty.
    bool first();
    // Advances to the next assignment. False once the walk is exhausted.
    bool next();

    const std::vector<std::uint32_t>& values() const noexcept { return values_; }

private:
    struct range {
        bool any = false;
        std::uint32_t lo = 0;
        std::uint32_t hi = 0;
    };

    bool feasible_from(std::size_t pos, const std::vector<std::uint64_t>& counts,
                       std::uint64_t weight) const;
    bool try_place(std::size_t pos, std::uint32_t value);
    void fill_from(std::size_t pos);

    std::vector<slot> slots_;
    std::vector<std::uint32_t> count_target_;
    std::uint32_t weight_target_;

    // suffix_[p][g]: weight range of group g slots at positions >= p
    std::vector<std::vector<range>> suffix_;

    std::vector<std::uint32_t> values_;
    // remaining counts / weight before position p (size P+1)
    std::vector<std::vector<std::uint64_t>> rem_counts_;
    std::vector<std::uint64_t> rem_weight_;
};

} // namespace lahbell::detail
