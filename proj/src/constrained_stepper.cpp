#include "lahbell/detail/constrained_stepper.hpp"

#include <algorithm>
#include <cassert>

namespace lahbell::detail {

constrained_stepper::constrained_stepper(std::vector<slot> slots,
                                         std::vector<std::uint32_t> count_target,
                                         std::uint32_t weight_target)
    : slots_(std::move(slots))
    , count_target_(std::move(count_target))
    , weight_target_(weight_target)
{
    const auto groups = count_target_.size();
    const auto n = slots_.size();
    suffix_.assign(n + 1, std::vector<range>(groups));
    for (std::size_t p = n; p-- > 0;) {
        suffix_[p] = suffix_[p + 1];
        auto& r = suffix_[p][slots_[p].group];
        const auto w = slots_[p].weight;
        if (!r.any) {
            r = {true, w, w};
        } else {
            r.lo = std::min(r.lo, w);
            r.hi = std::max(r.hi, w);
        }
    }
    values_.assign(n, 0);
    rem_counts_.assign(n + 1, std::vector<std::uint64_t>(groups, 0));
    rem_weight_.assign(n + 1, 0);
}

bool constrained_stepper::feasible_from(std::size_t pos, const std::vector<std::uint64_t>& counts,
                                        std::uint64_t weight) const
{
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t g = 0; g < counts.size(); ++g) {
        if (counts[g] == 0)
            continue;
        const auto& r = suffix_[pos][g];
        if (!r.any)
            return false;
        lo += counts[g] * r.lo;
        hi += counts[g] * r.hi;
    }
    return lo <= weight && weight <= hi;
}

bool constrained_stepper::try_place(std::size_t pos, std::uint32_t value)
{
    const auto& s = slots_[pos];
    auto counts = rem_counts_[pos];
    auto weight = rem_weight_[pos];
    if (counts[s.group] < value)
        return false;
    const std::uint64_t used = std::uint64_t{s.weight} * value;
    if (used > weight)
        return false;
    counts[s.group] -= value;
    weight -= used;
    if (!feasible_from(pos + 1, counts, weight))
        return false;
    values_[pos] = value;
    rem_counts_[pos + 1] = std::move(counts);
    rem_weight_[pos + 1] = weight;
    return true;
}

void constrained_stepper::fill_from(std::size_t pos)
{
    for (; pos < slots_.size(); ++pos) {
        const auto& s = slots_[pos];
        std::uint64_t cap = rem_counts_[pos][s.group];
        if (s.weight > 0)
            cap = std::min<std::uint64_t>(cap, rem_weight_[pos] / s.weight);
        bool placed = false;
        for (auto v = static_cast<std::int64_t>(cap); v >= 0 && !placed; --v)
            placed = try_place(pos, static_cast<std::uint32_t>(v));
        // the interval test at pos guarantees some value fits
        assert(placed);
    }
}

bool constrained_stepper::first()
{
    rem_counts_[0].assign(count_target_.begin(), count_target_.end());
    rem_weight_[0] = weight_target_;
    if (!feasible_from(0, rem_counts_[0], rem_weight_[0]))
        return false;
    fill_from(0);
    return true;
}

bool constrained_stepper::next()
{
    for (std::size_t p = slots_.size(); p-- > 0;) {
        for (auto v = values_[p]; v-- > 0;) {
            if (try_place(p, v)) {
                fill_from(p + 1);
                return true;
            }
        }
    }
    return false;
}

} // namespace lahbell::detail
