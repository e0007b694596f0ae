#include "lahbell/partitions.hpp"

#include <algorithm>

namespace lahbell {

namespace {

bool equal_trimmed(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    if (!std::equal(shorter.begin(), shorter.end(), longer.begin()))
        return false;
    return std::all_of(longer.begin() + static_cast<std::ptrdiff_t>(shorter.size()), longer.end(),
                       [](std::uint32_t v) { return v == 0; });
}

} // namespace

bool operator==(const PiWitness& a, const PiWitness& b)
{
    return equal_trimmed(a.j, b.j);
}

bool operator==(const LambdaWitness& a, const LambdaWitness& b)
{
    return equal_trimmed(a.k_part, b.k_part) && equal_trimmed(a.r_part, b.r_part);
}

PiStream::PiStream(std::uint32_t n, std::uint32_t k)
{
    if (k > n)
        return;
    std::vector<detail::constrained_stepper::slot> slots;
    const std::uint32_t len = n == 0 ? 0 : n - k + 1;
    for (std::uint32_t i = 1; i <= len; ++i)
        slots.push_back({i, 0});
    stepper_.emplace(std::move(slots), std::vector<std::uint32_t>{k}, n);
}

bool PiStream::advance()
{
    if (!stepper_)
        return false;
    const bool ok = started_ ? stepper_->next() : stepper_->first();
    started_ = true;
    if (!ok) {
        stepper_.reset();
        return false;
    }
    current_.j = stepper_->values();
    return true;
}

LambdaStream::LambdaStream(std::uint32_t n, std::uint32_t k, std::uint32_t rho) : n_(n)
{
    if (k > n)
        return;
    std::vector<detail::constrained_stepper::slot> slots;
    for (std::uint32_t i = 1; i <= n; ++i)
        slots.push_back({i, 0});
    for (std::uint32_t i = 0; i <= n; ++i)
        slots.push_back({i, 1});
    stepper_.emplace(std::move(slots), std::vector<std::uint32_t>{k, rho}, n);
}

bool LambdaStream::advance()
{
    if (!stepper_)
        return false;
    const bool ok = started_ ? stepper_->next() : stepper_->first();
    started_ = true;
    if (!ok) {
        stepper_.reset();
        return false;
    }
    const auto& v = stepper_->values();
    current_.k_part.assign(v.begin(), v.begin() + n_);
    current_.r_part.assign(v.begin() + n_, v.end());
    return true;
}

PiStream enumerate_pi(std::uint32_t n, std::uint32_t k)
{
    return PiStream(n, k);
}

LambdaStream enumerate_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t rho)
{
    return LambdaStream(n, k, rho);
}

Integer lah_via_pi(std::uint32_t n, std::uint32_t k)
{
    const Integer nf = factorial(n);
    Integer sum = 0;
    for (const auto& w : enumerate_pi(n, k)) {
        Integer den = 1;
        for (auto j : w.j)
            den *= factorial(j);
        sum += exact_div(nf, den);
    }
    return sum;
}

Integer rlah_via_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t r)
{
    const Integer nf = factorial(n);
    const Integer rf = factorial(2 * r);
    Integer sum = 0;
    for (const auto& w : enumerate_lambda(n, k, 2 * r)) {
        Integer kden = 1, rden = 1;
        for (auto v : w.k_part)
            kden *= factorial(v);
        for (auto v : w.r_part)
            rden *= factorial(v);
        sum += exact_div(nf, kden) * exact_div(rf, rden);
    }
    return sum;
}

} // namespace lahbell
