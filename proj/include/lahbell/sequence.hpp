#pragma once

#include <cstdint>
#include <vector>

#include "lahbell/poly.hpp"

namespace lahbell {

/// A finite description of an argument sequence s_1, s_2, ... fed to the
/// Bell-type constructors: all ones, factorials, an explicit list of integers
/// or a family of indeterminates. Entries may be further scaled by a common
/// polynomial factor and by factorial weights, which is how substitutions such
/// as x_i -> i! * x_i or x_i -> alpha * x_i are expressed.
class SequenceSpec {
public:
    enum class Kind { Ones, Factorials, Explicit, Symbolic };

    static SequenceSpec ones();
    static SequenceSpec factorials();
    static SequenceSpec explicit_values(std::vector<Integer> values);
    static SequenceSpec symbolic(Family family);

    /// Entry i (1-based). Throws lahbell::length_error when an explicit list
    /// is too short.
    Polynomial at(std::uint32_t i) const;

    /// Every entry multiplied by factor.
    SequenceSpec times(Polynomial factor) const;

    /// Entry i multiplied by (i - shift)!; shift 0 gives i!, shift 1 gives (i-1)!.
    SequenceSpec factorial_weighted(std::uint32_t shift) const;

    Kind kind() const noexcept { return kind_; }
    Family family() const noexcept { return family_; }
    const std::vector<Integer>& values() const noexcept { return values_; }

private:
    SequenceSpec(Kind kind) : kind_(kind) {}

    Kind kind_;
    Family family_ = Family::X;
    std::vector<Integer> values_;
    Polynomial factor_ = Polynomial(1);
    std::vector<std::uint32_t> factorial_shifts_;
};

} // namespace lahbell
