#include "lahbell/sequence.hpp"

#include <string>

#include "lahbell/errors.hpp"

namespace lahbell {

SequenceSpec SequenceSpec::ones()
{
    return SequenceSpec(Kind::Ones);
}

SequenceSpec SequenceSpec::factorials()
{
    return SequenceSpec(Kind::Factorials);
}

SequenceSpec SequenceSpec::explicit_values(std::vector<Integer> values)
{
    SequenceSpec s(Kind::Explicit);
    s.values_ = std::move(values);
    return s;
}

SequenceSpec SequenceSpec::symbolic(Family family)
{
    SequenceSpec s(Kind::Symbolic);
    s.family_ = family;
    return s;
}

Polynomial SequenceSpec::at(std::uint32_t i) const
{
    Polynomial base;
    switch (kind_) {
    case Kind::Ones:
        base = Polynomial(1);
        break;
    case Kind::Factorials:
        base = Polynomial(factorial(i));
        break;
    case Kind::Explicit:
        if (i == 0 || i > values_.size())
            throw length_error("explicit sequence has " + std::to_string(values_.size()) +
                               " entries, index " + std::to_string(i) + " requested");
        base = Polynomial(values_[i - 1]);
        break;
    case Kind::Symbolic:
        base = Polynomial(Variable{family_, family_ == Family::ScalarX ? 1u : i});
        break;
    }
    Integer weight = 1;
    for (auto shift : factorial_shifts_)
        weight *= factorial(i - shift);
    return base * factor_ * weight;
}

SequenceSpec SequenceSpec::times(Polynomial factor) const
{
    SequenceSpec s = *this;
    s.factor_ *= factor;
    return s;
}

SequenceSpec SequenceSpec::factorial_weighted(std::uint32_t shift) const
{
    SequenceSpec s = *this;
    s.factorial_shifts_.push_back(shift);
    return s;
}

} // namespace lahbell
