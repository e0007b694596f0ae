#pragma once

// Streaming enumerators for the two constraint families indexing Bell-type
// sums:
//
//   pi(n,k)        tuples (j_1 .. j_{n-k+1}) with  sum j_i = k,  sum i*j_i = n
//   Lambda(n,k,p)  pairs (k_1 .. k_n), (r_0 .. r_n) with
//                  sum k_i = k,  sum r_i = p,  sum i*(k_i + r_i) = n
//
// Both streams are single-consumer and deterministic: witnesses come out in
// decreasing lexicographic order of the tuple read from index 1 upward
// (k_part before r_part for Lambda).

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "lahbell/detail/constrained_stepper.hpp"
#include "lahbell/exact.hpp"

namespace lahbell {

struct PiWitness {
    // j[i-1] holds j_i; dense up to index n-k+1 (empty for n = 0)
    std::vector<std::uint32_t> j;

    // trailing zeros do not distinguish witnesses
    friend bool operator==(const PiWitness& a, const PiWitness& b);
};

struct LambdaWitness {
    // k_part[i-1] holds k_i for i = 1..n
    std::vector<std::uint32_t> k_part;
    // r_part[i] holds r_i for i = 0..n
    std::vector<std::uint32_t> r_part;

    friend bool operator==(const LambdaWitness& a, const LambdaWitness& b);
};

namespace detail {

// Range adaptor shared by both streams: Derived provides `bool advance()`
// and `const value_type& current() const`.
template <typename Derived, typename Value>
class witness_stream {
public:
    using value_type = Value;

    std::optional<Value> next()
    {
        auto& self = static_cast<Derived&>(*this);
        if (!self.advance())
            return std::nullopt;
        return self.current();
    }

    struct sentinel {};

    class iterator {
    public:
        using value_type = Value;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(Derived* s) : stream_(s) { ++*this; }

        const Value& operator*() const { return stream_->current(); }
        const Value* operator->() const { return &stream_->current(); }
        iterator& operator++()
        {
            if (!stream_->advance())
                stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) { return it.stream_ == nullptr; }

    private:
        Derived* stream_ = nullptr;
    };

    // Single pass: begin() consumes from wherever the stream currently is.
    iterator begin() { return iterator(static_cast<Derived*>(this)); }
    sentinel end() const { return {}; }
};

} // namespace detail

class PiStream : public detail::witness_stream<PiStream, PiWitness> {
public:
    PiStream(std::uint32_t n, std::uint32_t k);

    bool advance();
    const PiWitness& current() const { return current_; }

private:
    std::optional<detail::constrained_stepper> stepper_;
    bool started_ = false;
    PiWitness current_;
};

class LambdaStream : public detail::witness_stream<LambdaStream, LambdaWitness> {
public:
    LambdaStream(std::uint32_t n, std::uint32_t k, std::uint32_t rho);

    bool advance();
    const LambdaWitness& current() const { return current_; }

private:
    std::uint32_t n_;
    std::optional<detail::constrained_stepper> stepper_;
    bool started_ = false;
    LambdaWitness current_;
};

/// Every PiWitness for (n, k); empty when k > n, one empty witness for n = k = 0.
PiStream enumerate_pi(std::uint32_t n, std::uint32_t k);

/// Every LambdaWitness for (n, k, rho); empty when k > n.
LambdaStream enumerate_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t rho);

/// sum over pi(n,k) of n! / prod j_i!
Integer lah_via_pi(std::uint32_t n, std::uint32_t k);

/// sum over Lambda(n,k,2r) of n!/prod k_i! * (2r)!/prod r_i!
Integer rlah_via_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t r);

} // namespace lahbell
