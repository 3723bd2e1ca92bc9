#pragma once

/// Opt-in instrumentation: Counted<R> is a ring whose values share an
/// OpCounter and tick it on every multiplication and addition of the
/// wrapped ring. One counter belongs to one computation at a time.

#include <cstdint>
#include <string>
#include <utility>

#include "quadring/ring.hpp"

namespace quadring {

struct OpCounter {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;

    void reset() { multiplications = additions = 0; }
};

template <Ring R>
class Counted {
public:
    Counted(R value, OpCounter* counter) : v_(std::move(value)), c_(counter) {}

    const R& value() const { return v_; }
    OpCounter* counter() const { return c_; }

    friend Counted operator+(const Counted& a, const Counted& b) {
        ++a.c_->additions;
        return Counted(a.v_ + b.v_, a.c_);
    }
    friend Counted operator-(const Counted& a, const Counted& b) {
        ++a.c_->additions;
        return Counted(a.v_ - b.v_, a.c_);
    }
    friend Counted operator-(const Counted& a) { return Counted(-a.v_, a.c_); }
    friend Counted operator*(const Counted& a, const Counted& b) {
        ++a.c_->multiplications;
        return Counted(a.v_ * b.v_, a.c_);
    }

    friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }

private:
    R v_;
    OpCounter* c_;
};

template <Ring R>
Counted<R> zero(const Counted<R>& a) { return Counted<R>(zero(a.value()), a.counter()); }
template <Ring R>
Counted<R> one(const Counted<R>& a) { return Counted<R>(one(a.value()), a.counter()); }
// scalar injection is not a ring operation of the wrapped instance, so it
// does not tick the counter
template <Ring R>
Counted<R> from_integer(const BigInt& n, const Counted<R>& a) {
    return Counted<R>(from_integer(n, a.value()), a.counter());
}
template <Ring R>
std::string to_text(const Counted<R>& a) { return to_text(a.value()); }

}  // namespace quadring
