#pragma once

/**
 * @file ring.hpp
 * @brief The commutative-ring concept every generic algorithm is written against.
 *
 * A ring type supplies +, -, unary -, *, structural equality, and four ADL
 * customization points:
 *
 *   zero(x), one(x)       identities of the ring instance x belongs to
 *                         (the exemplar argument carries runtime context
 *                         such as a modulus)
 *   from_integer(n, x)    image of the integer n under the canonical map
 *                         from the integers into x's ring
 *   to_text(x)            canonical text rendering
 *
 * Division is deliberately absent from the contract.
 */

#include <concepts>
#include <cstdint>
#include <string>

#include "quadring/bigint.hpp"

namespace quadring {

template <class R>
concept Ring =
    std::copyable<R> &&
    requires(const R& a, const R& b, const BigInt& n) {
        { a + b } -> std::same_as<R>;
        { a - b } -> std::same_as<R>;
        { -a } -> std::same_as<R>;
        { a * b } -> std::same_as<R>;
        { a == b } -> std::convertible_to<bool>;
        { zero(a) } -> std::same_as<R>;
        { one(a) } -> std::same_as<R>;
        { from_integer(n, a) } -> std::same_as<R>;
        { to_text(a) } -> std::same_as<std::string>;
    };

/// n * 1_R by binary double-and-add over the bits of |n|. Every ring's
/// native from_integer must agree with this; the property tests hold the
/// two routes against each other.
template <Ring R>
R embed_by_doubling(const BigInt& n, const R& like) {
    R acc = zero(like);
    if (n.is_zero()) return acc;
    const R unit = one(like);
    // mpz_tstbit sees negative numbers in two's complement; walk |n| instead
    const mpz_class magnitude = abs(n.raw());
    mpz_srcptr z = magnitude.get_mpz_t();
    for (std::size_t i = mpz_sizeinbase(z, 2); i-- > 0;) {
        acc = acc + acc;
        if (mpz_tstbit(z, i)) acc = acc + unit;
    }
    return n.sign() < 0 ? -acc : acc;
}

/// base^e by square-and-multiply; e = 0 gives one(base).
template <Ring R>
R ring_pow(const R& base, std::uint64_t e) {
    R acc = one(base);
    R sq = base;
    while (e > 0) {
        if (e & 1u) acc = acc * sq;
        e >>= 1u;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

}  // namespace quadring
