#pragma once

/**
 * @file bipoly.hpp
 * @brief Sparse integer polynomials in two variables T and D.
 *
 * Canonical form: a map from exponent pairs to nonzero coefficients,
 * ordered graded-lexicographically (total degree first, then T-degree),
 * highest term first. That order is also the rendering order, so text
 * output is canonical too.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/ring.hpp"

namespace quadring {

struct Monomial {
    std::uint32_t t_exp = 0;
    std::uint32_t d_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex, descending: higher total degree first, ties broken by
/// higher T-exponent.
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const std::uint64_t da = std::uint64_t(a.t_exp) + a.d_exp;
        const std::uint64_t db = std::uint64_t(b.t_exp) + b.d_exp;
        if (da != db) return da > db;
        return a.t_exp > b.t_exp;
    }
};

class BiPoly {
public:
    using TermMap = std::map<Monomial, BigInt, GradedLexDescending>;

    BiPoly() = default;  // zero polynomial: empty map

    static BiPoly constant(BigInt c) { return BiPoly().with_term(std::move(c), 0, 0); }
    static BiPoly var_t() { return BiPoly().with_term(BigInt(1), 1, 0); }
    static BiPoly var_d() { return BiPoly().with_term(BigInt(1), 0, 1); }
    static BiPoly term(BigInt c, std::uint32_t t_exp, std::uint32_t d_exp) {
        return BiPoly().with_term(std::move(c), t_exp, d_exp);
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [mono, c] : b.terms_) r.accumulate(mono, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [mono, c] : b.terms_) r.accumulate(mono, -c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.accumulate(Monomial{ma.t_exp + mb.t_exp, ma.d_exp + mb.d_exp}, ca * cb);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of T^i D^j, zero if the monomial is absent.
    BigInt coefficient(std::uint32_t t_exp, std::uint32_t d_exp) const {
        auto it = terms_.find(Monomial{t_exp, d_exp});
        return it == terms_.end() ? BigInt() : it->second;
    }

    std::string render() const;

private:
    BiPoly& with_term(BigInt c, std::uint32_t t_exp, std::uint32_t d_exp) {
        accumulate(Monomial{t_exp, d_exp}, std::move(c));
        return *this;
    }
    void accumulate(const Monomial& mono, BigInt c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, std::move(c));
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline BiPoly zero(const BiPoly&) { return BiPoly(); }
inline BiPoly one(const BiPoly&) { return BiPoly::constant(BigInt(1)); }
inline BiPoly from_integer(const BigInt& n, const BiPoly&) { return BiPoly::constant(n); }
inline std::string to_text(const BiPoly& p) { return p.render(); }

/// Evaluates p at (t, d) in any ring, using the canonical integer
/// embedding for the coefficients.
template <Ring R>
R poly_eval(const BiPoly& p, const R& t, const R& d) {
    std::uint32_t max_t = 0, max_d = 0;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.t_exp > max_t) max_t = mono.t_exp;
        if (mono.d_exp > max_d) max_d = mono.d_exp;
    }
    std::vector<R> t_pow, d_pow;
    t_pow.reserve(max_t + 1);
    d_pow.reserve(max_d + 1);
    t_pow.push_back(one(t));
    for (std::uint32_t i = 1; i <= max_t; ++i) t_pow.push_back(t_pow.back() * t);
    d_pow.push_back(one(t));
    for (std::uint32_t j = 1; j <= max_d; ++j) d_pow.push_back(d_pow.back() * d);

    R acc = zero(t);
    for (const auto& [mono, c] : p.terms())
        acc = acc + from_integer(c, t) * t_pow[mono.t_exp] * d_pow[mono.d_exp];
    return acc;
}

}  // namespace quadring
