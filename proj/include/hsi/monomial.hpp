#pragma once

/**
 * @file monomial.hpp
 * @brief Monomials x^a and monomial ideals given by their minimal generators.
 *
 * Variables are indexed 0..n-1 internally; the CLI maps them to names.
 * Every value here is immutable once built, so sharing across threads is safe.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hsi/error.hpp"

namespace hsi {

using exponent_t = std::uint32_t;
using Multidegree = std::vector<std::int64_t>;

inline constexpr std::int64_t default_exponent_limit = 2147483647;  // 2^31 - 1

class Monomial {
public:
    Monomial() = default;

    /// Unchecked construction from non-negative exponents; see to_monomial for validation.
    explicit Monomial(std::vector<exponent_t> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(std::size_t arity) { return Monomial(std::vector<exponent_t>(arity, 0)); }

    static Monomial variable(std::size_t arity, std::size_t index)
    {
        if (index >= arity)
            throw input_error("variable index " + std::to_string(index) + " out of range for arity " +
                              std::to_string(arity));
        std::vector<exponent_t> e(arity, 0);
        e[index] = 1;
        return Monomial(std::move(e));
    }

    std::size_t arity() const noexcept { return exps_.size(); }
    std::span<const exponent_t> exponents() const noexcept { return exps_; }
    exponent_t operator[](std::size_t i) const { return exps_[i]; }

    std::uint64_t degree() const noexcept
    {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](exponent_t e) { return e == 0; });
    }

    bool is_squarefree() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](exponent_t e) { return e <= 1; });
    }

    /// Indices i with x_i dividing this monomial, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0)
                s.push_back(i);
        return s;
    }

    Monomial times_variable(std::size_t i, std::int64_t limit = default_exponent_limit) const
    {
        if (i >= exps_.size())
            throw input_error("variable index out of range");
        if (static_cast<std::int64_t>(exps_[i]) + 1 > limit)
            throw input_error("exponent exceeds limit");
        Monomial r = *this;
        ++r.exps_[i];
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<exponent_t> exps_;
};

/**
 * Canonical total order: ascending total degree, ties broken lexicographically
 * with the larger exponent vector first (x_1 > x_2 > ... > x_n), so that
 * a*b*c sorts before a*b*d.
 */
struct CanonicalLess {
    bool operator()(const Monomial& u, const Monomial& v) const
    {
        const auto du = u.degree(), dv = v.degree();
        if (du != dv)
            return du < dv;
        auto eu = u.exponents(), ev = v.exponents();
        return std::lexicographical_compare(ev.begin(), ev.end(), eu.begin(), eu.end());
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& u) const noexcept
    {
        std::size_t h = u.arity();
        for (exponent_t e : u.exponents())
            h ^= std::hash<exponent_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

namespace detail {

inline void require_same_arity(const Monomial& u, const Monomial& v)
{
    if (u.arity() != v.arity())
        throw input_error("arity mismatch: " + std::to_string(u.arity()) + " vs " + std::to_string(v.arity()));
}

} // namespace detail

/// Builds x^a in a ring with `arity` variables, rejecting negative or oversized exponents.
inline Monomial to_monomial(std::size_t arity, std::span<const std::int64_t> a,
                            std::int64_t limit = default_exponent_limit)
{
    if (arity == 0)
        throw input_error("ring arity must be positive");
    if (a.size() != arity)
        throw input_error("multidegree has length " + std::to_string(a.size()) + ", expected " +
                          std::to_string(arity));
    std::vector<exponent_t> e(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        if (a[i] < 0)
            throw input_error("negative exponent at position " + std::to_string(i));
        if (a[i] > limit)
            throw input_error("exponent at position " + std::to_string(i) + " exceeds limit");
        e[i] = static_cast<exponent_t>(a[i]);
    }
    return Monomial(std::move(e));
}

inline Monomial to_monomial(std::size_t arity, std::initializer_list<std::int64_t> a)
{
    return to_monomial(arity, std::span<const std::int64_t>(a.begin(), a.size()));
}

inline Multidegree to_multidegree(const Monomial& u)
{
    return Multidegree(u.exponents().begin(), u.exponents().end());
}

inline bool divides(const Monomial& u, const Monomial& v)
{
    detail::require_same_arity(u, v);
    for (std::size_t i = 0; i < u.arity(); ++i)
        if (u[i] > v[i])
            return false;
    return true;
}

inline Monomial lcm_of(const Monomial& u, const Monomial& v)
{
    detail::require_same_arity(u, v);
    std::vector<exponent_t> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(u[i], v[i]);
    return Monomial(std::move(e));
}

inline Monomial gcd_of(const Monomial& u, const Monomial& v)
{
    detail::require_same_arity(u, v);
    std::vector<exponent_t> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(u[i], v[i]);
    return Monomial(std::move(e));
}

/// u / gcd(u, v): the generator of the colon ideal (u) : v.
inline Monomial colon_quotient(const Monomial& u, const Monomial& v)
{
    detail::require_same_arity(u, v);
    std::vector<exponent_t> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = u[i] > v[i] ? u[i] - v[i] : 0;
    return Monomial(std::move(e));
}

/// Exact quotient v / u; requires u | v.
inline Monomial exact_quotient(const Monomial& v, const Monomial& u)
{
    if (!divides(u, v))
        throw domain_error("monomial does not divide");
    return colon_quotient(v, u);
}

inline Monomial product(const Monomial& u, const Monomial& v, std::int64_t limit = default_exponent_limit)
{
    detail::require_same_arity(u, v);
    std::vector<exponent_t> e(u.arity());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::int64_t s = std::int64_t{u[i]} + std::int64_t{v[i]};
        if (s > limit)
            throw input_error("exponent exceeds limit");
        e[i] = static_cast<exponent_t>(s);
    }
    return Monomial(std::move(e));
}

class MonomialIdeal;
MonomialIdeal minimal_generators(std::size_t arity, std::vector<Monomial> monomials);

/**
 * A monomial ideal stored as its minimal generating set G(I) in canonical order.
 * The zero ideal has no generators; the unit ideal has the single generator 1.
 */
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity, {}); }
    static MonomialIdeal unit(std::size_t arity) { return MonomialIdeal(arity, {Monomial::one(arity)}); }

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimal_generators(std::size_t, std::vector<Monomial>);
    MonomialIdeal(std::size_t arity, std::vector<Monomial> gens) : arity_(arity), gens_(std::move(gens)) {}

    std::size_t arity_ = 0;
    std::vector<Monomial> gens_;
};

/// Removes duplicates and non-minimal elements and sorts canonically.
inline MonomialIdeal minimal_generators(std::size_t arity, std::vector<Monomial> monomials)
{
    if (arity == 0)
        throw input_error("ring arity must be positive");
    for (const auto& u : monomials)
        if (u.arity() != arity)
            throw input_error("monomial arity does not match ring arity");
    std::sort(monomials.begin(), monomials.end(), CanonicalLess{});
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    // Any proper divisor of u has smaller degree, hence precedes u.
    std::vector<Monomial> kept;
    for (auto& u : monomials) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return divides(g, u); });
        if (!redundant)
            kept.push_back(std::move(u));
    }
    return MonomialIdeal(arity, std::move(kept));
}

inline void require_same_arity(const MonomialIdeal& I, const Monomial& u)
{
    if (I.arity() != u.arity())
        throw input_error("arity mismatch between ideal and monomial");
}

inline bool contains(const MonomialIdeal& I, const Monomial& u)
{
    require_same_arity(I, u);
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return divides(g, u); });
}

inline bool equals_ideal(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (I.arity() != J.arity())
        throw input_error("arity mismatch between ideals");
    return I.generators() == J.generators();
}

/// Union of the supports of the minimal generators, as ascending variable indices.
inline std::vector<std::size_t> support_ideal(const MonomialIdeal& I)
{
    std::vector<bool> seen(I.arity(), false);
    for (const auto& g : I.generators())
        for (std::size_t i : g.support())
            seen[i] = true;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i])
            s.push_back(i);
    return s;
}

inline bool is_fully_supported(const MonomialIdeal& I) { return support_ideal(I).size() == I.arity(); }

inline Multidegree bounding_multidegree(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw domain_error("bounding multidegree of the zero ideal is undefined");
    Multidegree d(I.arity(), 0);
    for (const auto& g : I.generators())
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = std::max<std::int64_t>(d[i], g[i]);
    return d;
}

inline std::uint64_t indeg(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw domain_error("initial degree of the zero ideal is undefined");
    // Canonical order puts a generator of minimal degree first.
    return I.generators().front().degree();
}

inline bool is_equigenerated(const MonomialIdeal& I)
{
    const auto& g = I.generators();
    return g.empty() || g.front().degree() == g.back().degree();
}

inline bool is_squarefree(const MonomialIdeal& I)
{
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

/// I : w, generated by the colon quotients u / gcd(u, w) of the generators.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& w)
{
    require_same_arity(I, w);
    if (I.is_zero())
        throw domain_error("colon of the zero ideal");
    std::vector<Monomial> q;
    q.reserve(I.size());
    for (const auto& g : I.generators())
        q.push_back(colon_quotient(g, w));
    return minimal_generators(I.arity(), std::move(q));
}

/// Membership in G(I), by binary search over the canonical order.
inline bool is_minimal_generator(const MonomialIdeal& I, const Monomial& u)
{
    return std::binary_search(I.generators().begin(), I.generators().end(), u, CanonicalLess{});
}

} // namespace hsi
