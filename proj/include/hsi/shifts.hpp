#pragma once

/**
 * @file shifts.hpp
 * @brief Homological shift ideals HS_i(I) and the socle of a monomial ideal.
 */

#include <cstddef>
#include <vector>

#include "hsi/error.hpp"
#include "hsi/monomial.hpp"
#include "hsi/resolution.hpp"

namespace hsi {

/// HS_i(I) read off an existing Betti table. Zero for i < 0 or i > pd(I).
inline MonomialIdeal homological_shift_ideal(const BettiTable& table, long long i)
{
    // Shifts at i >= 1 need not be a minimal generating set.
    return minimal_generators(table.arity(), table.shifts(i));
}

inline MonomialIdeal homological_shift_ideal(const MonomialIdeal& I, long long i, Field field = Field::rationals())
{
    if (I.is_zero() || i < 0)
        return MonomialIdeal::zero(I.arity());
    return homological_shift_ideal(betti_table(I, field), i);
}

/// Canonically sorted, duplicate-free list of monomials (not an ideal).
struct MonomialList {
    std::size_t arity = 0;
    std::vector<Monomial> monomials;

    friend bool operator==(const MonomialList&, const MonomialList&) = default;
};

/**
 * soc(I) from the top multigraded shifts: beta_{n-1,a}(I) != 0 exactly when
 * x^a / (x_1 ... x_n) is a socle monomial.
 */
inline MonomialList socle(const BettiTable& table)
{
    const std::size_t n = table.arity();
    const Monomial all_vars(std::vector<exponent_t>(n, 1));
    MonomialList out{n, {}};
    for (const auto& w : table.shifts(static_cast<long long>(n) - 1)) {
        if (!divides(all_vars, w))
            throw invariant_error("top multigraded shift not divisible by x_1 ... x_n");
        out.monomials.push_back(exact_quotient(w, all_vars));
    }
    // Dividing by a fixed monomial preserves the canonical order.
    return out;
}

inline MonomialList socle(const MonomialIdeal& I, Field field = Field::rationals())
{
    if (!I.is_proper_nonzero())
        throw domain_error("socle requires a proper nonzero ideal");
    return socle(betti_table(I, field));
}

} // namespace hsi
