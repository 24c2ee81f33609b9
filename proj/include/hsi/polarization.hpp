#pragma once

/**
 * @file polarization.hpp
 * @brief Polarization x_i^a -> x_{i,1} ... x_{i,a} and its inverse substitution.
 *
 * Polarized variables are laid out block-major: x_{i,j} (j = 1..shape[i]) has
 * index offset(i) + j - 1, where offset(i) = shape[0] + ... + shape[i-1].
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsi/error.hpp"
#include "hsi/monomial.hpp"

namespace hsi {

struct PolarizedIdeal {
    MonomialIdeal ideal = MonomialIdeal::zero(1);
    std::size_t original_arity = 0;
    std::vector<std::int64_t> ring_shape;     // deg_{x_i}(I) for each original variable
    std::vector<std::size_t> variable_map;    // polarized index -> original index
};

namespace detail {

inline std::vector<std::size_t> block_offsets(std::span<const std::int64_t> shape)
{
    std::vector<std::size_t> off(shape.size() + 1, 0);
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 0)
            throw input_error("ring shape entries must be non-negative");
        off[i + 1] = off[i] + static_cast<std::size_t>(shape[i]);
    }
    return off;
}

} // namespace detail

inline Monomial polarize_monomial(const Monomial& u, std::span<const std::int64_t> ring_shape)
{
    if (u.arity() != ring_shape.size())
        throw input_error("ring shape length does not match monomial arity");
    const auto off = detail::block_offsets(ring_shape);
    if (off.back() == 0)
        throw input_error("polarized ring has no variables");
    std::vector<exponent_t> e(off.back(), 0);
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (static_cast<std::int64_t>(u[i]) > ring_shape[i])
            throw input_error("exponent of variable " + std::to_string(i) + " exceeds the ring shape");
        for (std::size_t j = 0; j < u[i]; ++j)
            e[off[i] + j] = 1;
    }
    return Monomial(std::move(e));
}

/// Substitutes x_{i,j} -> x_i.
inline Monomial depolarize_monomial(const Monomial& w, std::span<const std::size_t> variable_map,
                                    std::size_t original_arity)
{
    if (w.arity() != variable_map.size())
        throw input_error("variable map length does not match monomial arity");
    std::vector<exponent_t> e(original_arity, 0);
    for (std::size_t k = 0; k < w.arity(); ++k) {
        if (variable_map[k] >= original_arity)
            throw input_error("variable map points outside the original ring");
        e[variable_map[k]] += w[k];
    }
    return Monomial(std::move(e));
}

inline Monomial depolarize_monomial(const Monomial& w, const PolarizedIdeal& p)
{
    return depolarize_monomial(w, p.variable_map, p.original_arity);
}

/// I^pol in the minimal polarized ring, whose shape is the bounding multidegree of I.
inline PolarizedIdeal polarize_ideal(const MonomialIdeal& I)
{
    if (!I.is_proper_nonzero())
        throw domain_error("polarization requires a proper nonzero ideal");
    PolarizedIdeal p;
    p.original_arity = I.arity();
    p.ring_shape = bounding_multidegree(I);
    for (std::size_t i = 0; i < p.ring_shape.size(); ++i)
        for (std::int64_t j = 0; j < p.ring_shape[i]; ++j)
            p.variable_map.push_back(i);

    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators())
        gens.push_back(polarize_monomial(g, p.ring_shape));
    p.ideal = minimal_generators(p.variable_map.size(), std::move(gens));
    if (p.ideal.size() != I.size())
        throw invariant_error("polarization changed the number of minimal generators");
    return p;
}

} // namespace hsi
