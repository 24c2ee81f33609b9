#pragma once

/**
 * @file properties.hpp
 * @brief Linear resolution, linear quotients, polymatroidality and their
 *        homological variants.
 *
 * Linear quotients has two independent deciders: a direct backtracking search
 * over generator orders, and the Alexander-dual route (polarize, dualize,
 * search for a shelling order). Either one can validate the other.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsi/detail/ordered_search.hpp"
#include "hsi/error.hpp"
#include "hsi/monomial.hpp"
#include "hsi/polarization.hpp"
#include "hsi/resolution.hpp"
#include "hsi/shifts.hpp"
#include "hsi/simplicial.hpp"

namespace hsi {

enum class LinearQuotientsAlgorithm { direct, dual_shelling };

/// Three-valued outcome; budget exhaustion is never reported as `fails`.
enum class Verdict { holds, fails, budget_exceeded };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct AdmissibleOrder {
    std::vector<Monomial> order;
};

struct PropertyReport {
    Verdict verdict = Verdict::fails;
    std::optional<AdmissibleOrder> order;        // set when linear quotients hold
    std::optional<std::size_t> failing_index;    // homological variants: first i that fails or exceeds budget

    bool holds() const noexcept { return verdict == Verdict::holds; }
    bool budget_exceeded() const noexcept { return verdict == Verdict::budget_exceeded; }
};

class search_budget_exceeded : public std::runtime_error {
public:
    search_budget_exceeded() : std::runtime_error("search budget exceeded") {}
};

namespace detail {

inline void require_proper_nonzero(const MonomialIdeal& I, const char* what)
{
    if (!I.is_proper_nonzero())
        throw domain_error(std::string(what) + " requires a proper nonzero ideal");
}

/// (prefix) : candidate is generated by variables.
inline bool colon_is_linear(std::span<const Monomial> prefix, const Monomial& candidate)
{
    if (prefix.empty())
        return true;
    std::vector<Monomial> q;
    q.reserve(prefix.size());
    for (const auto& u : prefix)
        q.push_back(colon_quotient(u, candidate));
    const auto colon = minimal_generators(candidate.arity(), std::move(q));
    return std::all_of(colon.generators().begin(), colon.generators().end(),
                       [](const Monomial& g) { return g.degree() == 1; });
}

inline PropertyReport linear_quotients_direct(const MonomialIdeal& I, std::uint64_t budget)
{
    const auto& gens = I.generators();
    std::vector<Monomial> scratch;
    auto extends = [&](const std::vector<std::size_t>& prefix, std::size_t c) {
        scratch.clear();
        for (std::size_t i : prefix)
            scratch.push_back(gens[i]);
        return colon_is_linear(scratch, gens[c]);
    };
    const auto found = search_ordering(gens.size(), extends, budget);

    PropertyReport r;
    switch (found.outcome) {
    case SearchOutcome::found: {
        r.verdict = Verdict::holds;
        AdmissibleOrder o;
        for (std::size_t i : found.order)
            o.order.push_back(gens[i]);
        r.order = std::move(o);
        break;
    }
    case SearchOutcome::none: r.verdict = Verdict::fails; break;
    case SearchOutcome::budget_exceeded: r.verdict = Verdict::budget_exceeded; break;
    }
    return r;
}

inline PropertyReport linear_quotients_dual_shelling(const MonomialIdeal& I, std::uint64_t budget)
{
    const PolarizedIdeal pol = polarize_ideal(I);
    const SimplicialComplex dual = alexander_dual_facets(pol.ideal);
    const ShellingSearch s = find_shelling_order(dual, budget);

    PropertyReport r;
    if (s.outcome == SearchOutcome::none) {
        r.verdict = Verdict::fails;
        return r;
    }
    if (s.outcome == SearchOutcome::budget_exceeded) {
        r.verdict = Verdict::budget_exceeded;
        return r;
    }

    // Facet F of the dual corresponds to the polarized generator x_{[n'] \ F}.
    const std::size_t n = pol.ideal.arity();
    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, const Monomial*> by_support;
    for (const auto& g : pol.ideal.generators()) {
        const auto supp = g.support();
        by_support.emplace(Face(std::span<const std::size_t>(supp)).bits(), &g);
    }
    AdmissibleOrder o;
    for (Face f : s.order->order) {
        const auto it = by_support.find(universe & ~f.bits());
        if (it == by_support.end())
            throw invariant_error("shelling facet does not match a polarized generator");
        Monomial u = depolarize_monomial(*it->second, pol);
        if (!is_minimal_generator(I, u))
            throw invariant_error("depolarized generator is not in G(I)");
        o.order.push_back(std::move(u));
    }
    r.verdict = Verdict::holds;
    r.order = std::move(o);
    return r;
}

} // namespace detail

inline bool has_linear_resolution(const BettiTable& table, const MonomialIdeal& I)
{
    detail::require_proper_nonzero(I, "hasLinearResolution");
    return static_cast<std::int64_t>(indeg(I)) == table.regularity();
}

/// indeg(I) == reg(I).
inline bool has_linear_resolution(const MonomialIdeal& I, Field field = Field::rationals())
{
    detail::require_proper_nonzero(I, "hasLinearResolution");
    return has_linear_resolution(betti_table(I, field), I);
}

/**
 * True when `order` lists G(I) so that each (u_1, ..., u_{k-1}) : u_k is
 * generated by variables. Throws input_error if `order` is not a permutation of G(I).
 */
inline bool is_admissible_order(const MonomialIdeal& I, std::span<const Monomial> order)
{
    for (const auto& u : order)
        require_same_arity(I, u);
    std::vector<Monomial> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
    if (sorted != I.generators())
        throw input_error("order is not a permutation of the minimal generators");
    for (std::size_t k = 1; k < order.size(); ++k)
        if (!detail::colon_is_linear(order.subspan(0, k), order[k]))
            return false;
    return true;
}

inline PropertyReport has_linear_quotients(const MonomialIdeal& I,
                                           LinearQuotientsAlgorithm algorithm = LinearQuotientsAlgorithm::direct,
                                           std::uint64_t budget = default_search_budget)
{
    detail::require_proper_nonzero(I, "hasLinearQuotients");
    return algorithm == LinearQuotientsAlgorithm::direct ? detail::linear_quotients_direct(I, budget)
                                                         : detail::linear_quotients_dual_shelling(I, budget);
}

/**
 * An admissible order of G(I), or nullopt when I lacks linear quotients.
 * The default follows the dual route: shell the Alexander dual of I^pol,
 * then depolarize. Throws search_budget_exceeded if the search gives up.
 */
inline std::optional<AdmissibleOrder>
admissible_order(const MonomialIdeal& I,
                 LinearQuotientsAlgorithm algorithm = LinearQuotientsAlgorithm::dual_shelling,
                 std::uint64_t budget = default_search_budget)
{
    auto r = has_linear_quotients(I, algorithm, budget);
    if (r.budget_exceeded())
        throw search_budget_exceeded();
    if (!r.holds())
        return std::nullopt;
    if (!is_admissible_order(I, r.order->order))
        throw invariant_error("search returned an order that is not admissible");
    return std::move(r.order);
}

/// Equigenerated, and the exchange property holds on G(I).
inline bool is_polymatroidal(const MonomialIdeal& I)
{
    detail::require_proper_nonzero(I, "isPolymatroidal");
    if (!is_equigenerated(I))
        return false;
    const auto& gens = I.generators();
    const std::size_t n = I.arity();
    for (const auto& u : gens)
        for (const auto& v : gens)
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] <= v[i])
                    continue;
                std::vector<exponent_t> base(u.exponents().begin(), u.exponents().end());
                --base[i];
                bool exchanged = false;
                for (std::size_t j = 0; j < n && !exchanged; ++j) {
                    if (u[j] >= v[j])
                        continue;
                    ++base[j];
                    exchanged = is_minimal_generator(I, Monomial(base));
                    --base[j];
                }
                if (!exchanged)
                    return false;
            }
    return true;
}

namespace detail {

/// Applies `check` to HS_0(I), ..., HS_pd(I); reports the first index that does not hold.
template <class Check>
PropertyReport homological_property(const MonomialIdeal& I, Field field, Check&& check)
{
    const BettiTable table = betti_table(I, field);
    const std::size_t pd = table.projective_dimension();
    for (std::size_t i = 0; i <= pd; ++i) {
        const MonomialIdeal hs = homological_shift_ideal(table, static_cast<long long>(i));
        const Verdict v = check(hs);
        if (v != Verdict::holds) {
            PropertyReport r;
            r.verdict = v;
            r.failing_index = i;
            return r;
        }
    }
    return PropertyReport{Verdict::holds, std::nullopt, std::nullopt};
}

} // namespace detail

inline PropertyReport has_homological_linear_resolution(const MonomialIdeal& I, Field field = Field::rationals())
{
    detail::require_proper_nonzero(I, "hasHomologicalLinearResolution");
    return detail::homological_property(I, field, [&](const MonomialIdeal& hs) {
        return has_linear_resolution(hs, field) ? Verdict::holds : Verdict::fails;
    });
}

inline PropertyReport
has_homological_linear_quotients(const MonomialIdeal& I, Field field = Field::rationals(),
                                 LinearQuotientsAlgorithm algorithm = LinearQuotientsAlgorithm::direct,
                                 std::uint64_t budget = default_search_budget)
{
    detail::require_proper_nonzero(I, "hasHomologicalLinearQuotients");
    return detail::homological_property(
        I, field, [&](const MonomialIdeal& hs) { return has_linear_quotients(hs, algorithm, budget).verdict; });
}

inline PropertyReport is_homological_polymatroidal(const MonomialIdeal& I, Field field = Field::rationals())
{
    detail::require_proper_nonzero(I, "isHomologicalPolymatroidal");
    return detail::homological_property(
        I, field, [](const MonomialIdeal& hs) { return is_polymatroidal(hs) ? Verdict::holds : Verdict::fails; });
}

} // namespace hsi
