#pragma once

/**
 * @file simplicial.hpp
 * @brief Simplicial complexes given by facets, Alexander duals of squarefree
 *        ideals, and shelling orders.
 *
 * Faces are bitsets over at most 64 vertices, indexed from 0.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsi/detail/ordered_search.hpp"
#include "hsi/error.hpp"
#include "hsi/monomial.hpp"

namespace hsi {

inline constexpr std::size_t max_vertices = 64;

class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    Face(std::initializer_list<std::size_t> vertices) : Face(std::span<const std::size_t>(vertices.begin(), vertices.size())) {}

    explicit Face(std::span<const std::size_t> vertices)
    {
        for (std::size_t v : vertices) {
            if (v >= max_vertices)
                throw input_error("vertex index " + std::to_string(v) + " exceeds the 64-vertex limit");
            bits_ |= std::uint64_t{1} << v;
        }
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int dimension() const noexcept { return static_cast<int>(size()) - 1; }
    constexpr bool contains(std::size_t v) const noexcept { return v < max_vertices && ((bits_ >> v) & 1U); }
    constexpr bool is_subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr Face intersect(Face other) const noexcept { return Face(bits_ & other.bits_); }
    constexpr Face without(std::size_t v) const noexcept { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    /// Largest vertex index + 1, or 0 for the empty face.
    constexpr std::size_t span_end() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<std::size_t> vertices() const
    {
        std::vector<std::size_t> v;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            v.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return v;
    }

    friend constexpr bool operator==(Face, Face) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical face order: by size, then lexicographically on ascending vertex lists.
struct FaceLess {
    bool operator()(Face a, Face b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        const auto va = a.vertices(), vb = b.vertices();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }
};

/**
 * A simplicial complex on vertices 0..n-1 stored by its facets.
 * The void complex has no facets; the irrelevant complex has the single facet {}.
 */
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> subsets)
    {
        if (vertex_count > max_vertices)
            throw input_error("at most 64 vertices are supported");
        const std::uint64_t universe =
            vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
        for (Face f : subsets)
            if ((f.bits() & ~universe) != 0)
                throw input_error("face contains a vertex outside [0, " + std::to_string(vertex_count) + ")");

        std::sort(subsets.begin(), subsets.end(), FaceLess{});
        subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
        std::vector<Face> facets;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = i + 1; j < subsets.size() && maximal; ++j)
                maximal = !subsets[i].is_subset_of(subsets[j]);
            if (maximal)
                facets.push_back(subsets[i]);
        }
        return SimplicialComplex(vertex_count, std::move(facets));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::size_t n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {}

    std::size_t n_ = 0;
    std::vector<Face> facets_;
};

inline bool is_pure(const SimplicialComplex& d)
{
    const auto& f = d.facets();
    return std::all_of(f.begin(), f.end(), [&](Face x) { return x.size() == f.front().size(); });
}

inline int dimension(const SimplicialComplex& d)
{
    if (d.is_void())
        throw domain_error("dimension of the void complex is undefined");
    // Facets are sorted by size.
    return d.facets().back().dimension();
}

/**
 * Facets [n] \ supp(u) for u in G(I). For I = I_Delta these are the
 * complements of the minimal nonfaces of Delta, i.e. the facets of its
 * Alexander dual.
 */
inline SimplicialComplex alexander_dual_facets(const MonomialIdeal& I)
{
    if (!I.is_proper_nonzero())
        throw domain_error("Alexander dual requires a proper nonzero ideal");
    if (!is_squarefree(I))
        throw domain_error("Alexander dual requires a squarefree ideal");
    if (I.arity() > max_vertices)
        throw input_error("at most 64 variables are supported");
    std::vector<Face> facets;
    facets.reserve(I.size());
    const std::uint64_t universe =
        I.arity() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << I.arity()) - 1;
    for (const auto& g : I.generators()) {
        const auto s = g.support();
        facets.push_back(Face(universe & ~Face(std::span<const std::size_t>(s)).bits()));
    }
    return SimplicialComplex::from_facets(I.arity(), std::move(facets));
}

struct ShellingOrder {
    std::vector<Face> order;
};

/**
 * True when the complex generated by { F_j ∩ candidate : F_j in prefix } is
 * pure of dimension dim(candidate) - 1. An empty prefix always extends.
 */
inline bool extends_shelling(std::span<const Face> prefix, Face candidate)
{
    if (prefix.empty())
        return true;
    if (candidate.empty())
        return false;  // the intersection complex {{}} has dimension -1, never -2
    const std::size_t target = candidate.size() - 1;
    std::vector<Face> ridges;
    for (Face f : prefix) {
        const Face g = f.intersect(candidate);
        if (g.size() == target && std::find(ridges.begin(), ridges.end(), g) == ridges.end())
            ridges.push_back(g);
    }
    if (ridges.empty())
        return false;
    for (Face f : prefix) {
        const Face g = f.intersect(candidate);
        if (g.size() == target)
            continue;
        const bool covered =
            std::any_of(ridges.begin(), ridges.end(), [&](Face r) { return g.is_subset_of(r); });
        if (!covered)
            return false;
    }
    return true;
}

inline bool is_shelling_order(const SimplicialComplex& d, std::span<const Face> order)
{
    auto sorted = std::vector<Face>(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end(), FaceLess{});
    if (sorted != d.facets())
        throw input_error("order is not a permutation of the facets");
    for (std::size_t k = 1; k < order.size(); ++k)
        if (!extends_shelling(order.subspan(0, k), order[k]))
            return false;
    return true;
}

struct ShellingSearch {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<ShellingOrder> order;
};

/// Backtracking search over facet sequences; facets are tried in canonical order.
inline ShellingSearch find_shelling_order(const SimplicialComplex& d,
                                          std::uint64_t budget = default_search_budget)
{
    if (d.is_void())
        throw domain_error("shelling order of the void complex is undefined");
    const auto& facets = d.facets();
    std::vector<Face> scratch;
    auto extends = [&](const std::vector<std::size_t>& prefix, std::size_t c) {
        scratch.clear();
        for (std::size_t i : prefix)
            scratch.push_back(facets[i]);
        return extends_shelling(scratch, facets[c]);
    };
    auto found = detail::search_ordering(facets.size(), extends, budget);

    ShellingSearch result;
    result.outcome = found.outcome;
    if (found.outcome == SearchOutcome::found) {
        ShellingOrder s;
        for (std::size_t i : found.order)
            s.order.push_back(facets[i]);
        result.order = std::move(s);
    }
    return result;
}

} // namespace hsi
