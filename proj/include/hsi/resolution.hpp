#pragma once

/**
 * @file resolution.hpp
 * @brief Multigraded Betti numbers of monomial ideals.
 *
 * beta_{i,a}(I) is the dimension of the reduced homology in degree i-1 of the
 * upper Koszul simplicial complex
 *
 *     K^a(I) = { W subset of supp(a) : x^a / x_W in I },
 *
 * and vanishes unless x^a lies in the lcm lattice of G(I). Only these
 * candidate multidegrees are visited.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hsi/error.hpp"
#include "hsi/linalg.hpp"
#include "hsi/monomial.hpp"
#include "hsi/simplicial.hpp"

namespace hsi {

namespace detail {

/// Memoized membership tests x^b in I for a fixed ideal.
class MembershipCache {
public:
    explicit MembershipCache(const MonomialIdeal& ideal) : ideal_(&ideal) {}

    bool contains(const Monomial& u)
    {
        if (auto it = memo_.find(u); it != memo_.end())
            return it->second;
        const bool in = hsi::contains(*ideal_, u);
        memo_.emplace(u, in);
        return in;
    }

private:
    const MonomialIdeal* ideal_;
    std::unordered_map<Monomial, bool, MonomialHash> memo_;
};

inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a, MembershipCache& cache)
{
    require_same_arity(I, a);
    if (I.arity() > max_vertices)
        throw input_error("at most 64 variables are supported");
    const auto supp = a.support();
    const std::size_t k = supp.size();
    if (k >= 63)
        throw input_error("multidegree support too large to enumerate");

    // Bit t of `mask` selects supp[t].
    std::vector<std::uint64_t> faces;
    std::unordered_set<std::uint64_t> face_set;
    std::vector<exponent_t> e(a.exponents().begin(), a.exponents().end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t bits = 0;
        for (std::size_t t = 0; t < k; ++t)
            if ((mask >> t) & 1U) {
                --e[supp[t]];
                bits |= std::uint64_t{1} << supp[t];
            }
        if (cache.contains(Monomial(e))) {
            faces.push_back(bits);
            face_set.insert(bits);
        }
        for (std::size_t t = 0; t < k; ++t)
            if ((mask >> t) & 1U)
                ++e[supp[t]];
    }

    std::vector<Face> facets;
    for (std::uint64_t f : faces) {
        bool maximal = true;
        for (std::size_t t = 0; t < k && maximal; ++t) {
            const std::uint64_t bit = std::uint64_t{1} << supp[t];
            if ((f & bit) == 0 && face_set.contains(f | bit))
                maximal = false;
        }
        if (maximal)
            facets.push_back(Face(f));
    }
    return SimplicialComplex::from_facets(I.arity(), std::move(facets));
}

} // namespace detail

/// Faces W with x^a / x_W in I, returned by facets; void when x^a is not in I.
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a)
{
    detail::MembershipCache cache(I);
    return detail::upper_koszul_complex(I, a, cache);
}

/// Reduced homology dimensions, indexed by degree -1 .. dim.
struct HomologyRanks {
    std::vector<std::size_t> ranks;  // ranks[d + 1] is the rank in degree d

    std::size_t at(int degree) const
    {
        const int idx = degree + 1;
        return idx < 0 || idx >= static_cast<int>(ranks.size()) ? 0 : ranks[static_cast<std::size_t>(idx)];
    }
};

inline HomologyRanks reduced_homology_ranks(const SimplicialComplex& d, Field field = Field::rationals())
{
    HomologyRanks out;
    if (d.is_void())
        return out;

    // faces_by_size[s] lists all faces with s vertices; the empty face included.
    const std::size_t top = d.facets().back().size();
    std::vector<std::vector<std::uint64_t>> faces_by_size(top + 1);
    std::unordered_set<std::uint64_t> seen;
    for (Face f : d.facets()) {
        const std::uint64_t b = f.bits();
        // Enumerate submasks of b, including b and 0.
        for (std::uint64_t s = b;; s = (s - 1) & b) {
            if (seen.insert(s).second)
                faces_by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
            if (s == 0)
                break;
        }
    }
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(top + 1);
    for (std::size_t s = 0; s <= top; ++s) {
        std::sort(faces_by_size[s].begin(), faces_by_size[s].end());
        for (std::size_t j = 0; j < faces_by_size[s].size(); ++j)
            index[s].emplace(faces_by_size[s][j], j);
    }

    // boundary_rank[s] = rank of the boundary map from faces of size s to size s-1.
    std::vector<std::size_t> boundary_rank(top + 2, 0);
    for (std::size_t s = 1; s <= top; ++s) {
        IntMatrix m(faces_by_size[s - 1].size(), faces_by_size[s].size());
        for (std::size_t col = 0; col < faces_by_size[s].size(); ++col) {
            const std::uint64_t f = faces_by_size[s][col];
            int sign = 1;
            for (std::uint64_t b = f; b != 0; b &= b - 1) {
                const std::uint64_t vertex_bit = b & (~b + 1);
                m(index[s - 1].at(f & ~vertex_bit), col) = sign;
                sign = -sign;
            }
        }
        boundary_rank[s] = matrix_rank(m, field);
    }

    out.ranks.resize(top + 1);
    for (std::size_t s = 0; s <= top; ++s)
        out.ranks[s] = faces_by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
    return out;
}

/// All lcms of nonempty subsets of G(I), canonically sorted; closure under lcm with generators.
inline std::vector<Monomial> lcm_multidegrees(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw domain_error("lcm lattice of the zero ideal is empty");
    const auto& gens = I.generators();
    std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
    std::deque<Monomial> work(gens.begin(), gens.end());
    while (!work.empty()) {
        const Monomial x = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            Monomial l = lcm_of(x, g);
            if (seen.insert(l).second)
                work.push_back(std::move(l));
        }
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

struct BettiEntry {
    std::size_t index = 0;
    Monomial shift;
    std::uint64_t value = 0;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/**
 * Nonzero multigraded Betti numbers, sorted by homological index and then by
 * the canonical order of the shift monomial.
 */
class BettiTable {
public:
    BettiTable(std::size_t arity, std::vector<BettiEntry> entries) : arity_(arity), entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& x, const BettiEntry& y) {
            if (x.index != y.index)
                return x.index < y.index;
            return CanonicalLess{}(x.shift, y.shift);
        });
    }

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<BettiEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    std::uint64_t value(std::size_t i, const Monomial& a) const
    {
        for (const auto& e : entries_)
            if (e.index == i && e.shift == a)
                return e.value;
        return 0;
    }

    /// Shifts at index i in canonical order; empty for i < 0 or beyond the table.
    std::vector<Monomial> shifts(long long i) const
    {
        std::vector<Monomial> out;
        if (i < 0)
            return out;
        for (const auto& e : entries_)
            if (e.index == static_cast<std::size_t>(i))
                out.push_back(e.shift);
        return out;
    }

    /// Sum of beta_{i,a} over all a.
    std::uint64_t total(std::size_t i) const
    {
        std::uint64_t t = 0;
        for (const auto& e : entries_)
            if (e.index == i)
                t += e.value;
        return t;
    }

    std::size_t projective_dimension() const
    {
        if (entries_.empty())
            throw domain_error("projective dimension of the zero ideal is undefined");
        return entries_.back().index;
    }

    std::int64_t regularity() const
    {
        if (entries_.empty())
            throw domain_error("regularity of the zero ideal is undefined");
        std::int64_t reg = std::numeric_limits<std::int64_t>::min();
        for (const auto& e : entries_)
            reg = std::max(reg, static_cast<std::int64_t>(e.shift.degree()) - static_cast<std::int64_t>(e.index));
        return reg;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::size_t arity_ = 0;
    std::vector<BettiEntry> entries_;
};

inline BettiTable betti_table(const MonomialIdeal& I, Field field = Field::rationals())
{
    if (I.is_zero())
        return BettiTable(I.arity(), {});
    if (I.is_unit())
        return BettiTable(I.arity(), {BettiEntry{0, Monomial::one(I.arity()), 1}});

    detail::MembershipCache cache(I);
    std::vector<BettiEntry> entries;
    for (const auto& a : lcm_multidegrees(I)) {
        const auto complex = detail::upper_koszul_complex(I, a, cache);
        const auto h = reduced_homology_ranks(complex, field);
        for (std::size_t idx = 0; idx < h.ranks.size(); ++idx)
            if (h.ranks[idx] != 0)
                entries.push_back(BettiEntry{idx, a, h.ranks[idx]});
    }
    return BettiTable(I.arity(), std::move(entries));
}

inline std::vector<Monomial> multigraded_shifts(const MonomialIdeal& I, long long i, Field field = Field::rationals())
{
    if (I.is_zero() || i < 0)
        return {};
    return betti_table(I, field).shifts(i);
}

inline std::size_t projective_dimension(const MonomialIdeal& I, Field field = Field::rationals())
{
    if (I.is_zero())
        throw domain_error("projective dimension of the zero ideal is undefined");
    return betti_table(I, field).projective_dimension();
}

inline std::int64_t regularity(const MonomialIdeal& I, Field field = Field::rationals())
{
    if (I.is_zero())
        throw domain_error("regularity of the zero ideal is undefined");
    return betti_table(I, field).regularity();
}

} // namespace hsi
