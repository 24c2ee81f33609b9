#pragma once

// Shared test inputs: the worked examples and seeded random ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hsi/io.hpp"
#include "hsi/monomial.hpp"

namespace hsi::testing {

inline MonomialIdeal ideal_from(const std::string& ring, const std::string& gens)
{
    return parse_ideal_file("ring: " + ring + "\ngens: " + gens + "\n").ideal;
}

inline VariableNames names_of(const std::string& ring)
{
    return parse_ideal_file("ring: " + ring + "\ngens:\n").variables;
}

inline Monomial mono(const std::string& ring, const std::string& text)
{
    return parse_monomial(text, names_of(ring));
}

inline std::vector<Monomial> monos(const std::string& ring, const std::string& text)
{
    return parse_monomial_list(text, names_of(ring));
}

inline const std::string abc = "a b c d e f";
inline const std::string x123 = "x1 x2 x3";

/// Cubic ideal with linear resolution but no linear quotients.
inline MonomialIdeal session_one_ideal()
{
    return ideal_from(abc, "a*b*d, a*b*f, a*c*e, a*d*c, a*e*f, b*d*e, b*c*f, b*c*e, c*d*f, d*e*f");
}

inline MonomialIdeal session_two_ideal() { return ideal_from(abc, "a*b, a*c, a*d, d*e, d*f"); }

/// Principal Borel ideal B(x2^2 x3).
inline MonomialIdeal borel_ideal()
{
    return ideal_from(x123, "x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x2^3, x2^2*x3");
}

inline MonomialIdeal maximal_ideal(std::size_t n)
{
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < n; ++i)
        g.push_back(Monomial::variable(n, i));
    return minimal_generators(n, g);
}

/**
 * Random ideal with 1..max_vars variables and 1..max_gens random generators of
 * exponents 0..max_exp, re-drawn until proper and nonzero.
 */
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens,
                                  unsigned max_exp)
{
    std::uniform_int_distribution<std::size_t> nvars(1, max_vars), ngens(1, max_gens);
    std::uniform_int_distribution<unsigned> expo(0, max_exp);
    for (;;) {
        const std::size_t n = nvars(rng);
        const std::size_t m = ngens(rng);
        std::vector<Monomial> g;
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<exponent_t> e(n);
            for (auto& x : e)
                x = expo(rng);
            g.emplace_back(std::move(e));
        }
        auto I = minimal_generators(n, std::move(g));
        if (I.is_proper_nonzero())
            return I;
    }
}

/**
 * Random proper ideal in exactly n variables with m minimal generators, built by
 * adding random monomials incomparable to those already chosen.
 */
inline MonomialIdeal random_ideal_exact(std::mt19937_64& rng, std::size_t n, std::size_t m, unsigned max_exp)
{
    std::uniform_int_distribution<unsigned> expo(0, max_exp);
    for (;;) {
        std::vector<Monomial> g;
        for (int attempt = 0; attempt < 1000 && g.size() < m; ++attempt) {
            std::vector<exponent_t> e(n);
            for (auto& x : e)
                x = expo(rng);
            Monomial u(std::move(e));
            if (u.is_one())
                continue;
            if (std::none_of(g.begin(), g.end(), [&](const Monomial& v) { return divides(u, v) || divides(v, u); }))
                g.push_back(std::move(u));
        }
        if (g.size() == m)
            return minimal_generators(n, std::move(g));
    }
}

/// All monomials of degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d)
{
    std::vector<Monomial> out;
    std::vector<exponent_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Random equigenerated ideal: a nonempty random subset of the degree-d monomials.
inline MonomialIdeal random_equigenerated(std::mt19937_64& rng, std::size_t n, unsigned d, std::size_t max_gens)
{
    auto all = monomials_of_degree(n, d);
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min(max_gens, all.size()));
    all.resize(count(rng));
    return minimal_generators(n, std::move(all));
}

/// Product of the ideals generated by the variable subsets (a transversal polymatroidal ideal).
inline MonomialIdeal transversal_ideal(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks)
{
    std::vector<Monomial> current{Monomial::one(n)};
    for (const auto& block : blocks) {
        std::vector<Monomial> next;
        for (const auto& u : current)
            for (std::size_t v : block)
                next.push_back(u.times_variable(v));
        current = minimal_generators(n, std::move(next)).generators();
    }
    return minimal_generators(n, std::move(current));
}

/// Squarefree Veronese ideal I_{n,d}: all squarefree monomials of degree d.
inline MonomialIdeal squarefree_veronese(std::size_t n, unsigned d)
{
    std::vector<Monomial> g;
    for (const auto& u : monomials_of_degree(n, d))
        if (u.is_squarefree())
            g.push_back(u);
    return minimal_generators(n, std::move(g));
}

} // namespace hsi::testing
