#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hsi {

/// Upper bound on extension attempts made by a single ordering search.
inline constexpr std::uint64_t default_search_budget = 10'000'000;

enum class SearchOutcome { found, none, budget_exceeded };

namespace detail {

struct OrderingResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::vector<std::size_t> order;
};

/**
 * Depth-first search for a permutation of {0, ..., count-1} in which every
 * element is accepted by `extends(prefix, candidate)` given the elements
 * placed before it. Candidates are tried in ascending index order.
 *
 * The predicate must depend on the prefix only through its *set* of elements;
 * both users (linear quotients and shellings) satisfy this, which lets dead
 * sets be memoized so each subset is expanded at most once.
 */
template <class Extends>
OrderingResult search_ordering(std::size_t count, Extends&& extends, std::uint64_t budget)
{
    OrderingResult result;
    std::vector<bool> placed(count, false);
    std::vector<std::size_t> prefix;
    prefix.reserve(count);
    std::unordered_set<std::vector<bool>> dead;
    std::uint64_t attempts = 0;
    bool exhausted = false;

    auto dfs = [&](auto&& self) -> bool {
        if (prefix.size() == count)
            return true;
        if (dead.contains(placed))
            return false;
        for (std::size_t c = 0; c < count; ++c) {
            if (placed[c])
                continue;
            if (++attempts > budget) {
                exhausted = true;
                return false;
            }
            if (!extends(std::as_const(prefix), c))
                continue;
            placed[c] = true;
            prefix.push_back(c);
            if (self(self))
                return true;
            if (exhausted)
                return false;
            prefix.pop_back();
            placed[c] = false;
        }
        dead.insert(placed);
        return false;
    };

    if (dfs(dfs)) {
        result.outcome = SearchOutcome::found;
        result.order = std::move(prefix);
    } else {
        result.outcome = exhausted ? SearchOutcome::budget_exceeded : SearchOutcome::none;
    }
    return result;
}

} // namespace detail
} // namespace hsi
