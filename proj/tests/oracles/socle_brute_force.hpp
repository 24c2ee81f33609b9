#pragma once

// Test oracle: soc(I) by enumerating the box 0 <= v <= bound. With the
// default bound deg(I) this is complete: if v_i > deg_{x_i}(I) and x_i v is
// in I, the generator dividing x_i v already divides v.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hsi/monomial.hpp"
#include "hsi/shifts.hpp"

namespace hsi::oracle {

inline MonomialList socle_brute_force(const MonomialIdeal& I, std::int64_t enlarge = 0)
{
    auto bound = bounding_multidegree(I);
    for (auto& b : bound)
        b += enlarge;
    const std::size_t n = I.arity();
    std::vector<Monomial> found;
    std::vector<exponent_t> e(n, 0);
    for (;;) {
        const Monomial v(e);
        if (!contains(I, v)) {
            bool all = true;
            for (std::size_t j = 0; j < n && all; ++j)
                all = contains(I, v.times_variable(j));
            if (all)
                found.push_back(v);
        }
        std::size_t k = 0;
        while (k < n && static_cast<std::int64_t>(e[k]) == bound[k]) {
            e[k] = 0;
            ++k;
        }
        if (k == n)
            break;
        ++e[k];
    }
    std::sort(found.begin(), found.end(), CanonicalLess{});
    return MonomialList{n, std::move(found)};
}

} // namespace hsi::oracle
