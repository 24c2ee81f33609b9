#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hsi/shifts.hpp"
#include "oracles/socle_brute_force.hpp"

namespace hsi {
namespace {

using testing::abc;
using testing::ideal_from;
using testing::monos;
using testing::x123;

TEST(Shifts, SessionTwo)
{
    const auto J = testing::session_two_ideal();
    EXPECT_TRUE(equals_ideal(homological_shift_ideal(J, 0), J));
    EXPECT_EQ(homological_shift_ideal(J, 1), ideal_from(abc, "a*b*c, a*b*d, a*c*d, a*d*e, a*d*f, d*e*f"));
    EXPECT_EQ(homological_shift_ideal(J, 2), ideal_from(abc, "a*b*c*d, a*d*e*f"));
    EXPECT_TRUE(homological_shift_ideal(J, 3).is_zero());
    EXPECT_TRUE(homological_shift_ideal(J, -1).is_zero());
    EXPECT_TRUE(homological_shift_ideal(MonomialIdeal::zero(2), 0).is_zero());
}

TEST(ShiftProperties, ShiftIdealIsMinimalizedShiftList)
{
    std::mt19937_64 rng(6);
    int non_minimal = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = testing::random_ideal(rng, 4, 6, 3);
        const auto t = betti_table(I);
        for (long long i = 0; i <= static_cast<long long>(t.projective_dimension()); ++i) {
            const auto shifts = t.shifts(i);
            const auto hs = homological_shift_ideal(t, i);
            for (const auto& g : hs.generators())
                EXPECT_NE(std::find(shifts.begin(), shifts.end(), g), shifts.end());
            for (const auto& s : shifts)
                EXPECT_TRUE(contains(hs, s));
            non_minimal += hs.size() < shifts.size() ? 1 : 0;
        }
    }
    // Minimalization is not a no-op in general.
    EXPECT_GT(non_minimal, 0);
}

TEST(Socle, Examples)
{
    EXPECT_EQ(socle(testing::borel_ideal()).monomials, monos(x123, "x1^2, x1*x2, x2^2"));
    EXPECT_TRUE(socle(ideal_from("x1 x2", "x1")).monomials.empty());
    EXPECT_EQ(socle(ideal_from("x1 x2", "x1, x2")).monomials, monos("x1 x2", "1"));
    EXPECT_THROW(socle(MonomialIdeal::zero(2)), domain_error);
    EXPECT_THROW(socle(MonomialIdeal::unit(2)), domain_error);
}

TEST(SocleOracle, Examples)
{
    EXPECT_EQ(oracle::socle_brute_force(testing::borel_ideal()).monomials, monos(x123, "x1^2, x1*x2, x2^2"));
    EXPECT_EQ(oracle::socle_brute_force(ideal_from("x1 x2", "x1^2, x1*x2, x2^2")).monomials, monos("x1 x2", "x1, x2"));
    EXPECT_EQ(oracle::socle_brute_force(ideal_from("x1 x2", "x1, x2")).monomials, monos("x1 x2", "1"));
}

TEST(SocleProperties, AgreesWithBruteForce)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto I = testing::random_ideal(rng, 5, 6, 3);
        const auto s = socle(I);
        const auto brute = oracle::socle_brute_force(I);
        ASSERT_EQ(s, brute);
        // The deg(I) box is already complete.
        ASSERT_EQ(oracle::socle_brute_force(I, 1), brute);
        for (const auto& v : s.monomials) {
            EXPECT_FALSE(contains(I, v));
            for (std::size_t j = 0; j < I.arity(); ++j)
                EXPECT_TRUE(contains(I, v.times_variable(j)));
        }
    }
}

TEST(ShiftProperties, ZerothShiftIdealIsTheIdeal)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = testing::random_ideal(rng, 5, 6, 3);
        EXPECT_EQ(homological_shift_ideal(I, 0), I);
    }
}

} // namespace
} // namespace hsi
