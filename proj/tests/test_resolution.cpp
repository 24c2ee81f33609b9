#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hsi/linalg.hpp"
#include "hsi/resolution.hpp"
#include "oracles/koszul_strand.hpp"

namespace hsi {
namespace {

using testing::abc;
using testing::ideal_from;
using testing::mono;
using testing::monos;

SimplicialComplex complex_of(std::size_t n, std::vector<Face> f) { return SimplicialComplex::from_facets(n, std::move(f)); }

SimplicialComplex projective_plane()
{
    return complex_of(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

TEST(Linalg, RankDependsOnCharacteristic)
{
    IntMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 1;
    m(1, 0) = 1; m(1, 1) = -1;
    EXPECT_EQ(matrix_rank(m, Field::rationals()), 2U);
    EXPECT_EQ(matrix_rank(m, Field::prime(2)), 1U);
    EXPECT_EQ(matrix_rank(m, Field::prime(3)), 2U);
    EXPECT_EQ(matrix_rank(IntMatrix(0, 3), Field::rationals()), 0U);
}

TEST(Linalg, FieldValidation)
{
    EXPECT_THROW(Field::prime(4), input_error);
    EXPECT_THROW(Field::prime(1), input_error);
    EXPECT_EQ(Field::prime(32003).characteristic(), 32003U);
    EXPECT_EQ(Field::prime(32003).to_string(), "p:32003");
}

TEST(Homology, SmallComplexes)
{
    const auto irrelevant = reduced_homology_ranks(complex_of(3, {Face{}}));
    EXPECT_EQ(irrelevant.ranks, (std::vector<std::size_t>{1}));
    EXPECT_EQ(irrelevant.at(-1), 1U);

    const auto points = reduced_homology_ranks(complex_of(2, {{0}, {1}}));
    EXPECT_EQ(points.ranks, (std::vector<std::size_t>{0, 1}));

    const auto circle = reduced_homology_ranks(complex_of(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_EQ(circle.ranks, (std::vector<std::size_t>{0, 0, 1}));

    const auto nothing = reduced_homology_ranks(complex_of(3, {}));
    EXPECT_TRUE(nothing.ranks.empty());
    EXPECT_EQ(nothing.at(0), 0U);

    const auto simplex = reduced_homology_ranks(complex_of(4, {{0, 1, 2, 3}}));
    EXPECT_EQ(simplex.ranks, (std::vector<std::size_t>{0, 0, 0, 0, 0}));
}

TEST(Homology, ProjectivePlaneSeesTheCharacteristic)
{
    const auto rp2 = projective_plane();
    EXPECT_EQ(reduced_homology_ranks(rp2, Field::rationals()).ranks, (std::vector<std::size_t>{0, 0, 0, 0}));
    EXPECT_EQ(reduced_homology_ranks(rp2, Field::prime(2)).ranks, (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_EQ(reduced_homology_ranks(rp2, Field::prime(3)).ranks, (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST(Resolution, UpperKoszulComplex)
{
    const auto I = ideal_from("x1 x2", "x1, x2");
    EXPECT_EQ(upper_koszul_complex(I, to_monomial(2, {1, 1})).facets(), (std::vector<Face>{{0}, {1}}));
    const auto J = ideal_from("x1 x2", "x1");
    // x1 / x1 = 1 is not in (x1), so only the empty face survives.
    EXPECT_EQ(upper_koszul_complex(J, to_monomial(2, {1, 0})).facets(), (std::vector<Face>{Face{}}));
    EXPECT_EQ(upper_koszul_complex(J, to_monomial(2, {2, 0})).facets(), (std::vector<Face>{{0}}));
    EXPECT_TRUE(upper_koszul_complex(ideal_from("x1 x2", "x1^2"), to_monomial(2, {1, 1})).is_void());
    EXPECT_THROW(upper_koszul_complex(I, Monomial::one(3)), input_error);
}

TEST(Resolution, LcmMultidegrees)
{
    EXPECT_EQ(lcm_multidegrees(ideal_from("x1 x2", "x1")), (std::vector<Monomial>{to_monomial(2, {1, 0})}));
    EXPECT_EQ(lcm_multidegrees(ideal_from("x1 x2", "x1, x2")), monos("x1 x2", "x1, x2, x1*x2"));
    EXPECT_EQ(lcm_multidegrees(ideal_from("x1 x2 x3", "x1*x2, x2*x3, x1*x3")),
              monos("x1 x2 x3", "x1*x2, x1*x3, x2*x3, x1*x2*x3"));
    EXPECT_THROW(lcm_multidegrees(MonomialIdeal::zero(2)), domain_error);
}

TEST(Resolution, MaximalIdealIsKoszul)
{
    const auto t = betti_table(testing::maximal_ideal(3));
    EXPECT_EQ(t.total(0), 3U);
    EXPECT_EQ(t.total(1), 3U);
    EXPECT_EQ(t.total(2), 1U);
    EXPECT_EQ(t.projective_dimension(), 2U);
    EXPECT_EQ(t.regularity(), 1);
}

TEST(Resolution, SessionTwoShifts)
{
    const auto J = testing::session_two_ideal();
    const auto t = betti_table(J);
    EXPECT_EQ(t.shifts(1), monos(abc, "a*b*c, a*b*d, a*c*d, a*d*e, a*d*f, d*e*f"));
    EXPECT_EQ(t.shifts(2), monos(abc, "a*b*c*d, a*d*e*f"));
    EXPECT_EQ(t.projective_dimension(), 2U);
    EXPECT_EQ(multigraded_shifts(J, 0), J.generators());
    EXPECT_TRUE(multigraded_shifts(J, -1).empty());
    EXPECT_TRUE(multigraded_shifts(J, 3).empty());
    EXPECT_TRUE(multigraded_shifts(MonomialIdeal::zero(6), 0).empty());
}

TEST(Resolution, PdAndReg)
{
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(projective_dimension(testing::maximal_ideal(n)), n - 1);
    EXPECT_EQ(regularity(testing::session_one_ideal()), 3);
    EXPECT_EQ(projective_dimension(testing::session_two_ideal()), 2U);
    EXPECT_EQ(projective_dimension(MonomialIdeal::unit(3)), 0U);
    EXPECT_EQ(regularity(MonomialIdeal::unit(3)), 0);
    EXPECT_THROW(projective_dimension(MonomialIdeal::zero(3)), domain_error);
    EXPECT_THROW(regularity(MonomialIdeal::zero(3)), domain_error);
    const auto unit = betti_table(MonomialIdeal::unit(2));
    ASSERT_EQ(unit.entries().size(), 1U);
    EXPECT_EQ(unit.entries()[0], (BettiEntry{0, Monomial::one(2), 1}));
}

TEST(KoszulOracle, Examples)
{
    EXPECT_EQ(oracle::koszul_strand_betti(ideal_from("x1 x2", "x1"), 0, {1, 0}), 1U);
    EXPECT_EQ(oracle::koszul_strand_betti(ideal_from("x1 x2", "x1, x2"), 1, {1, 1}), 1U);
    EXPECT_EQ(oracle::koszul_strand_betti(ideal_from("x1 x2", "x1, x2"), 0, {1, 1}), 0U);
    EXPECT_EQ(oracle::koszul_strand_betti(MonomialIdeal::unit(2), 0, {0, 0}), 1U);
}

void expect_matches_oracle(const MonomialIdeal& I, Field field)
{
    const auto t = betti_table(I, field);
    for (const auto& a : lcm_multidegrees(I))
        for (long long i = 0; i < static_cast<long long>(I.arity()); ++i)
            ASSERT_EQ(t.value(static_cast<std::size_t>(i), a), oracle::koszul_strand_betti(I, i, to_multidegree(a), field))
                << "i=" << i;
}

TEST(ResolutionProperties, MatchesKoszulOracle)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 80; ++trial)
        expect_matches_oracle(testing::random_ideal(rng, 5, 6, 3), Field::rationals());
    for (int trial = 0; trial < 30; ++trial)
        expect_matches_oracle(testing::random_ideal(rng, 5, 6, 3), Field::prime(2));
}

TEST(ResolutionProperties, TableInvariants)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = testing::random_ideal(rng, 5, 6, 3);
        const auto t = betti_table(I);
        EXPECT_EQ(t.shifts(0), I.generators());
        const auto lattice = lcm_multidegrees(I);
        for (const auto& e : t.entries()) {
            if (e.index == 0) {
                EXPECT_EQ(e.value, 1U);
            }
            EXPECT_LE(e.index, I.arity() - 1);
            EXPECT_GE(e.shift.degree(), indeg(I) + e.index);
            EXPECT_TRUE(std::find(lattice.begin(), lattice.end(), e.shift) != lattice.end());
            EXPECT_NE(e.value, 0U);
            if (is_squarefree(I)) {
                EXPECT_TRUE(e.shift.is_squarefree());
            }
        }
        EXPECT_EQ(betti_table(I), t);
    }
}

TEST(ResolutionProperties, WorkedIdealsAgreeAcrossFields)
{
    for (const auto& I : {testing::session_one_ideal(), testing::session_two_ideal(), testing::borel_ideal()})
        EXPECT_EQ(betti_table(I, Field::rationals()), betti_table(I, Field::prime(32003)));
}

} // namespace
} // namespace hsi
