#include <random>

#include <gtest/gtest.h>

#include "burst/construct.hpp"
#include "burst/errors.hpp"
#include "burst/goodness.hpp"
#include "oracles.hpp"

using namespace burst;

namespace {

const PrimeField F2(2), F3(3);

Matrix random_systematic(std::mt19937& rng, const PrimeField& f, std::size_t k, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> dist(0, f.modulus() - 1);
    Matrix p(f, k, n - k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n - k; ++c) p.set(r, c, dist(rng));
    return hconcat(identity(k, f), p);
}

std::vector<Matrix> good_samples() {
    std::vector<Matrix> out;
    for (const auto* f : {&F2, &F3})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t k = 1; k <= n; ++k) {
                out.push_back(generator_recursive(k, n, *f).generator());
                out.push_back(generator_explicit(*f, k, n).generator());
            }
    return out;
}

} // namespace

TEST(IsGood, Examples) {
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_TRUE(is_good(identity(k, F3)));
    EXPECT_TRUE(is_good(Matrix::from_rows(F2, {{1, 0, 1, 0}, {0, 1, 0, 1}})));
    EXPECT_FALSE(is_good(Matrix::from_rows(F2, {{1, 0, 0}, {0, 1, 0}})));
    EXPECT_TRUE(is_good(Matrix(F2, 0, 4)));
    EXPECT_THROW(is_good(Matrix(F2, 3, 2)), DimensionMismatch);
}

TEST(IsGood, WindowReportPinpointsFailures) {
    const auto reports = window_reports(Matrix::from_rows(F2, {{1, 0, 0}, {0, 1, 0}}));
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0], (WindowReport{1, {1, 2}, 2, true}));
    EXPECT_EQ(reports[1], (WindowReport{2, {2, 3}, 1, false}));
    EXPECT_EQ(reports[2], (WindowReport{3, {3, 1}, 1, false}));
}

TEST(IsGood, AgreesWithBurstDecodabilityOracleExhaustively) {
    // Every binary 2 x n matrix with n <= 5.
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t cells = 2 * n;
        for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
            Matrix g(F2, 2, n);
            for (std::size_t i = 0; i < cells; ++i) g.set(i / n, i % n, (bits >> i) & 1);
            const auto rows = oracle::to_rows(g);
            EXPECT_EQ(is_good(g), oracle::corrects_all_bursts(rows, 2, n - 2)) << g;
        }
    }
}

TEST(IsGood, AgreesWithEnumerationOracleOnRandomTernary) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 1 + trial % 3, n = k + trial % 4;
        Matrix g(F3, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) g.set(r, c, dist(rng));
        EXPECT_EQ(is_good(g), oracle::good(oracle::to_rows(g), 3)) << g;
    }
}

TEST(IsGoodProperty, InvariantUnderCyclicShift) {
    std::mt19937 rng(1);
    for (const auto& g : good_samples())
        for (std::int64_t s = 0; s <= static_cast<std::int64_t>(g.cols()); ++s)
            EXPECT_TRUE(is_good(cyclic_shift_columns(g, s)));
    // Shifting a bad matrix keeps it bad.
    const auto bad = Matrix::from_rows(F2, {{1, 0, 0}, {0, 1, 0}});
    for (std::int64_t s = 0; s < 3; ++s) EXPECT_FALSE(is_good(cyclic_shift_columns(bad, s)));
}

TEST(IsGoodProperty, InvariantUnderNonzeroColumnScaling) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<std::int64_t> nonzero(1, 2);
    for (const auto& g : good_samples()) {
        if (g.field() != F3) continue;
        Vector scales;
        for (std::size_t c = 0; c < g.cols(); ++c) scales.emplace_back(F3, nonzero(rng));
        EXPECT_TRUE(is_good(scale_columns(g, scales)));
    }
}

TEST(IsGoodProperty, InvariantUnderInvertibleRowOperations) {
    std::mt19937 rng(3);
    for (const auto& g : good_samples()) {
        const auto& f = g.field();
        std::uniform_int_distribution<std::int64_t> dist(0, f.modulus() - 1);
        Matrix a(f, g.rows(), g.rows());
        do {
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c) a.set(r, c, dist(rng));
        } while (rank(a) != a.rows());
        EXPECT_TRUE(is_good(multiply(a, g)));
    }
}

TEST(IsPrefixGood, Examples) {
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_TRUE(is_prefix_good(identity(k, F2)));
    for (const auto* f : {&F2, &F3})
        for (std::size_t k = 1; k <= 8; ++k)
            for (std::size_t r = 1; r <= 8; ++r)
                EXPECT_TRUE(is_prefix_good(hconcat(identity(k, *f), q_matrix(*f, k, r)))) << k << "," << r;
    EXPECT_FALSE(is_prefix_good(hconcat(identity(2, F2), Matrix(F2, 2, 1))));
    EXPECT_THROW(is_prefix_good(Matrix::from_rows(F2, {{0, 1, 1}, {1, 0, 1}})), NotSystematic);
}

TEST(IsPrefixGood, RecursiveConstructionIsGoodButNotAlwaysPrefixGood) {
    // (I_3 P_{3,3}) = (I_3 I_3) is good, yet its 4-column prefix is not.
    const auto g = generator_recursive(3, 6, F2).generator();
    EXPECT_TRUE(is_good(g));
    EXPECT_FALSE(is_prefix_good(g));
}

TEST(IsInformationSet, Examples) {
    const std::vector<std::size_t> first{1, 2, 3};
    EXPECT_TRUE(is_information_set(identity(3, F2), first));
    const auto g = generator_recursive(3, 7, F2).generator();
    for (std::size_t s = 0; s < 7; ++s) {
        std::vector<std::size_t> window;
        for (auto c : cyclic_window(s, 3, 7)) window.push_back(c + 1);
        EXPECT_TRUE(is_information_set(g, window));
    }
    const std::vector<std::size_t> too_few{1, 2}, out_of_range{1, 2, 8}, repeated{1, 1, 2};
    EXPECT_THROW(is_information_set(g, too_few), OutOfRange);
    EXPECT_THROW(is_information_set(g, out_of_range), OutOfRange);
    EXPECT_THROW(is_information_set(g, repeated), OutOfRange);
}

TEST(IsInformationSet, ComplementIsInformationSetForDual) {
    std::mt19937 rng(17);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto& f = trial % 2 ? F3 : F2;
        const std::size_t n = 2 + trial % 9, k = 1 + trial % (n - 1);
        const auto g = random_systematic(rng, f, k, n);
        if (!is_good(g)) continue;
        const auto dual = dual_generator(g);
        for (std::size_t s = 0; s < n; ++s) {
            const auto window = cyclic_window(s, k, n);
            std::vector<std::size_t> info, complement;
            for (std::size_t c = 0; c < n; ++c) {
                if (std::find(window.begin(), window.end(), c) != window.end())
                    info.push_back(c + 1);
                else
                    complement.push_back(c + 1);
            }
            ASSERT_TRUE(is_information_set(g, info));
            EXPECT_TRUE(is_information_set(dual, complement));
        }
        ++tested;
    }
    EXPECT_GT(tested, 50);
}
