#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "boole/identity.hpp"
#include "boole/sampling.hpp"
#include "boole/vandermonde.hpp"
#include "oracles.hpp"

namespace boole {
namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(ArithmeticNodes, NodeAccessor) {
    const ArithmeticNodes nodes{rat(1, 2), rat(-1, 3), 3};
    EXPECT_EQ(nodes.values(), (std::vector<Rational>{rat(1, 2), rat(1, 6), rat(-1, 6), rat(-1, 2)}));
}

TEST(BuildSystem, OrderOne) {
    const LinearSystem sys = build_system({0, 1, 1});
    EXPECT_EQ(sys.matrix, (ExactMatrix{{1, 1}, {0, 1}}));
    EXPECT_EQ(sys.rhs, ints({0, 1}));
}

TEST(BuildSystem, OffsetAndSpacing) {
    const LinearSystem sys = build_system({1, 2, 2});
    EXPECT_EQ(sys.matrix, (ExactMatrix{{1, 1, 1}, {1, 3, 5}, {1, 9, 25}}));
    EXPECT_EQ(sys.rhs, ints({0, 0, 8}));
}

TEST(BuildSystem, CoincidentNodes) {
    const LinearSystem sys = build_system({3, 0, 1});
    EXPECT_EQ(sys.matrix, (ExactMatrix{{1, 1}, {3, 3}}));
    EXPECT_EQ(sys.rhs, ints({0, 0}));
}

TEST(BuildSystem, ZeroNodeGivesOneInFirstRow) {
    const LinearSystem sys = build_system({0, 0, 0});
    EXPECT_EQ(sys.matrix, (ExactMatrix{{1}}));
    EXPECT_EQ(sys.rhs, ints({1}));
}

TEST(FormatMatrix, RowsOfCanonicalTokens) {
    EXPECT_EQ(format_matrix(ExactMatrix{{rat(1, 2), 3}, {-1, rat(-4, 6)}}), "1/2 3/1\n-1/1 -2/3\n");
}

TEST(LinearSystem, RejectsMismatchedShapes) {
    EXPECT_THROW(LinearSystem(ExactMatrix(2, 3), ints({0, 0})), std::invalid_argument);
    EXPECT_THROW(LinearSystem(ExactMatrix(2, 2), ints({0})), std::invalid_argument);
}

TEST(DetVandermondeGeneral, Values) {
    EXPECT_EQ(det_vandermonde_general(ints({0, 1, 2})), Rational(2));
    EXPECT_EQ(det_vandermonde_general(ints({5, 5})), Rational(0));
    EXPECT_EQ(det_vandermonde_general(ints({7})), Rational(1));
    EXPECT_EQ(det_vandermonde_general(std::vector<Rational>{}), Rational(1));
}

TEST(DetVandermondeClosed, Values) {
    EXPECT_EQ(det_vandermonde_closed(2, 1), Rational(2));
    EXPECT_EQ(det_vandermonde_closed(0, rat(-5, 3)), Rational(1));
    EXPECT_EQ(det_vandermonde_closed(0, 0), Rational(1));
    EXPECT_EQ(det_vandermonde_closed(3, 2), Rational(768));
    EXPECT_EQ(det_vandermonde_general(ints({11, 13, 15, 17})), Rational(768));
    EXPECT_EQ(det_vandermonde_closed(3, 0), Rational(0));
}

TEST(DetVkClosed, Values) {
    const Rational b = rat(-7, 3);
    EXPECT_EQ(det_vk_closed(1, 0, b), -b);
    EXPECT_EQ(det_vk_closed(2, 1, 1), Rational(-4));
    EXPECT_EQ(det_vk_closed(2, 2, 1), Rational(2));
    EXPECT_EQ(det_vk_closed(0, 0, 5), Rational(1));
}

TEST(DetVkClosed, KOutOfRange) { EXPECT_THROW(det_vk_closed(2, 3, 1), DomainError); }

TEST(DetVkClosed, MatchesHandLaplaceExpansionOrderOne) {
    // [[0, 1], [b, a + b]] for several (a, b)
    for (const auto& [a, b] : {std::pair{rat(1, 2), rat(3, 4)}, std::pair{Rational(-2), Rational(5)}}) {
        const ExactMatrix vk{{0, 1}, {b, a + b}};
        EXPECT_EQ(oracle::laplace_det(vk), det_vk_closed(1, 0, b));
    }
}

TEST(DetBareiss, Values) {
    EXPECT_EQ(det_bareiss(ExactMatrix::identity(3)), Rational(1));
    EXPECT_EQ(det_bareiss(ExactMatrix{{1, 1}, {0, 1}}), Rational(1));
    EXPECT_EQ(det_bareiss(ExactMatrix{{0, 1}, {1, 0}}), Rational(-1));
    EXPECT_EQ(det_bareiss(ExactMatrix(0, 0)), Rational(1));
    const std::vector<Rational> nodes{rat(1, 2), 1, rat(3, 2), 2};
    const Rational det = det_bareiss(vandermonde_matrix(nodes));
    EXPECT_EQ(det, det_vandermonde_general(nodes));
    EXPECT_EQ(det, rat(3, 16));
}

TEST(DetBareiss, NonSquareThrows) { EXPECT_THROW(det_bareiss(ExactMatrix(2, 3)), DomainError); }

TEST(DetBareiss, AgreesWithCofactorExpansion) {
    std::mt19937_64 rng(5);
    RationalSampler sampler(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t size = 1 + trial % 6;
        ExactMatrix m(size, size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                // sprinkle zeros so pivot search gets exercised
                m(i, j) = (rng() % 4 == 0) ? Rational(0) : sampler.next();
            }
        }
        EXPECT_EQ(det_bareiss(m), oracle::laplace_det(m)) << format_matrix(m);
    }
}

TEST(DetBareiss, EqualColumnsGiveZero) {
    RationalSampler sampler(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t size = 2 + trial % 5;
        ExactMatrix m(size, size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) m(i, j) = sampler.next();
        }
        const std::size_t c1 = trial % size, c2 = (trial + 1) % size;
        m = m.with_column(c2, m.column(c1));
        EXPECT_EQ(det_bareiss(m), Rational(0));
    }
}

TEST(SolveExact, Values) {
    EXPECT_EQ(solve_exact(build_system({0, 1, 1})), ints({-1, 1}));
    EXPECT_EQ(solve_exact(build_system({0, 1, 2})), ints({1, -2, 1}));
    EXPECT_THROW(solve_exact(build_system({3, 0, 1})), SingularMatrixError);
}

TEST(SolveExact, OrderZeroSystem) { EXPECT_EQ(solve_exact(build_system({rat(2, 3), 0, 0})), ints({1})); }

TEST(SolveExact, AgreesWithGaussJordanOnRandomSystems) {
    RationalSampler sampler(41);
    int solved = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t size = 1 + trial % 7;
        ExactMatrix m(size, size);
        std::vector<Rational> rhs(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) m(i, j) = trial % 3 == 0 && j == 0 ? Rational(0) : sampler.next();
            rhs[i] = sampler.next();
        }
        const std::vector<Rational> reference = oracle::gauss_jordan(m, rhs);
        const LinearSystem sys(m, rhs);
        if (reference.empty()) {
            EXPECT_THROW(solve_exact(sys), SingularMatrixError);
        } else {
            EXPECT_EQ(solve_exact(sys), reference);
            ++solved;
        }
    }
    EXPECT_GT(solved, 40);
}

// det V closed = pairwise product = fraction-free elimination, for any a.
TEST(VandermondeProperty, DeterminantTripleAgreement) {
    RationalSampler sampler(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [a, b] = sampler.next_pair();
        for (unsigned n = 0; n <= 8; ++n) {
            const ArithmeticNodes nodes{a, b, n};
            const Rational closed = det_vandermonde_closed(n, b);
            EXPECT_EQ(det_vandermonde_general(nodes.values()), closed);
            EXPECT_EQ(det_bareiss(build_system(nodes).matrix), closed);
        }
    }
}

TEST(VandermondeProperty, SubstitutedDeterminantMatchesElimination) {
    RationalSampler sampler(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [a, b] = sampler.next_pair_nonzero_b();
        for (unsigned n = 0; n <= 8; ++n) {
            const LinearSystem sys = build_system({a, b, n});
            for (unsigned k = 0; k <= n; ++k) {
                EXPECT_EQ(det_vk_closed(n, k, b), det_bareiss(sys.matrix.with_column(k, sys.rhs)));
            }
        }
    }
}

TEST(VandermondeProperty, SubstitutedDeterminantMatchesCofactorExpansion) {
    const Rational a = rat(-5, 2), b = rat(3, 7);
    for (unsigned n = 0; n <= 4; ++n) {
        const LinearSystem sys = build_system({a, b, n});
        for (unsigned k = 0; k <= n; ++k) {
            EXPECT_EQ(det_vk_closed(n, k, b), oracle::laplace_det(sys.matrix.with_column(k, sys.rhs)));
        }
    }
}

TEST(VandermondeProperty, SolutionIsSignedBinomials) {
    RationalSampler sampler(13);
    for (int trial = 0; trial < 8; ++trial) {
        const auto [a, b] = sampler.next_pair_nonzero_b();
        for (unsigned n = 0; n <= 10; ++n) {
            const std::vector<Rational> x = solve_exact(build_system({a, b, n}));
            for (unsigned k = 0; k <= n; ++k) {
                const BigInteger c = binomial(n, k);
                EXPECT_EQ(x[k], Rational((n - k) % 2 ? BigInteger(-c) : c));
            }
        }
    }
}

TEST(VandermondeProperty, CramerRatioUpTo30) {
    for (const Rational& b : {Rational(1), rat(-2, 3), rat(9, 4)}) {
        for (unsigned n = 0; n <= 30; ++n) {
            const Rational det = det_vandermonde_closed(n, b);
            for (unsigned k = 0; k <= n; ++k) {
                const BigInteger c = binomial(n, k);
                EXPECT_EQ(det_vk_closed(n, k, b) / det, Rational((n - k) % 2 ? BigInteger(-c) : c));
            }
        }
    }
}

TEST(VandermondeProperty, ZeroSpacingIsSingularForPositiveOrder) {
    for (unsigned n = 1; n <= 5; ++n) {
        const LinearSystem sys = build_system({rat(4, 5), 0, n});
        EXPECT_EQ(det_bareiss(sys.matrix), Rational(0));
        EXPECT_THROW(solve_exact(sys), SingularMatrixError);
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(det_vk_closed(n, k, 0), Rational(0));
    }
}

}  // namespace
}  // namespace boole
