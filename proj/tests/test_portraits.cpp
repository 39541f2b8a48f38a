#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qportrait/eigh.hpp"
#include "qportrait/portraits.hpp"

using namespace qportrait;
using qportrait::testing::max_entry_diff;

TEST_CASE("fold_map on a qutrit adds the last diagonal entry into the corner") {
    Rng rng(17);
    const DensityMatrix rho = random_mixed_hs(3, rng);
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix f = fold_map(rho, BlockPartition::for_dim(3, 1)).matrix();
    CHECK(f.dim() == 2);
    CHECK(std::abs(f(0, 0) - (m(0, 0) + m(2, 2))) < 1e-15);
    CHECK(std::abs(f(0, 1) - m(0, 1)) < 1e-15);
    CHECK(std::abs(f(1, 0) - m(1, 0)) < 1e-15);
    CHECK(std::abs(f(1, 1) - m(1, 1)) < 1e-15);
}

TEST_CASE("fold_map on a 4x4 with m=1") {
    Rng rng(18);
    const DensityMatrix rho = random_mixed_hs(4, rng);
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix f = fold_map(rho, BlockPartition::for_dim(4, 1)).matrix();
    CHECK(f.dim() == 3);
    CHECK(std::abs(f(0, 0) - (m(0, 0) + m(3, 3))) < 1e-15);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(i == 0 && j == 0)) CHECK(std::abs(f(i, j) - m(i, j)) < 1e-15);
}

TEST_CASE("fold_map on diagonal input") {
    const DensityMatrix rho = DensityMatrix::validated(ComplexMatrix::diagonal({0.5, 0.3, 0.2}));
    CHECK(max_entry_diff(fold_map(rho, BlockPartition::for_dim(3, 1)).matrix(),
                         ComplexMatrix::diagonal({0.7, 0.3})) < 1e-15);
}

TEST_CASE("block partition constraints") {
    CHECK_THROWS_AS(BlockPartition::for_dim(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::for_dim(4, 0), std::invalid_argument);
    CHECK_NOTHROW(BlockPartition::for_dim(4, 2));
}

TEST_CASE("trace_block_map on a 4x4 with the even partition") {
    Rng rng(19);
    const DensityMatrix rho = random_mixed_hs(4, rng);
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix t = trace_block_map(rho, BlockPartition::for_dim(4, 2)).matrix();
    CHECK(std::abs(t(0, 0) - (m(0, 0) + m(1, 1))) < 1e-15);
    CHECK(std::abs(t(0, 1) - (m(0, 2) + m(1, 3))) < 1e-15);
    CHECK(std::abs(t(1, 0) - (m(2, 0) + m(3, 1))) < 1e-15);
    CHECK(std::abs(t(1, 1) - (m(2, 2) + m(3, 3))) < 1e-15);

    const DensityMatrix mixed = DensityMatrix::validated(0.25 * ComplexMatrix::identity(4));
    CHECK(max_entry_diff(trace_block_map(mixed, BlockPartition::for_dim(4, 2)).matrix(),
                         0.5 * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("portraits match the bipartite partial-trace oracle at (2,2)") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(Rng::substream_seed(23, seed));
        const DensityMatrix rho = random_mixed_hs(4, rng);
        const BlockPartition p = BlockPartition::for_dim(4, 2);
        CHECK(max_entry_diff(fold_map(rho, p).matrix(),
                             partial_trace(rho, 2, 2, 1).matrix()) < 1e-12);
        CHECK(max_entry_diff(trace_block_map(rho, p).matrix(),
                             partial_trace(rho, 2, 2, 2).matrix()) < 1e-12);
    }
}

TEST_CASE("embed_padded") {
    const DensityMatrix small = DensityMatrix::validated(ComplexMatrix::diagonal({0.7, 0.3}));
    CHECK(max_entry_diff(embed_padded(small, 3).matrix(),
                         ComplexMatrix::diagonal({0.7, 0.3, 0.0})) < 1e-15);
    CHECK(embed_padded(small, 2).matrix() == small.matrix());

    ComplexMatrix off(2);
    off(0, 0) = 0.5;
    off(1, 1) = 0.5;
    off(0, 1) = cplx{0.1, 0.2};
    off(1, 0) = cplx{0.1, -0.2};
    const ComplexMatrix padded =
        embed_padded(DensityMatrix::validated(off), 4).matrix();
    CHECK(padded(0, 1) == off(0, 1));
    CHECK(padded(1, 0) == off(1, 0));
    CHECK(padded(2, 2) == cplx{});

    CHECK_THROWS_AS(embed_padded(small, 1), std::invalid_argument);
}

TEST_CASE("permute") {
    Rng rng(29);
    const DensityMatrix rho = random_mixed_hs(3, rng);
    CHECK(permute(rho, {0, 1, 2}).matrix() == rho.matrix());

    const DensityMatrix diag = DensityMatrix::validated(ComplexMatrix::diagonal({0.5, 0.3, 0.2}));
    CHECK(max_entry_diff(permute(diag, {1, 0, 2}).matrix(),
                         ComplexMatrix::diagonal({0.3, 0.5, 0.2})) < 1e-15);

    const auto before = eigh(rho.matrix()).eigenvalues;
    const auto after = eigh(permute(rho, {2, 0, 1}).matrix()).eigenvalues;
    for (size_t k = 0; k < before.size(); ++k)
        CHECK(after[k] == doctest::Approx(before[k]).epsilon(1e-12));

    CHECK_THROWS_AS(permute(rho, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permute(rho, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("chain folds the last index step by step") {
    const DensityMatrix rho =
        DensityMatrix::validated(ComplexMatrix::diagonal({0.4, 0.3, 0.2, 0.1}));
    const std::vector<DensityMatrix> c = chain(rho);
    REQUIRE(c.size() == 3);
    CHECK(c[0].matrix() == rho.matrix());
    CHECK(max_entry_diff(c[1].matrix(), ComplexMatrix::diagonal({0.5, 0.3, 0.2})) < 1e-15);
    CHECK(max_entry_diff(c[2].matrix(), ComplexMatrix::diagonal({0.7, 0.3})) < 1e-15);

    Rng rng(31);
    const DensityMatrix qubit = random_mixed_hs(2, rng);
    CHECK(chain(qubit).size() == 1);
}

TEST_CASE("chain corner entries match the displayed 4x4 reduction") {
    // fixture with distinct entries so the symbolic sums are unambiguous
    Rng rng(37);
    const DensityMatrix rho = random_mixed_hs(4, rng);
    const ComplexMatrix& m = rho.matrix();
    const std::vector<DensityMatrix> c = chain(rho);
    CHECK(std::abs(c[1].matrix()(0, 0) - (m(0, 0) + m(3, 3))) < 1e-15);
    CHECK(std::abs(c[2].matrix()(0, 0) - (m(0, 0) + m(2, 2) + m(3, 3))) < 1e-15);
    CHECK(std::abs(c[2].matrix()(0, 1) - m(0, 1)) < 1e-15);
}

TEST_CASE("qubit_portraits") {
    const DensityMatrix mixed =
        DensityMatrix::validated((1.0 / 3.0) * ComplexMatrix::identity(3));
    const auto portraits = qubit_portraits(mixed);
    CHECK(portraits.size() == 6);
    for (const auto& [perm, portrait] : portraits)
        CHECK(max_entry_diff(portrait.matrix(),
                             ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0})) < 1e-14);
}

TEST_CASE("portrait maps preserve trace and positivity") {
    for (int dim = 3; dim <= 8; ++dim) {
        for (uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(Rng::substream_seed(41, static_cast<uint64_t>(dim) * 1000 + seed));
            const DensityMatrix rho = random_mixed_hs(dim, rng);
            for (int m = 1; m <= dim / 2; ++m) {
                const BlockPartition p = BlockPartition::for_dim(dim, m);
                for (const DensityMatrix& out : {fold_map(rho, p), trace_block_map(rho, p)}) {
                    CHECK(std::abs(trace(out.matrix()) - 1.0) < 1e-13);
                    CHECK(eigh(out.matrix()).eigenvalues.front() >= -1e-11);
                }
            }
        }
    }
}

TEST_CASE("chain of a diagonal matrix stays diagonal") {
    Rng rng(43);
    const DensityMatrix rho = random_diagonal(6, rng);
    for (const DensityMatrix& step : chain(rho))
        for (int i = 0; i < step.dim(); ++i)
            for (int j = 0; j < step.dim(); ++j)
                if (i != j) CHECK(step.matrix()(i, j) == cplx{});
}
