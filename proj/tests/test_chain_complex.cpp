#include "doctest.h"
#include "engeltori/abelian_group.hpp"
#include "engeltori/chain_complex.hpp"
#include "engeltori/errors.hpp"
#include "engeltori/smith.hpp"
#include "support/test_support.hpp"

using namespace engeltori;
using homology::ChainComplex;
using homology::FgAbGroup;
using homology::GradedGroup;
using homology::Int;
using homology::IntMatrix;
using testsupport::rand_int;
using testsupport::rank_oracle;
using testsupport::snf_diagonal_oracle;

namespace {
FgAbGroup grp(int free, std::vector<Int> torsion) {
    return FgAbGroup{free, std::move(torsion)};
}
GradedGroup graded(std::vector<FgAbGroup> gs) { return GradedGroup{std::move(gs)}; }
const FgAbGroup kZ = FgAbGroup::free_group(1);
const FgAbGroup kTrivial{};

// Columns of the integer kernel basis of a, assembled into a matrix (possibly
// with zero columns when a is injective).
IntMatrix kernel_matrix(const IntMatrix& a) {
    auto basis = homology::kernel_basis(a);
    IntMatrix k(a.cols(), static_cast<int>(basis.size()));
    for (int j = 0; j < k.cols(); ++j)
        for (int i = 0; i < k.rows(); ++i) k.at(i, j) = basis[j][i];
    return k;
}
}  // namespace

TEST_SUITE("chain_complex") {

TEST_CASE("homology of pinned small complexes") {
    ChainComplex point{{1}, {}};
    CHECK(homology::homology(point) == graded({kZ}));

    ChainComplex empty{};
    CHECK(homology::homology(empty).support() == 0);

    // One vertex, one loop.
    ChainComplex circle{{1, 1}, {IntMatrix(1, 1, {0})}};
    CHECK(homology::homology(circle) == graded({kZ, kZ}));

    // One vertex, two loops, one face attached along the commutator: the
    // boundary of the face hits each loop once with each sign.
    ChainComplex torus_like{{1, 2, 1},
                            {IntMatrix(1, 2), IntMatrix(2, 1, {1, -1})}};
    CHECK(homology::homology(torus_like) == graded({kZ, kZ, kTrivial}));

    // One vertex, one loop, one face wrapping the loop twice.
    ChainComplex moore{{1, 1, 1}, {IntMatrix(1, 1, {0}), IntMatrix(1, 1, {2})}};
    CHECK(homology::homology(moore) == graded({kZ, grp(0, {2}), kTrivial}));

    // No cells at all in the middle degree.
    ChainComplex sphere{{1, 0, 1}, {IntMatrix(1, 0), IntMatrix(0, 1)}};
    CHECK(homology::homology(sphere) == graded({kZ, kTrivial, kZ}));
}

TEST_CASE("homology rejects boundaries that do not compose to zero") {
    ChainComplex bad{{1, 1, 1}, {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {1})}};
    CHECK_FALSE(bad.is_complex());
    CHECK_THROWS_AS(homology::homology(bad), NotAComplexError);
}

TEST_CASE("check_shapes flags malformed complexes") {
    ChainComplex missing{{2, 2}, {}};
    CHECK_THROWS_AS(missing.check_shapes(), InvalidInputError);
    CHECK_FALSE(missing.is_complex());

    ChainComplex wrong_shape{{2, 1}, {IntMatrix(1, 1, {0})}};
    CHECK_THROWS_WITH_AS(wrong_shape.check_shapes(),
                         doctest::Contains("boundary 1 has shape 1x1"),
                         InvalidInputError);

    ChainComplex negative{{1, -2}, {IntMatrix(1, 0)}};
    CHECK_THROWS_AS(negative.check_shapes(), InvalidInputError);

    ChainComplex extra{{1}, {IntMatrix(1, 1, {0})}};
    CHECK_THROWS_AS(extra.check_shapes(), InvalidInputError);

    ChainComplex fine{{1, 1}, {IntMatrix(1, 1, {0})}};
    CHECK_NOTHROW(fine.check_shapes());
}

TEST_CASE("dim and boundary_from degrade gracefully off the support") {
    ChainComplex c{{2, 3}, {IntMatrix(2, 3)}};
    CHECK(c.top_degree() == 1);
    CHECK(c.dim(-1) == 0);
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(7) == 0);

    CHECK(c.boundary_from(0).rows() == 0);
    CHECK(c.boundary_from(0).cols() == 2);
    CHECK(c.boundary_from(1) == IntMatrix(2, 3));
    CHECK(c.boundary_from(2).rows() == 3);
    CHECK(c.boundary_from(2).cols() == 0);
    CHECK(c.boundary_from(9).rows() == 0);
    CHECK(c.boundary_from(9).cols() == 0);
}

TEST_CASE("random complexes agree with the rank and minor-gcd oracles") {
    for (int iter = 0; iter < 150; ++iter) {
        ChainComplex c = testsupport::random_complex();
        REQUIRE(c.is_complex());
        GradedGroup h = homology::homology(c);

        for (int k = 0; k <= c.top_degree(); ++k) {
            CAPTURE(iter);
            CAPTURE(k);
            int expected_free = c.dim(k) - rank_oracle(c.boundary_from(k)) -
                                rank_oracle(c.boundary_from(k + 1));
            CHECK(h.at(k).free_rank == expected_free);

            std::vector<Int> expected_torsion;
            for (const Int& d : snf_diagonal_oracle(c.boundary_from(k + 1)))
                if (d > 1) expected_torsion.push_back(d);
            CHECK(h.at(k).invariant_factors == expected_torsion);
        }

        // Euler characteristic from the chain groups equals its value from
        // the free ranks of homology.
        long chi_cells = 0, chi_homology = 0;
        for (int k = 0; k <= c.top_degree(); ++k) {
            long sign = (k % 2 == 0) ? 1 : -1;
            chi_cells += sign * c.dim(k);
            chi_homology += sign * h.at(k).free_rank;
        }
        CHECK(chi_cells == chi_homology);
    }
}

TEST_CASE("tensor_product convolves dimensions and stays a complex") {
    for (int iter = 0; iter < 60; ++iter) {
        ChainComplex a = testsupport::random_complex(2, 4);
        ChainComplex b = testsupport::random_complex(2, 4);
        ChainComplex t = homology::tensor_product(a, b);

        REQUIRE(t.dims.size() == a.dims.size() + b.dims.size() - 1);
        for (int k = 0; k < static_cast<int>(t.dims.size()); ++k) {
            int expected = 0;
            for (int i = 0; i <= k; ++i) expected += a.dim(i) * b.dim(k - i);
            CHECK(t.dim(k) == expected);
        }
        CHECK(t.is_complex());
    }
}

TEST_CASE("homology of a tensor product matches the graded prediction") {
    for (int iter = 0; iter < 40; ++iter) {
        ChainComplex a = testsupport::random_complex(2, 4);
        ChainComplex b = testsupport::random_complex(2, 4);
        CAPTURE(iter);
        CHECK(homology::homology(homology::tensor_product(a, b)) ==
              homology::kunneth_predict(homology::homology(a),
                                        homology::homology(b)));
    }
}

TEST_CASE("tensoring with a point changes nothing") {
    ChainComplex point{{1}, {}};
    for (int iter = 0; iter < 20; ++iter) {
        ChainComplex c = testsupport::random_complex();
        ChainComplex t = homology::tensor_product(c, point);
        CHECK(t.dims == c.dims);
        CHECK(t.boundaries == c.boundaries);
        ChainComplex u = homology::tensor_product(point, c);
        CHECK(u.dims == c.dims);
        CHECK(homology::homology(u) == homology::homology(c));
    }
}

TEST_CASE("tensor_product with an empty factor is empty") {
    ChainComplex c = testsupport::random_complex();
    ChainComplex empty{};
    CHECK(homology::tensor_product(c, empty).dims.empty());
    CHECK(homology::tensor_product(empty, c).dims.empty());
}

TEST_CASE("is_exact on pinned sequences") {
    // 0 -> Z -n-> Z -> 0 is exact exactly for n = +-1.
    for (int n : {-2, -1, 0, 1, 2, 5}) {
        std::vector<IntMatrix> seq{IntMatrix(1, 0), IntMatrix(1, 1, {Int(n)}),
                                   IntMatrix(0, 1)};
        CHECK(homology::is_exact(seq) == (n == 1 || n == -1));
    }

    // 0 -> Z -> Z^2 -> Z -> 0 splitting off the first coordinate.
    std::vector<IntMatrix> split{IntMatrix(1, 0), IntMatrix(2, 1, {1, 0}),
                                 IntMatrix(1, 2, {0, 1}), IntMatrix(0, 1)};
    CHECK(homology::is_exact(split));

    // Multiplication by 2 in one coordinate has index-two image: exact over
    // Q but not over Z.
    std::vector<IntMatrix> index_two{IntMatrix(2, 0),
                                     IntMatrix(2, 2, {1, 0, 0, 2}),
                                     IntMatrix(0, 2)};
    CHECK_FALSE(homology::is_exact(index_two));

    // An isomorphism flanked by zero spaces.
    std::vector<IntMatrix> iso{IntMatrix(3, 0),
                               IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}),
                               IntMatrix(0, 3)};
    CHECK(homology::is_exact(iso));

    // Too short to have an interior term.
    CHECK(homology::is_exact({IntMatrix(2, 3)}));
    CHECK(homology::is_exact(std::vector<IntMatrix>{}));
}

TEST_CASE("is_exact rejects non-composable sequences") {
    std::vector<IntMatrix> bad{IntMatrix(2, 2), IntMatrix(3, 3)};
    CHECK_THROWS_AS(homology::is_exact(bad), ShapeMismatchError);
}

TEST_CASE("kernel inclusion followed by the map is exact at the middle") {
    for (int iter = 0; iter < 100; ++iter) {
        int rows = rand_int(1, 4);
        int cols = rand_int(1, 4);
        IntMatrix a = testsupport::random_matrix(rows, cols);
        IntMatrix k = kernel_matrix(a);
        CAPTURE(iter);
        CHECK(homology::is_exact({k, a}));

        // Shrinking the kernel by doubling one column breaks integral
        // exactness whenever the kernel is nonzero.
        if (k.cols() > 0) {
            IntMatrix shrunk = k;
            for (int i = 0; i < shrunk.rows(); ++i) shrunk.at(i, 0) *= 2;
            CHECK_FALSE(homology::is_exact({shrunk, a}));
        }
    }
}

}  // TEST_SUITE
