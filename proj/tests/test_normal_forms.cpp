#include <catch2/catch_amalgamated.hpp>

#include "uctkit/normal_forms.hpp"

#include <random>

using namespace uctkit;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t maxdim, long bound) {
    std::size_t r = 1 + rng() % maxdim, c = 1 + rng() % maxdim;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

bool divisibility_chain(const IntMatrix& d) {
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    bool seen_zero = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& x = d.at(i, i);
        if (x < 0) return false;
        if (x == 0) { seen_zero = true; continue; }
        if (seen_zero) return false;  // zeros must come last
        if (i + 1 < n && d.at(i + 1, i + 1) != 0 && d.at(i + 1, i + 1) % x != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form: identity and zero") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
    CHECK(s.u == IntMatrix::identity(2));
    CHECK(s.v == IntMatrix::identity(2));

    auto z = smith_normal_form(IntMatrix::zero(2, 3));
    CHECK(z.d == IntMatrix::zero(2, 3));
}

TEST_CASE("smith normal form: diag(2,4) frozen from gcd/det oracle") {
    // Oracle: d1 = gcd of all entries = 2, d1*d2 = |det| = |2*8-4*6| = 8, so d2 = 4.
    IntMatrix a = IntMatrix::of({{2, 4}, {6, 8}});
    auto s = smith_normal_form(a);
    CHECK(s.d == IntMatrix::of({{2, 0}, {0, 4}}));
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
}

TEST_CASE("smith normal form: random UAV=D and canonical invariance") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 200; ++t) {
        IntMatrix a = random_matrix(rng, 5, 30);
        auto s = smith_normal_form(a);
        REQUIRE(s.u * a * s.v == s.d);
        REQUIRE(is_unimodular(s.u));
        REQUIRE(is_unimodular(s.v));
        REQUIRE(divisibility_chain(s.d));

        // Canonical D is invariant under pre/post permutation (a different
        // elimination order on the same lattice pair).
        IntMatrix p = a.transpose();
        auto st = smith_normal_form(p);
        REQUIRE(st.d.transpose().submatrix(0, 0, std::min(a.rows(), a.cols()),
                                           std::min(a.rows(), a.cols())) ==
                s.d.submatrix(0, 0, std::min(a.rows(), a.cols()), std::min(a.rows(), a.cols())));
    }
}

TEST_CASE("hermite_solve basics") {
    IntMatrix a(1, 1);
    a.at(0, 0) = 2;
    auto r1 = hermite_solve(a, {Int(4)});
    REQUIRE(r1.solution.has_value());
    CHECK((*r1.solution)[0] == 2);
    CHECK(r1.kernel.cols() == 0);

    auto r2 = hermite_solve(a, {Int(3)});
    CHECK(!r2.solution.has_value());

    IntMatrix b = IntMatrix::of({{2, 3}});
    auto r3 = hermite_solve(b, {Int(1)});
    REQUIRE(r3.solution.has_value());
    CHECK(b.mul_vec(*r3.solution) == std::vector<Int>{Int(1)});
    // Kernel of [2 3] is spanned by (3, -2).
    CHECK(lattice_equal(r3.kernel, IntMatrix::of({{3}, {-2}})));

    CHECK_THROWS_AS(hermite_solve(b, {Int(1), Int(2)}), std::invalid_argument);
}

TEST_CASE("solve on random systems") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 100; ++t) {
        IntMatrix a = random_matrix(rng, 4, 9);
        std::vector<Int> x0(a.cols());
        for (auto& v : x0) v = static_cast<long>(rng() % 11) - 5;
        std::vector<Int> b = a.mul_vec(x0);
        auto s = solve(a, b);
        REQUIRE(s.has_value());
        REQUIRE(a.mul_vec(*s) == b);
    }
}

TEST_CASE("lattice operations") {
    // Same column lattice, different generators.
    IntMatrix a = IntMatrix::of({{2, 0}, {0, 3}});
    IntMatrix b = IntMatrix::of({{2, 2}, {3, -3}});
    CHECK(!lattice_equal(a, b));
    IntMatrix c = IntMatrix::of({{2, 0, 2}, {0, 3, 3}});
    CHECK(lattice_equal(a, c));

    CHECK(in_lattice(a, {Int(4), Int(9)}));
    CHECK(!in_lattice(a, {Int(1), Int(0)}));

    // preimage of 2Z under x -> 3x is 2Z.
    IntMatrix three = IntMatrix::of({{3}});
    IntMatrix twoZ = IntMatrix::of({{2}});
    CHECK(lattice_equal(preimage_lattice(three, twoZ), twoZ));
}

TEST_CASE("kernel basis") {
    IntMatrix a = IntMatrix::of({{1, 2, 3}, {2, 4, 6}});
    IntMatrix k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
}

TEST_CASE("complete_to_basis extends a saturated lattice") {
    IntMatrix b = IntMatrix::of({{1}, {2}, {3}});
    IntMatrix full = complete_to_basis(b);
    REQUIRE(is_unimodular(full));
    CHECK(lattice_equal(full.submatrix(0, 0, 3, 1), b));
}
