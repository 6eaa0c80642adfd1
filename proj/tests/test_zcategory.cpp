#include <catch2/catch_amalgamated.hpp>

#include "uctkit/filtkk_cat.hpp"
#include "uctkit/zcategory.hpp"

using namespace uctkit;

TEST_CASE("built-in constructors validate") {
    for (std::size_t m : {2u, 3u, 6u})
        CHECK(validate_category(groupoid_cat(cyclic_group_table(m))).ok());
    CHECK(validate_category(groupoid_cat(s3_group_table())).ok());
    for (std::size_t pi : {1u, 2u, 3u, 4u})
        CHECK(validate_category(periodic_complex_cat(pi)).ok());
    for (long n : {1L, 2L, 3L, 4L}) CHECK(validate_category(filtkk_cat(n)).ok());
    for (long nb : {4L, 8L, 12L}) CHECK(validate_category(pure_periodic_cat(nb)).ok());
}

TEST_CASE("mutated composition constant is reported with a witness") {
    ZCategory cat = filtkk_cat(2);
    std::size_t c = cat.object_index("A(1,1)");
    cat.comp[c][c][c][0][0] += 1;  // id o id becomes 2*id
    auto rep = validate_category(cat);
    REQUIRE(!rep.ok());
    bool named = false;
    for (const auto& f : rep.failures)
        if (f.find("A(1,1)") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("compose: units and filtkk box behaviour") {
    ZCategory c2 = filtkk_cat(2);
    std::size_t a11 = c2.object_index("A(1,1)");
    std::size_t a12 = c2.object_index("A(1,2)");
    std::size_t a22 = c2.object_index("A(2,2)");

    MorphismElt f = c2.basis_elt(a11, a12, 0);
    CHECK(c2.compose(f, c2.identity_elt(a11)) == f);
    CHECK(c2.compose(c2.identity_elt(a12), f) == f);

    // total target leaves the box of (1,1): composite vanishes
    REQUIRE(c2.hom[a11][a22].empty());  // box rule: a' <= b fails
    MorphismElt g = c2.basis_elt(a12, a22, 0);
    MorphismElt gf = c2.compose(g, f);
    CHECK(c2.is_zero(gf));

    // composition of canonical generators inside the box is canonical
    ZCategory c3 = filtkk_cat(3);
    std::size_t b12 = c3.object_index("A(1,2)");
    std::size_t b13 = c3.object_index("A(1,3)");
    std::size_t b23 = c3.object_index("A(2,3)");
    MorphismElt u = c3.basis_elt(b12, b13, 0);
    MorphismElt v = c3.basis_elt(b13, b23, 0);
    CHECK(c3.compose(v, u) == c3.basis_elt(b12, b23, 0));

    CHECK_THROWS_AS(c2.compose(f, g), NonComposableError);
}

TEST_CASE("filtkk box rule and rank bound") {
    for (long n = 1; n <= 4; ++n) {
        ZCategory cat = filtkk_cat(n);
        for (std::size_t c = 0; c < cat.size(); ++c)
            for (std::size_t d = 0; d < cat.size(); ++d) {
                REQUIRE(cat.hom[c][d].size() <= 1);
                auto pc = filt::object_point(n, c);
                auto pd = filt::object_point(n, d);
                // independent re-derivation: scan translates directly
                bool expect = false;
                for (long k = -2; k <= 2; ++k) {
                    long ta = pd.a + k * (n + 1), tb = pd.b + k * (n + 1);
                    if (pc.a <= ta && ta <= pc.b && pc.b <= tb && tb <= pc.a + n - 1)
                        expect = true;
                }
                REQUIRE(cat.hom[c][d].size() == (expect ? 1u : 0u));
            }
    }
}

TEST_CASE("suspension is involutive on 2-periodic instances") {
    for (long n : {1L, 2L, 3L, 4L}) {
        ZCategory cat = filtkk_cat(n);
        REQUIRE(cat.suspension.has_value());
        for (std::size_t c = 0; c < cat.size(); ++c)
            CHECK(cat.suspension->obj[cat.suspension->obj[c]] == c);
        for (std::size_t c = 0; c < cat.size(); ++c)
            for (std::size_t d = 0; d < cat.size(); ++d)
                for (std::size_t i = 0; i < cat.hom[c][d].size(); ++i) {
                    MorphismElt m = cat.basis_elt(c, d, i);
                    CHECK(cat.suspend(cat.suspend(m)) == m);
                }
    }
    ZCategory pp = pure_periodic_cat(6);
    for (std::size_t c = 0; c < pp.size(); ++c)
        CHECK(pp.suspension->obj[pp.suspension->obj[c]] == c);
}

TEST_CASE("pure periodic category reproduces the stable Hom table") {
    ZCategory cat = pure_periodic_cat(8);
    auto idx = [&](int deg, long a) {
        std::string base = a == 0 ? "Z" : "Z/" + std::to_string(a);
        return cat.object_index((deg == 1 ? "S" : "") + base);
    };
    // Hom(Z/6, Z/4) = Z/2 on the tabled generator
    std::size_t z6 = idx(0, 6), z4 = idx(0, 4);
    REQUIRE(cat.hom[z6][z4].size() == 1);
    CHECK(cat.hom[z6][z4][0].order == 2);
    CHECK(cat.hom[z6][z4][0].name == "g_6_4");
    // Hom(Z, SZ) = 0
    CHECK(cat.hom[idx(0, 0)][idx(1, 0)].empty());
    // End(Z) = Z id
    REQUIRE(cat.hom[idx(0, 0)][idx(0, 0)].size() == 1);
    CHECK(cat.hom[idx(0, 0)][idx(0, 0)][0].order == 0);

    // composition: g_{6,4} o g_{8,6} = (6*(8,4)/((8,6)*(6,4))) g_{8,4} = 6*4/(2*2) = 6 = 2 mod 4
    std::size_t z8 = idx(0, 8);
    MorphismElt x = cat.basis_elt(z8, z6, 0);
    MorphismElt y = cat.basis_elt(z6, z4, 0);
    MorphismElt comp = cat.compose(y, x);
    REQUIRE(comp.coeffs.size() == 1);
    CHECK(comp.coeffs[0] == 2);  // order gcd(8,4) = 4, coefficient 6 mod 4

    // sigma o sigma = 0 (Bockstein squares to zero)
    MorphismElt s1 = cat.basis_elt(idx(0, 4), idx(1, 6), 0);
    MorphismElt s2 = cat.basis_elt(idx(1, 6), idx(0, 8), 0);
    CHECK(cat.is_zero(cat.compose(s2, s1)));

    // S red_c o bock_a = sigma_{a,c}
    MorphismElt bock = cat.basis_elt(idx(0, 4), idx(1, 0), 0);
    MorphismElt sred = cat.basis_elt(idx(1, 0), idx(1, 6), 0);
    CHECK(cat.compose(sred, bock) == cat.basis_elt(idx(0, 4), idx(1, 6), 0));
}

TEST_CASE("periodic complex categories") {
    ZCategory c1 = periodic_complex_cat(1);
    REQUIRE(c1.hom[0][0].size() == 2);  // id and d
    MorphismElt d = c1.basis_elt(0, 0, 1);
    CHECK(c1.is_zero(c1.compose(d, d)));

    ZCategory c3 = periodic_complex_cat(3);
    std::size_t c0 = c3.object_index("c0"), c2o = c3.object_index("c2"),
                c1o = c3.object_index("c1");
    REQUIRE(c3.hom[c0][c2o].size() == 1);  // d_0 : c0 -> c2
    REQUIRE(c3.hom[c1o][c0].size() == 1);  // d_1 : c1 -> c0
    // d_0 o d_1 = 0 in Hom(c1, c2)
    CHECK(c3.hom[c1o][c2o].empty());
    MorphismElt comp = c3.compose(c3.basis_elt(c0, c2o, 0), c3.basis_elt(c1o, c0, 0));
    CHECK(c3.is_zero(comp));
}
