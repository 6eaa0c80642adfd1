#include <catch2/catch_amalgamated.hpp>

#include "uctkit/presentation.hpp"

using namespace uctkit;

namespace {

Presentation periodic_presentation(std::size_t pi) {
    Presentation p;
    for (std::size_t i = 0; i < pi; ++i) p.vertices.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i < pi; ++i)
        p.arrows.push_back(QuiverArrow{"d" + std::to_string(i), i, (i + pi - 1) % pi});
    for (std::size_t i = 0; i < pi; ++i) {
        std::size_t prev = (i + pi - 1) % pi;
        // d_{i-1} o d_i = 0
        p.relations.push_back(
            Relation{i, (prev + pi - 1) % pi, {PathTerm{{i, prev}, Int(1)}}});
    }
    return p;
}

}  // namespace

TEST_CASE("compile periodic complex presentation (pi = 2)") {
    Presentation pres = periodic_presentation(2);
    std::vector<std::vector<std::size_t>> bounds{{1, 1}, {1, 1}};
    CompiledCategory cc = compile_presentation(pres, bounds);
    REQUIRE(validate_category(cc.cat).ok());
    CHECK(cc.cat.hom[0][0].size() == 1);
    CHECK(cc.cat.hom[0][1].size() == 1);
    CHECK(cc.cat.hom[1][0].size() == 1);
    // d o d = 0
    MorphismElt dd = cc.cat.compose(cc.arrow_classes[1], cc.arrow_classes[0]);
    CHECK(cc.cat.is_zero(dd));
}

TEST_CASE("inconsistent presentation: id_c = 0") {
    Presentation pres;
    pres.vertices = {"c"};
    pres.arrows.push_back(QuiverArrow{"x", 0, 0});
    pres.relations.push_back(Relation{0, 0, {PathTerm{{}, Int(1)}}});  // id = 0
    std::vector<std::vector<std::size_t>> bounds{{1}};
    CHECK_THROWS_AS(compile_presentation(pres, bounds), InconsistentRelations);
}

TEST_CASE("koehler category at p = 2") {
    KoehlerCategory k = koehler_cat(2);
    const ZCategory& cat = k.compiled.cat;
    REQUIRE(validate_category(cat).ok());
    CHECK(k.end_ring_rank == 2);

    std::size_t a0 = cat.object_index("A0");
    CHECK(cat.hom[a0][a0].size() == 2);  // End(A0) = Z[t]/(1-t^2)
    // t0^2 = id
    MorphismElt t0 = k.compiled.arrow_classes[0];
    CHECK(cat.compose(t0, t0) == cat.identity_elt(a0));

    std::size_t a1 = cat.object_index("A1"), a2 = cat.object_index("A2");
    CHECK(cat.hom[a0][a1].size() == 1);
    CHECK(cat.hom[a0][a2].size() == 1);  // p - 1 = 1
    CHECK(cat.hom[a2][a2].size() == 2);
    CHECK(cat.hom[a0][cat.object_index("SA0")].empty());

    // End(A2) is commutative: s2 t2 = t2 s2 (derived from the relations)
    MorphismElt s2 = k.compiled.arrow_classes[2];
    MorphismElt t2 = k.compiled.arrow_classes[3];
    CHECK(cat.compose(s2, t2) == cat.compose(t2, s2));
}

TEST_CASE("koehler category at p = 3") {
    KoehlerCategory k = koehler_cat(3);
    const ZCategory& cat = k.compiled.cat;
    REQUIRE(validate_category(cat).ok());
    CHECK(k.end_ring_rank == 4);

    std::size_t a0 = cat.object_index("A0"), a2 = cat.object_index("A2");
    CHECK(cat.hom[a0][a0].size() == 3);
    CHECK(cat.hom[a2][a2].size() == 4);
    CHECK(cat.hom[a0][a2].size() == 2);
    CHECK(cat.hom[a2][a0].size() == 2);

    // t0^3 = id in End(A0)
    MorphismElt t0 = k.compiled.arrow_classes[0];
    MorphismElt t03 = cat.compose(t0, cat.compose(t0, t0));
    CHECK(t03 == cat.identity_elt(a0));

    MorphismElt s2 = k.compiled.arrow_classes[2];
    MorphismElt t2 = k.compiled.arrow_classes[3];
    CHECK(cat.compose(s2, t2) == cat.compose(t2, s2));

    // suspension is involutive
    REQUIRE(cat.suspension.has_value());
    for (std::size_t c = 0; c < cat.size(); ++c)
        CHECK(cat.suspension->obj[cat.suspension->obj[c]] == c);
}
