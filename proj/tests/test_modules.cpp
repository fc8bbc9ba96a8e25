#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpnkit/modules.hpp"

using namespace fpnkit;

namespace {

const RingId Z = RingId::integers();

AbGroupValue group(int free_rank, std::vector<mpz_class> torsion) {
    return AbGroupValue{free_rank, std::move(torsion)};
}

}  // namespace

TEST_CASE("abelian invariants of presentations") {
    CHECK(abelian_invariants(diagonal_presentation(Z, {6})) == group(0, {6}));
    CHECK(abelian_invariants(free_presentation(Z, 2)) == group(2, {}));
    RingMatrix rel = from_rows(Z, {{2, 0}, {0, 0}});
    CHECK(abelian_invariants(make_presentation(Z, 2, rel)) == group(1, {2}));
    // relations that need diagonalization first
    CHECK(abelian_invariants(make_presentation(Z, 2, from_rows(Z, {{2, 4}, {6, 8}}))) ==
          group(0, {2, 4}));
    CHECK(abelian_invariants(diagonal_presentation(Z, {2, 3})) == group(0, {6}));
}

TEST_CASE("hom groups over the integers") {
    Presentation z = free_presentation(Z, 1);
    Presentation z2 = diagonal_presentation(Z, {2});
    Presentation z4 = diagonal_presentation(Z, {4});

    CHECK(hom_module(z, z).group == group(1, {}));
    CHECK(hom_module(z4, z2).group == group(0, {2}));
    CHECK(hom_module(z2, z).group.is_zero());
    CHECK(hom_module(z2, z4).group == group(0, {2}));
}

TEST_CASE("ext and tor over the integers") {
    Presentation z = free_presentation(Z, 1);
    Presentation z2 = diagonal_presentation(Z, {2});
    Presentation z4 = diagonal_presentation(Z, {4});
    Presentation z6 = diagonal_presentation(Z, {6});

    CHECK(ext_group(z2, z, 1).group == group(0, {2}));
    CHECK(ext_group(z2, z2, 1).group == group(0, {2}));
    CHECK(ext_group(z, z2, 1).group.is_zero());
    CHECK(ext_group(z4, z6, 1).group == group(0, {2}));
    CHECK(ext_group(z2, z2, 2).group.is_zero());  // pd over Z is at most 1

    CHECK(tor_group(z2, z2, 1).group == group(0, {2}));
    CHECK(tor_group(z4, z6, 1).group == group(0, {2}));
    CHECK(tor_group(z, z6, 1).group.is_zero());
    CHECK(tor_group(z2, z2, 0).group == group(0, {2}));  // the tensor product
}

TEST_CASE("homological algebra over Z/4 sees the periodic resolution") {
    RingId z4 = RingId::modular(4);
    Presentation i = diagonal_presentation(z4, {2}, "2Z/4Z");

    Presentation s = syzygy(i);
    CHECK(s.generators == 1);
    CHECK(module_canonical_form(s) == module_canonical_form(i));

    CHECK(ext_group(i, i, 1).group == group(0, {2}));
    CHECK(ext_group(i, i, 2).group == group(0, {2}));  // periodicity
    CHECK(tor_group(i, i, 1).group == group(0, {2}));
    CHECK(hom_module(i, i).group == group(0, {2}));

    Presentation f = free_presentation(z4, 1);
    CHECK(ext_group(i, f, 1).group.is_zero());  // Z/4 is self-injective
    CHECK(ext_group(f, i, 1).group.is_zero());
}

TEST_CASE("projectivity splitting test") {
    RingId z4 = RingId::modular(4);
    CHECK(is_projective(free_presentation(z4, 2)).projective);
    ProjectivityResult p = is_projective(diagonal_presentation(z4, {2}));
    CHECK_FALSE(p.projective);

    // over Z/6 the summand Z/2 is projective (Z/6 = Z/2 x Z/3)
    RingId z6 = RingId::modular(6);
    ProjectivityResult q = is_projective(diagonal_presentation(z6, {2}));
    CHECK(q.projective);
    REQUIRE(q.section_witness.has_value());

    CHECK(is_projective(free_presentation(Z, 1)).projective);
    CHECK_FALSE(is_projective(diagonal_presentation(Z, {2})).projective);
}

TEST_CASE("pd bound") {
    CHECK(pd_at_most_one(diagonal_presentation(Z, {2})));
    CHECK_FALSE(pd_at_most_one(diagonal_presentation(RingId::modular(4), {2})));
}

TEST_CASE("classification over non-windowed rings is unconditional") {
    FpCertificate c = classify_fp(diagonal_presentation(Z, {6}), 3, {});
    CHECK(c.verdict == FpVerdict::FPnVerified);
    CHECK(c.level_verified == 3);
    CHECK(c.stage_counts.at({0, 0}) == 1);
    CHECK(c.stage_counts.at({1, 0}) == 1);
    CHECK(c.stage_counts.at({2, 0}) == 0);  // the resolution terminates
}

TEST_CASE("classification detects syzygy growth over the square-zero algebra") {
    RingId sq = RingId::square_zero(FieldKind::F2);
    RingMatrix rel(sq, 1, 1);
    rel.at(0, 0) = sq_var(sq, 1);
    FpCertificate c = classify_fp(make_presentation(sq, 1, rel, "R/(x1)"), 2, {2, 4, 8});
    CHECK(c.verdict == FpVerdict::SyzygyGrowth);
    CHECK(c.growth_stage == 2);
    CHECK(c.level_verified == 1);
    CHECK(c.growth_counts == std::vector<int>{2, 4, 8});

    RingMatrix gens(sq, 1, 1);
    gens.at(0, 0) = sq_var(sq, 1);
    FpCertificate ci = classify_fp_submodule(gens, 2, {2, 4, 8});
    CHECK(ci.verdict == FpVerdict::SyzygyGrowth);
    CHECK(ci.growth_stage == 1);
    CHECK(ci.growth_counts == std::vector<int>{2, 4, 8});
}

TEST_CASE("windowed hom and ext report witnesses") {
    RingId u = RingId::unitification();
    RingMatrix rel(u, 1, 1);
    rel.at(0, 0) = u_elem(3, {});
    Presentation c = make_presentation(u, 1, rel, "R/(3;)");
    Presentation f = free_presentation(u, 1, "R");

    HomDescription h = hom_module(c, f, 4);
    CHECK(h.windowed);
    CHECK(h.is_zero());  // no 3-torsion in R

    HomologyValue e = ext_group(c, f, 1, 4);
    CHECK(e.windowed);
    CHECK_FALSE(e.is_zero());  // R/(3;) has a nonsplit extension by R
    REQUIRE(e.witness.has_value());

    HomDescription id = hom_module(c, c, 4);
    CHECK_FALSE(id.is_zero());  // the identity map

    CHECK_THROWS(hom_module(c, f));  // windowed ring needs a window
}

TEST_CASE("character dual preserves invariant factors") {
    RingId z4 = RingId::modular(4);
    Presentation m = diagonal_presentation(z4, {2});
    CHECK(abelian_invariants(character_dual(m)) == abelian_invariants(m));
    Presentation big = make_presentation(z4, 2, from_rows(z4, {{2, 1}, {0, 2}}));
    CHECK(abelian_invariants(character_dual(big)) == abelian_invariants(big));
}

TEST_CASE("direct sums add invariants") {
    Presentation s = direct_sum(free_presentation(Z, 1), diagonal_presentation(Z, {6}));
    CHECK(abelian_invariants(s) == group(1, {6}));
}
