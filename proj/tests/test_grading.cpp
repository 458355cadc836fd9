#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gradecheck/catalog.hpp"

using namespace gradecheck;

namespace {

Grading cartan() { return catalog_entry("cayley-cartan").grading; }
Grading cdgrading() { return catalog_entry("cayley-cd").grading; }

Grading trivial_on(const AlgebraPtr& a) {
    return Grading::diagonal(a, AbelianGroup::trivial(),
                             std::vector<GroupElem>(a->dim(), GroupElem{}));
}

}  // namespace

TEST_CASE("trivial grading verifies") {
    CHECK(verify_grading(trivial_on(cayley_algebra()), true).passed);
}

TEST_CASE("coarsen the Cartan grading to Z") {
    Grading g = cartan();
    GroupHom hom{g.group, AbelianGroup::free_group(1), {GroupElem{1}, GroupElem{1}}};
    Grading z = coarsen(g, hom);
    CHECK(verify_grading(z, true).passed);
    CHECK(z.degrees[7] == GroupElem{2});  // v3
    // collapse to the trivial group
    GroupHom to_trivial{g.group, AbelianGroup::trivial(), {GroupElem{}, GroupElem{}}};
    Grading t = coarsen(g, to_trivial);
    CHECK(t.support().size() == 1);
    // torsion-order violation is rejected
    Grading g2 = cdgrading();
    GroupHom bad{g2.group, AbelianGroup::cyclic(4), {GroupElem{1}, GroupElem{0}, GroupElem{0}}};
    CHECK_THROWS_AS(coarsen(g2, bad), std::invalid_argument);
}

TEST_CASE("Gamma^1_C(G, gamma) via a homomorphism, as in the C x C tables") {
    // gamma = (g1, g2, -(g1+g2)) inside Z/2 x Z^2 (free coordinates first)
    Grading g = cartan();
    AbelianGroup G{2, {2}};
    GroupHom hom{g.group, G, {GroupElem{1, 0, 0}, GroupElem{0, 1, 0}}};
    Grading induced = coarsen(g, hom);
    CHECK(verify_grading(induced, true).passed);
    CHECK(induced.support().size() == 7);
}

TEST_CASE("verify(coarsen) passes for random homomorphisms") {
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 15) {
        Grading g = (done % 2) ? cartan() : cdgrading();
        std::vector<AbelianGroup> targets = {AbelianGroup::cyclic(2),
                                             AbelianGroup{0, {2, 4}},
                                             AbelianGroup{1, {2}},
                                             AbelianGroup::free_group(1)};
        AbelianGroup tgt = targets[rng() % targets.size()];
        std::vector<GroupElem> images;
        for (size_t k = 0; k < g.group.coords(); ++k) {
            GroupElem e = g_zero(tgt);
            for (size_t c = 0; c < tgt.coords(); ++c) e[c] = (long long)(rng() % 5) - 2;
            images.push_back(g_reduce(tgt, e));
        }
        GroupHom hom{g.group, tgt, images};
        if (!hom.valid()) continue;
        Grading c = coarsen(g, hom);
        CHECK(verify_grading(c, false).passed);
        ++done;
    }
}

TEST_CASE("universal group is idempotent on the canonical relabeling") {
    for (const char* name : {"cayley-cartan", "cayley-cd", "cxk-2"}) {
        Grading g = catalog_entry(name).grading;
        auto [u1, r1] = universal_group(g);
        auto [u2, r2] = universal_group(r1);
        CHECK(u1.canonical_invariants() == u2.canonical_invariants());
    }
}

TEST_CASE("tensor combine of the two Cayley-Dickson gradings") {
    CatalogEntry e = catalog_entry("ctc-3");
    CHECK(e.grading.support().size() == 64);
    for (const auto& s : e.grading.support()) CHECK(e.grading.rows_of_degree(s).size() == 1);
    auto [u, re] = universal_group(e.grading);
    CHECK(u.isomorphic_to(AbelianGroup{0, {2, 2, 2, 2, 2, 2}}));
}

TEST_CASE("product grading over the same group stacks component dimensions") {
    Grading g1 = cartan();
    Grading g2 = cartan();
    Grading p = combine(g1, g2, CombineMode::product_same_group, cayley_times_cayley());
    CHECK(verify_grading(p, true).passed);
    for (const auto& s : p.support()) {
        size_t d = p.rows_of_degree(s).size();
        if (g_is_zero(s))
            CHECK(d == 4);
        else
            CHECK(d == 2);
    }
    // same-group mode rejects mismatched groups
    CHECK_THROWS_AS(combine(cartan(), cdgrading(), CombineMode::product_same_group,
                            cayley_times_cayley()),
                    std::invalid_argument);
}

TEST_CASE("tensor with the trivial grading keeps degrees") {
    Grading g = cartan();
    Grading t = trivial_on(cayley_algebra());
    Grading p = combine(g, t, CombineMode::tensor, cayley_tensor_cayley());
    CHECK(verify_grading(p, true).passed);
    CHECK(p.group.free_rank == 2);
    CHECK(p.support().size() == 7);
}

TEST_CASE("graded-simplicity of the loop and product gradings") {
    AlgebraPtr cc = cayley_times_cayley();
    Matrix seed1(1, 16), seed2(1, 16);
    seed1.at(0, 0) = Scalar(1);
    seed2.at(0, 8) = Scalar(1);
    Subspace i1 = ideal_closure(cc, seed1);
    Subspace i2 = ideal_closure(cc, seed2);
    CHECK(i1.dim() == 8);
    CHECK(i2.dim() == 8);
    std::vector<Subspace> ideals = {i1, i2};
    CHECK(graded_simple(catalog_entry("cxc-loop-z2z2").grading, ideals));
    CHECK(!graded_simple(catalog_entry("cxc-prod-11").grading, ideals));
    CHECK(!graded_simple(trivial_on(cc), ideals));
    CHECK_THROWS_AS(graded_simple(trivial_on(cc), {}), std::invalid_argument);
}

TEST_CASE("equivalence witnesses") {
    Grading g = cartan();
    // identity witness
    EquivalenceWitness id;
    id.map = Matrix::identity(8);
    for (const auto& s : g.support()) id.support_bijection.emplace_back(s, s);
    CHECK(check_equivalence_witness(g, g, id).passed);

    // Cartan vs negated Cartan. Two passing witnesses: the identity map with
    // the negation bijection, and the swap automorphism e1<->e2, u_i<->v_i
    // (which maps C_g onto C_{-g}) with the identity bijection.
    Grading neg = g;
    for (auto& d : neg.degrees) d = g_neg(g.group, d);
    EquivalenceWitness idneg;
    idneg.map = Matrix::identity(8);
    for (const auto& s : g.support()) idneg.support_bijection.emplace_back(s, g_neg(g.group, s));
    CHECK(check_equivalence_witness(g, neg, idneg).passed);
    EquivalenceWitness swapw;
    swapw.map = Matrix(8, 8);
    swapw.map.at(0, 1) = Scalar(1);
    swapw.map.at(1, 0) = Scalar(1);
    for (size_t i = 0; i < 3; ++i) {
        swapw.map.at(2 + i, 5 + i) = Scalar(1);
        swapw.map.at(5 + i, 2 + i) = Scalar(1);
    }
    for (const auto& s : g.support()) swapw.support_bijection.emplace_back(s, s);
    CHECK(check_equivalence_witness(g, neg, swapw).passed);

    // the conjugation is an antiautomorphism, not an automorphism: it must
    // fail the multiplicativity leg
    EquivalenceWitness conj;
    conj.map = cayley_algebra()->involution();
    for (const auto& s : g.support()) conj.support_bijection.emplace_back(s, g_neg(g.group, s));
    Report r = check_equivalence_witness(g, neg, conj);
    CHECK(!r.passed);
    CHECK(r.counterexample->expected.find("phi(xy)") != std::string::npos);

    // Cartan vs Cayley-Dickson: support sizes differ, no bijection possible
    Report r2 = check_equivalence_witness(g, cdgrading(), id);
    CHECK(!r2.passed);
}

TEST_CASE("grading invariants separate the fine gradings on C") {
    GradingInvariants i1 = grading_invariants(cartan());
    CHECK(i1.support_size == 7);
    CHECK(i1.component_dims == std::vector<size_t>{1, 1, 1, 1, 1, 1, 2});
    CHECK(i1.universal == AbelianGroup::free_group(2).canonical_invariants());
    GradingInvariants i2 = grading_invariants(cdgrading());
    CHECK(i2.support_size == 8);
    CHECK(i2.component_dims == std::vector<size_t>(8, 1));
    CHECK(i2.universal == AbelianGroup({0, {2, 2, 2}}).canonical_invariants());
    CHECK(!(i1 == i2));
    GradingInvariants i3 = grading_invariants(trivial_on(cayley_algebra()));
    CHECK(i3.support_size == 1);
    CHECK(i3.component_dims == std::vector<size_t>{8});
    CHECK(i3.universal.first == 0);
    CHECK(i3.universal.second.empty());
}

TEST_CASE("invariants agree for gradings related by a passing witness") {
    Grading g = cartan();
    Grading neg = g;
    for (auto& d : neg.degrees) d = g_neg(g.group, d);
    CHECK(grading_invariants(g) == grading_invariants(neg));
}
