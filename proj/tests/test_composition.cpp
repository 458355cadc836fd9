#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradecheck/composition.hpp"

using namespace gradecheck;

namespace {

Vec bv(const AlgebraPtr& a, const std::string& label) {
    for (size_t i = 0; i < a->dim(); ++i)
        if (a->labels()[i] == label) return a->basis_vec(i);
    throw std::runtime_error("no basis label " + label);
}

}  // namespace

TEST_CASE("good-basis table facts") {
    auto [c8, n8] = split_hurwitz(8);
    CHECK(c8->multiply(bv(c8, "e2"), bv(c8, "v1")) == bv(c8, "v1"));
    // conjugation swaps the idempotents and matches n(x,1)1 - x
    CHECK(c8->conj(bv(c8, "e1")) == bv(c8, "e2"));
    for (size_t i = 0; i < 8; ++i) {
        Vec x = c8->basis_vec(i);
        Vec expect = sub(scaled(c8->unit(), n8.bilinear(x, c8->unit())), x);
        CHECK(c8->conj(x) == expect);
    }
    auto [h4, n4] = split_hurwitz(4);
    CHECK(h4->multiply(bv(h4, "u1"), bv(h4, "v1")) == scaled(bv(h4, "e1"), Scalar(-1)));
}

TEST_CASE("all split Hurwitz algebras are composition algebras") {
    for (size_t dim : {1u, 2u, 4u, 8u}) {
        auto [a, n] = split_hurwitz(dim);
        CHECK(check_composition(*a, n).passed);
        CHECK(check_alternative(*a).passed);
        CHECK(n.gram.rank() == dim);  // nondegenerate
    }
}

TEST_CASE("a corrupted table fails the composition check") {
    auto [c, n] = split_hurwitz(8);
    auto st = c->structure();
    // flip the sign of u1*u2 = v3
    SparseRow& row = st[2 * 8 + 3];
    for (auto& [k, v] : row.ent) v = -v;
    AlgebraOptions opt;
    opt.validate = false;
    auto bad = Algebra::create("C-flip", 8, c->labels(), std::move(st), c->involution(), c->unit(),
                               opt);
    Report r = check_composition(*bad, n);
    CHECK(!r.passed);
    REQUIRE(r.counterexample.has_value());
}

TEST_CASE("Cayley-Dickson doubling of the field") {
    auto [f, nf] = split_hurwitz(1);
    auto [k, nk] = cayley_dickson_double(f, Scalar(1));
    CHECK(k->dim() == 2);
    CHECK(check_composition(*k, nk).passed);
    // explicit isomorphism onto the split quadratic algebra: 1 -> e1+e2,
    // w -> e1-e2
    auto [k2, nk2] = split_hurwitz(2);
    Matrix phi(2, 2);
    phi.at(0, 0) = Scalar(1);
    phi.at(0, 1) = Scalar(1);
    phi.at(1, 0) = Scalar(1);
    phi.at(1, 1) = Scalar(-1);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Vec lhs = phi.apply(k->multiply(k->basis_vec(i), k->basis_vec(j)));
            Vec rhs = k2->multiply(phi.row(i), phi.row(j));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("three doublings of the field give a composition algebra") {
    auto [f, n0] = split_hurwitz(1);
    auto [a1, n1] = cayley_dickson_double(f, Scalar(1));
    auto [a2, n2] = cayley_dickson_double(a1, Scalar(1));
    auto [a3, n3] = cayley_dickson_double(a2, Scalar(1));
    CHECK(a3->dim() == 8);
    CHECK(check_composition(*a3, n3).passed);
    CHECK_THROWS_AS(cayley_dickson_double(a3, Scalar(1)), std::invalid_argument);
    CHECK_THROWS_AS(cayley_dickson_double(a2, Scalar(0)), std::invalid_argument);
}

TEST_CASE("Cartan grading on the split Cayley algebra") {
    Grading g = standard_grading(8, StandardGradingKind::cartan);
    CHECK(verify_grading(g, true).passed);
    CHECK(g.support().size() == 7);
    CHECK(g.degrees[2] == GroupElem{1, 0});   // u1
    CHECK(g.degrees[7] == GroupElem{1, 1});   // v3
    auto [u, regraded] = universal_group(g);
    CHECK(u.isomorphic_to(AbelianGroup::free_group(2)));
    CHECK(verify_grading(regraded, true).passed);
}

TEST_CASE("corrupted Cartan grading fails at (u1, u2)") {
    Grading g = standard_grading(8, StandardGradingKind::cartan);
    g.degrees[2] = GroupElem{2, 0};
    Report r = verify_grading(g, false);
    CHECK(!r.passed);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->inputs.find("u1") != std::string::npos);
}

TEST_CASE("Cayley-Dickson grading on the split Cayley algebra") {
    Grading g = standard_grading(8, StandardGradingKind::cayley_dickson);
    CHECK(verify_grading(g, true).passed);
    CHECK(g.support().size() == 8);
    for (const auto& s : g.support()) CHECK(g.rows_of_degree(s).size() == 1);
    auto [u, regraded] = universal_group(g);
    CHECK(u.isomorphic_to(AbelianGroup{0, {2, 2, 2}}));
}

TEST_CASE("Cayley-Dickson gradings in low dimensions") {
    Grading g2 = standard_grading(2, StandardGradingKind::cayley_dickson);
    CHECK(verify_grading(g2, true).passed);
    CHECK(g2.degrees[0] == GroupElem{0});
    CHECK(g2.degrees[1] == GroupElem{1});
    CHECK_THROWS_AS(standard_grading(2, StandardGradingKind::cartan), std::invalid_argument);

    Grading g4cd = standard_grading(4, StandardGradingKind::cayley_dickson);
    CHECK(verify_grading(g4cd, true).passed);
    auto [u4, r4] = universal_group(g4cd);
    CHECK(u4.isomorphic_to(AbelianGroup{0, {2, 2}}));

    Grading g4c = standard_grading(4, StandardGradingKind::cartan);
    CHECK(verify_grading(g4c, true).passed);
    auto [u4c, r4c] = universal_group(g4c);
    CHECK(u4c.isomorphic_to(AbelianGroup::free_group(1)));
}

TEST_CASE("norm is homogeneous for the standard gradings") {
    for (auto [dim, kind] : std::vector<std::pair<size_t, StandardGradingKind>>{
             {8, StandardGradingKind::cartan},
             {8, StandardGradingKind::cayley_dickson},
             {4, StandardGradingKind::cartan},
             {4, StandardGradingKind::cayley_dickson},
             {2, StandardGradingKind::cayley_dickson}}) {
        Grading g = standard_grading(dim, kind);
        QuadraticForm n = norm_from_conjugation(*g.algebra);
        for (size_t r = 0; r < dim; ++r)
            for (size_t s = 0; s < dim; ++s) {
                if (n.bilinear(g.hbasis.row(r), g.hbasis.row(s)).is_zero()) continue;
                CHECK(g_is_zero(g_add(g.group, g.degrees[r], g.degrees[s])));
            }
    }
}
