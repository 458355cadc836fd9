#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradecheck/catalog.hpp"

using namespace gradecheck;

namespace {

Vec bv(const AlgebraPtr& a, const std::string& label) {
    for (size_t i = 0; i < a->dim(); ++i)
        if (a->labels()[i] == label) return a->basis_vec(i);
    throw std::runtime_error("no basis label " + label);
}

// span equality helper
bool same_span(const Matrix& a, const Matrix& b) { return row_space(a) == row_space(b); }

}  // namespace

TEST_CASE("tensor with the one-dimensional algebra reproduces the factor") {
    auto [f, nf] = split_hurwitz(1);
    AlgebraPtr c = cayley_algebra();
    AlgebraPtr cf = tensor_with_involution(c, f);
    REQUIRE(cf->dim() == 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            Vec p = cf->multiply(cf->basis_vec(i), cf->basis_vec(j));
            Vec q = c->multiply(c->basis_vec(i), c->basis_vec(j));
            CHECK(p == q);
        }
}

TEST_CASE("simple tensor products multiply componentwise") {
    auto [k, nk] = split_hurwitz(2);
    AlgebraPtr c = cayley_algebra();
    AlgebraPtr ck = tensor_with_involution(c, k);
    // (u1 (x) e1) * (e2 ... ) pick u1(x)e1 * v1(x)e2 = (u1 v1) (x) (e1 e2) = 0
    Vec a = bv(ck, "u1(x)e1"), b = bv(ck, "v1(x)e2");
    CHECK(is_zero_vec(ck->multiply(a, b)));
    Vec a2 = bv(ck, "u1(x)e1"), b2 = bv(ck, "v1(x)e1");
    CHECK(ck->multiply(a2, b2) == scaled(bv(ck, "e1(x)e1"), Scalar(-1)));
}

TEST_CASE("C (x) H is structurable with the expected skew part and nucleus") {
    auto [h, nh] = split_hurwitz(4);
    AlgebraPtr ch = tensor_with_involution(cayley_algebra(), h);
    CHECK(check_structurable(*ch).passed);
    auto [skew, herm] = split_involution(ch);
    CHECK(skew.dim() == 10);
    CHECK(herm.dim() == 22);
    Subspace nuc = generalized_alt_nucleus(ch);
    CHECK(nuc.dim() == 11);
}

TEST_CASE("direct product basics") {
    AlgebraPtr cc = cayley_times_cayley();
    CHECK(cc->dim() == 16);
    Vec left = cc->basis_vec(0), right = cc->basis_vec(8);
    CHECK(is_zero_vec(cc->multiply(left, right)));
    Matrix seed(1, 16);
    seed.at(0, 2) = Scalar(1);  // (u1, 0)
    CHECK(ideal_closure(cc, seed).dim() == 8);
}

TEST_CASE("loop algebra over (Z/2)^4 from the Cayley-Dickson grading") {
    Grading base = catalog_entry("cayley-cd").grading;
    AbelianGroup g4{0, {2, 2, 2, 2}};
    GroupHom pi{g4, base.group,
                {GroupElem{0, 0, 0}, GroupElem{1, 0, 0}, GroupElem{0, 1, 0}, GroupElem{0, 0, 1}}};
    LoopAlgebra loop = loop_algebra(base, pi);
    CHECK(loop.algebra->dim() == 16);
    CHECK(verify_grading(loop.grading, true).passed);
    // minimal ideals through x(x)g + x(x)(g+h), h the kernel generator
    GroupElem h{1, 0, 0, 0};
    Matrix seeds_plus(0, 16), seeds_minus(0, 16);
    std::vector<Vec> plus, minus;
    std::map<std::pair<size_t, GroupElem>, size_t> index;
    for (size_t p = 0; p < loop.basis_info.size(); ++p) index[loop.basis_info[p]] = p;
    for (size_t p = 0; p < loop.basis_info.size(); ++p) {
        auto [r, g] = loop.basis_info[p];
        size_t q = index.at({r, g_add(g4, g, h)});
        Vec vp(16), vm(16);
        vp[p] = Scalar(1);
        vp[q] = Scalar(1);
        vm[p] = Scalar(1);
        vm[q] = Scalar(-1);
        plus.push_back(vp);
        minus.push_back(vm);
    }
    Subspace i1 = ideal_closure(loop.algebra, Matrix::from_rows(plus, 16));
    Subspace i2 = ideal_closure(loop.algebra, Matrix::from_rows(minus, 16));
    CHECK(i1.dim() == 8);
    CHECK(i2.dim() == 8);
    CHECK(graded_simple(loop.grading, {i1, i2}));
    // trivial kernel: relabeled copy of C
    GroupHom id{base.group, base.group,
                {GroupElem{1, 0, 0}, GroupElem{0, 1, 0}, GroupElem{0, 0, 1}}};
    LoopAlgebra same = loop_algebra(base, id);
    CHECK(same.algebra->dim() == 8);
    CHECK(verify_grading(same.grading, true).passed);
    // non-surjective pi is rejected
    GroupHom bad{g4, base.group,
                 {GroupElem{0, 0, 0}, GroupElem{1, 0, 0}, GroupElem{0, 1, 0}, GroupElem{0, 1, 0}}};
    CHECK_THROWS_AS(loop_algebra(base, bad), std::invalid_argument);
}

TEST_CASE("loop-to-product gradings match the tabulated components") {
    AlgebraPtr c = cayley_algebra();
    size_t n = 8;
    auto pair_vec = [&](const Vec& x, const Vec& y) {
        Vec v(2 * n);
        for (size_t k = 0; k < n; ++k) {
            v[k] = x[k];
            v[n + k] = y[k];
        }
        return v;
    };
    SUBCASE("Z/2 x Z^2 loop grading") {
        Grading g = catalog_entry("cxc-loop-z2z2").grading;
        CHECK(verify_grading(g, true).passed);
        // component at h: F(e1,-e1) + F(e2,-e2)
        Matrix comp = g.component(GroupElem{0, 0, 1});
        std::vector<Vec> expect = {
            pair_vec(bv(c, "e1"), scaled(bv(c, "e1"), Scalar(-1))),
            pair_vec(bv(c, "e2"), scaled(bv(c, "e2"), Scalar(-1)))};
        CHECK(same_span(comp, Matrix::from_rows(expect, 16)));
        // component at g1 = (1,0|0): F(u1, u1)
        Matrix comp2 = g.component(GroupElem{1, 0, 0});
        std::vector<Vec> expect2 = {pair_vec(bv(c, "u1"), bv(c, "u1"))};
        CHECK(same_span(comp2, Matrix::from_rows(expect2, 16)));
    }
    SUBCASE("(Z/2)^4 loop grading") {
        Grading g = catalog_entry("cxc-loop-z2^4").grading;
        CHECK(verify_grading(g, true).passed);
        // component at g1 = (0,1,0,0): F(u, u) with u = e1 - e2
        Vec u = sub(bv(c, "e1"), bv(c, "e2"));
        Matrix comp = g.component(GroupElem{0, 1, 0, 0});
        CHECK(same_span(comp, Matrix::from_rows({pair_vec(u, u)}, 16)));
        Matrix comph = g.component(GroupElem{1, 1, 0, 0});
        CHECK(same_span(comph, Matrix::from_rows({pair_vec(u, scaled(u, Scalar(-1)))}, 16)));
    }
    SUBCASE("Z/4 x (Z/2)^2 loop grading uses i") {
        Grading g = catalog_entry("cxc-loop-z4").grading;
        CHECK(verify_grading(g, true).passed);
        // component at (1,0,0): {(x, i x)} for x in C_{(1,0,0)} = Fu
        Vec u = sub(bv(c, "e1"), bv(c, "e2"));
        Matrix comp = g.component(GroupElem{1, 0, 0});
        CHECK(same_span(comp, Matrix::from_rows({pair_vec(u, scaled(u, Scalar::i()))}, 16)));
        // component at (2,0,0) = h: {(x, -x)} for x in C_0 = F1
        Vec one = c->unit();
        Matrix comph = g.component(GroupElem{2, 0, 0});
        CHECK(same_span(comph, Matrix::from_rows({pair_vec(one, scaled(one, Scalar(-1)))}, 16)));
    }
}

TEST_CASE("grading closure reproduces a complete grading and rejects bad input") {
    // closing the full homogeneous basis of the Cartan grading returns it
    Grading g = catalog_entry("cayley-cartan").grading;
    GradedGenerators gens{g.algebra, g.group, {}};
    for (size_t r = 0; r < 8; ++r) gens.gens.emplace_back(g.hbasis.row(r), g.degrees[r]);
    Grading closed = grading_closure(gens);
    for (const auto& s : g.support()) CHECK(closed.component(s) == g.component(s));
    // a single idempotent does not generate
    AlgebraPtr cc = cayley_tensor_cayley();
    GradedGenerators single{cc, AbelianGroup::trivial(), {}};
    Vec e1t(64);
    e1t[0] = Scalar(1);
    e1t[1] = Scalar(1);  // e1 (x) 1
    single.gens.emplace_back(e1t, GroupElem{});
    CHECK_THROWS_WITH_AS(grading_closure(single),
                         "grading_closure: generators do not generate", std::runtime_error);
    // inconsistent degrees collide
    GradedGenerators baddeg{g.algebra, AbelianGroup::free_group(1), {}};
    for (size_t r = 0; r < 8; ++r) baddeg.gens.emplace_back(g.hbasis.row(r), GroupElem{1});
    CHECK_THROWS(grading_closure(baddeg));
}

TEST_CASE("generated tensor gradings on C (x) C") {
    for (const char* name : {"ctc-4", "ctc-5", "ctc-6"}) {
        CatalogEntry e = catalog_entry(name);
        CHECK(verify_grading(e.grading, true).passed);
        auto [u, re] = universal_group(e.grading);
        CHECK(u.isomorphic_to(e.stated_group));
    }
    // the Z/4-grading really needs i: some component has an i coefficient
    CatalogEntry e6 = catalog_entry("ctc-6");
    bool has_imag = false;
    for (size_t r = 0; r < e6.grading.hbasis.rows() && !has_imag; ++r)
        for (size_t c = 0; c < 64 && !has_imag; ++c)
            if (!e6.grading.hbasis.at(r, c).im().is_zero()) has_imag = true;
    CHECK(has_imag);
}

TEST_CASE("transfer from C x C to C (x) C agrees with the catalog componentwise") {
    for (auto [loop_name, ctc_name] :
         std::vector<std::pair<const char*, const char*>>{{"cxc-loop-z2z2", "ctc-4"},
                                                          {"cxc-loop-z2^4", "ctc-5"},
                                                          {"cxc-loop-z4", "ctc-6"}}) {
        Grading on_product = catalog_entry(loop_name).grading;
        Grading transferred =
            transfer_product_to_tensor(on_product, cayley_algebra(), cayley_tensor_cayley());
        Grading expected = catalog_entry(ctc_name).grading;
        REQUIRE(transferred.group == expected.group);
        auto s1 = transferred.support(), s2 = expected.support();
        REQUIRE(s1 == s2);
        for (const auto& s : s1) CHECK(transferred.component(s) == expected.component(s));
    }
}

TEST_CASE("characters are validated") {
    Character chi{AbelianGroup{0, {2}}, {1}};  // i has order 4, generator order 2
    CHECK(!chi.valid());
    Character ok{AbelianGroup{0, {2}}, {2}};
    CHECK(ok.valid());
    CHECK(ok.value(GroupElem{1}) == Scalar(-1));
    Character on_z4{AbelianGroup{0, {4}}, {1}};
    CHECK(on_z4.valid());
    CHECK(on_z4.value(GroupElem{3}) == Scalar(Rat(0), Rat(-1)));
}

TEST_CASE("every catalog entry verifies with involution over its stated group") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = catalog_entry(name);
        INFO(name);
        CHECK(verify_grading(e.grading, true).passed);
        CHECK(e.grading.group.canonical_invariants() == e.stated_group.canonical_invariants());
    }
}
