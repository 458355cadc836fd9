#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gradecheck/algebra.hpp"
#include "gradecheck/composition.hpp"
#include "gradecheck/modular.hpp"

using namespace gradecheck;

namespace {

Vec bv(const AlgebraPtr& a, const std::string& label) {
    for (size_t i = 0; i < a->dim(); ++i)
        if (a->labels()[i] == label) return a->basis_vec(i);
    throw std::runtime_error("no basis label " + label);
}

}  // namespace

TEST_CASE("split Cayley products and unit") {
    auto [c, n] = split_hurwitz(8);
    CHECK(c->multiply(bv(c, "u1"), bv(c, "u2")) == bv(c, "v3"));
    CHECK(c->multiply(bv(c, "u1"), bv(c, "v1")) == scaled(bv(c, "e1"), Scalar(-1)));
    CHECK(c->multiply(bv(c, "e2"), bv(c, "v1")) == bv(c, "v1"));
    REQUIRE(c->has_unit());
    CHECK(c->unit() == add(bv(c, "e1"), bv(c, "e2")));
    for (size_t i = 0; i < 8; ++i) {
        CHECK(c->multiply(c->unit(), c->basis_vec(i)) == c->basis_vec(i));
        CHECK(c->multiply(c->basis_vec(i), c->unit()) == c->basis_vec(i));
    }
    CHECK_THROWS(c->multiply(Vec(3), c->unit()));
}

TEST_CASE("split Cayley is structurable and alternative") {
    auto [c, n] = split_hurwitz(8);
    Report r = check_structurable(*c);
    CHECK(r.passed);
    CHECK(r.checks_run == 8 * 8 * 8);
    CHECK(check_alternative(*c).passed);
}

TEST_CASE("octonions with the identity involution are not structurable") {
    auto [c, n] = split_hurwitz(8);
    AlgebraOptions opt;
    opt.validate = false;  // identity map is not an antiautomorphism here
    auto bad = Algebra::create("C-id", 8, c->labels(), c->structure(), Matrix::identity(8),
                               c->unit(), opt);
    Report r = check_structurable(*bad);
    CHECK(!r.passed);
    CHECK(r.counterexample.has_value());
}

TEST_CASE("structurable check is insensitive to basis permutation") {
    auto [c, n] = split_hurwitz(8);
    std::mt19937_64 rng(17);
    std::vector<size_t> perm(8);
    for (size_t i = 0; i < 8; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix h(8, 8);
    for (size_t i = 0; i < 8; ++i) h.at(i, perm[i]) = Scalar(1);
    auto permuted = c->rebased(h, "C-perm", {});
    CHECK(check_structurable(*permuted).passed);
}

TEST_CASE("generalized alternative nucleus of the Cayley algebra") {
    auto [c, n] = split_hurwitz(8);
    Subspace nuc = generalized_alt_nucleus(c);
    CHECK(nuc.dim() == 8);
    // closed under the involution
    EchelonBasis eb(8);
    for (size_t i = 0; i < nuc.basis.rows(); ++i) eb.insert(nuc.basis.row(i));
    for (size_t r = 0; r < nuc.basis.rows(); ++r) CHECK(eb.contains(c->conj(nuc.basis.row(r))));
}

TEST_CASE("derivations of the split Cayley algebra") {
    auto [c, n] = split_hurwitz(8);
    Subspace der = derivation_algebra(c);
    CHECK(der.dim() == 14);
    CHECK(derivation_dimension(*c, kPrime1, kPrime2) == 14);
    // closed under commutator
    EchelonBasis span(64);
    for (size_t r = 0; r < der.basis.rows(); ++r) span.insert(der.basis.row(r));
    auto as_mat = [&](size_t r) {
        Matrix m(8, 8);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) m.at(i, j) = der.basis.at(r, i * 8 + j);
        return m;
    };
    for (size_t a = 0; a < der.dim(); ++a)
        for (size_t b = a + 1; b < der.dim(); ++b) {
            Matrix comm = as_mat(a) * as_mat(b) - as_mat(b) * as_mat(a);
            Vec flat(64);
            for (size_t i = 0; i < 8; ++i)
                for (size_t j = 0; j < 8; ++j) flat[i * 8 + j] = comm.at(i, j);
            CHECK(span.contains(flat));
        }
    // derivations annihilate the unit
    for (size_t r = 0; r < der.dim(); ++r) CHECK(is_zero_vec(as_mat(r).apply(c->unit())));
}

TEST_CASE("ideal closure on the split Cayley algebra") {
    auto [c, n] = split_hurwitz(8);
    Matrix seed(1, 8);
    seed.at(0, 0) = Scalar(1);  // e1
    Subspace full = ideal_closure(c, seed);
    CHECK(full.dim() == 8);
    Subspace zero = ideal_closure(c, Matrix(0, 8));
    CHECK(zero.dim() == 0);
    // monotone and idempotent
    Subspace again = ideal_closure(c, full.basis);
    CHECK(again.basis == full.basis);
}

TEST_CASE("involution split of the split Cayley algebra") {
    auto [c, n] = split_hurwitz(8);
    auto [skew, herm] = split_involution(c);
    CHECK(skew.dim() == 7);
    CHECK(herm.dim() == 1);
    // skew part is span{e1 - e2, u1..u3, v1..v3}
    EchelonBasis eb(8);
    Vec d(8);
    d[0] = Scalar(1);
    d[1] = Scalar(-1);
    eb.insert(d);
    for (size_t i = 2; i < 8; ++i) eb.insert(c->basis_vec(i));
    CHECK(eb.to_matrix() == skew.basis);
    // hermitian part is the line through the unit
    CHECK(herm.basis.row(0) == scaled(c->unit(), herm.basis.at(0, 0) / c->unit()[0]));
}

TEST_CASE("derivation dimension via modular sketch matches exact on small algebras") {
    auto [h4, n4] = split_hurwitz(4);
    CHECK(derivation_algebra(h4).dim() == derivation_dimension(*h4, kPrime1, kPrime2));
    auto [k2, n2] = split_hurwitz(2);
    CHECK(derivation_algebra(k2).dim() == derivation_dimension(*k2, kPrime1, kPrime2));
}

TEST_CASE("degenerate algebras are rejected") {
    CHECK_THROWS_AS(Algebra::create("empty", 0, {}, {}), std::invalid_argument);
}
