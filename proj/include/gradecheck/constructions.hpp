#pragma once

#include "gradecheck/composition.hpp"

namespace gradecheck {

// Character with values in {1, i, -1, -i}, stored as powers of i per
// generator (free generators first, then torsion generators).
struct Character {
    AbelianGroup group;
    std::vector<int> i_exponents;

    Scalar value(const GroupElem& x) const;
    // order of each generator image must divide the generator order
    bool valid() const;
};

// (A (x) B, sigma_A (x) sigma_B); both factors must be unital with
// involution. Basis index of a_i (x) b_j is i*dim(B) + j.
AlgebraPtr tensor_with_involution(const AlgebraPtr& a, const AlgebraPtr& b);

// A x B with componentwise product (and involution when both have one).
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

// Loop algebra of a graded algebra relative to a surjection pi with finite
// kernel: basis x (x) g for homogeneous x of degree pi(g).
struct LoopAlgebra {
    AlgebraPtr algebra;
    Grading grading;  // by pi's domain, diagonal
    std::vector<std::pair<size_t, GroupElem>> basis_info;  // (base row, coset element)
};
LoopAlgebra loop_algebra(const Grading& base, const GroupHom& pi);

// Grading on A x A whose component at g is {(x, chi(g) x) : x in A_{pi(g)}}.
// Requires ker pi = {0, h} with h of order 2 and chi(h) = -1.
Grading loop_to_product(const Grading& base, const GroupHom& pi, const GroupElem& h,
                        const Character& chi, AlgebraPtr product_algebra);

struct GradedGenerators {
    AlgebraPtr algebra;
    AbelianGroup group;
    std::vector<std::pair<Vec, GroupElem>> gens;
};

// Closes the generators under multiplication, maintaining one subspace per
// degree; returns the verified grading once the components fill the algebra.
// Throws if the generators do not generate or the component sum is not
// direct.
Grading grading_closure(const GradedGenerators& gens);

// Transport of a grading on C x C into C (x) C: each component is cut down
// to the skew part, mapped through (x, y) -> x(x)1 + 1(x)y, and the result
// is closed up. Both algebras must come from the same Cayley algebra.
Grading transfer_product_to_tensor(const Grading& on_product, const AlgebraPtr& cayley,
                                   const AlgebraPtr& tensor_algebra);

// x (x) 1 + 1 (x) x for x in C, inside C (x) C.
Vec embed_skew_pair(const Algebra& cayley, const Vec& x, const Vec& y);

}  // namespace gradecheck
