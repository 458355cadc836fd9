#pragma once

#include "gradecheck/constructions.hpp"

namespace gradecheck {

// The 35-dimensional exceptional structurable algebra T = H + S built on the
// skew part S of a Cayley algebra: S keeps the labels s1..s7, H is spanned
// by the symmetrized products si x sj (i <= j).
struct SmirnovModel {
    AlgebraPtr T;
    AlgebraPtr C;
    QuadraticForm cayley_norm;
    Matrix skew_basis;  // 7 x 8 rows: s-basis in Cayley coordinates

    static size_t sym_index(size_t i, size_t j);  // i <= j, into [7, 35)
};

// sym_sq_coeff is the coefficient of the bracket-square term in the
// symmetric product of two H-elements; 1/4 is the correct value and the
// regression tests exercise a wrong one.
SmirnovModel build_smirnov(const AlgebraPtr& cayley, const QuadraticForm& n,
                           const Scalar& sym_sq_coeff = Scalar::of(1, 4));

// Unit written on an orthogonal anisotropic basis {x_i} of S:
// sum -1/(16 n(x_i)) x_i x x_i. Vectors are given in Cayley coordinates.
Vec smirnov_unit_vector(const SmirnovModel& m, const std::vector<Vec>& orth_basis);
// The canonical orthogonal basis of the split skew part (norms +-1).
std::vector<Vec> canonical_orthogonal_skew_basis(const SmirnovModel& m);

// The tensor-product realization span{ a(x)a - n(a) 1(x)1 } inside C(x)C,
// with the isomorphism psi from the 35-dimensional model onto it.
struct TensorSmirnov {
    AlgebraPtr tensor;  // C (x) C
    Matrix span;        // 35 canonical rows in C(x)C coordinates
    Matrix psi;         // 35 x 64, row r = psi(T basis vector r)
    Report iso_check;
};
TensorSmirnov build_smirnov_in_tensor(const SmirnovModel& m, const AlgebraPtr& tensor);

struct TraceForms {
    Vec linear;       // 35 coefficients of the linear trace
    Matrix bilinear;  // 35 x 35 Gram matrix of tr(x conj(y))
};
TraceForms trace_forms(const SmirnovModel& m);

// deg(s) = deg_C(s), deg(s1 x s2) = deg_C(s1) + deg_C(s2); the input grading
// must verify and preserve the involution. The result is verified before
// being returned.
Grading induce_grading(const SmirnovModel& m, const Grading& on_cayley);

// Reconstruction of the Cayley product from T via s1*s2 = pi_1(s1 s2) +
// pi_S(s1 s2), checked against the original table.
struct RecoveredCayley {
    AlgebraPtr algebra;  // 8-dimensional, basis {1, s1..s7}
    Report iso_to_c;
};
RecoveredCayley recover_cayley(const SmirnovModel& m);

}  // namespace gradecheck
