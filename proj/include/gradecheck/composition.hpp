#pragma once

#include "gradecheck/grading.hpp"

namespace gradecheck {

// Polarized norm form n(x,y) = n(x+y) - n(x) - n(y); n(x) = n(x,x)/2.
struct QuadraticForm {
    Matrix gram;
    Scalar bilinear(const Vec& x, const Vec& y) const;
    Scalar norm(const Vec& x) const;
};

// The split Hurwitz algebra of dimension 1, 2, 4 or 8 on the good basis,
// with standard conjugation, together with its norm.
std::pair<AlgebraPtr, QuadraticForm> split_hurwitz(size_t dim);

// Norm recovered from x*conj(x) = n(x)*1; throws if the algebra's products
// of conjugate pairs are not multiples of the unit.
QuadraticForm norm_from_conjugation(const Algebra& a);

// Cayley-Dickson double: basis old + old*w with w^2 = alpha.
std::pair<AlgebraPtr, QuadraticForm> cayley_dickson_double(const AlgebraPtr& a,
                                                           const Scalar& alpha);

// Multiplicativity of the norm, fully polarized over basis tuples.
Report check_composition(const Algebra& a, const QuadraticForm& n);

enum class StandardGradingKind { cartan, cayley_dickson };

// The tabulated fine gradings on the split Hurwitz algebras: Cartan
// (dims 4, 8) and Cayley-Dickson (dims 2, 4, 8). Returned on the canonical
// good-basis algebra, with the homogeneous basis as change-of-basis rows.
Grading standard_grading(size_t dim, StandardGradingKind kind);

}  // namespace gradecheck
