#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gradecheck/scalar.hpp"

namespace gradecheck {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;
    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    static IntMatrix identity(std::size_t n);
};

// Presentation of the cokernel Z^n / rowspan(relations): diag holds the
// nonzero diagonal entries of the Smith form (positive, each dividing the
// next); E is unimodular n x n with: class of x in the cokernel has
// coordinates (E*x)_i, the first diag.size() of them mod diag[i], the rest
// free in Z.
struct CokernelForm {
    std::size_t gens = 0;
    std::vector<Int> diag;
    IntMatrix E;
    std::vector<Int> class_of(const std::vector<Int>& x) const;
};

CokernelForm cokernel_presentation(const IntMatrix& relations);

// Invariant factors of Z^cols / rowspan(M): free rank and the torsion
// factors > 1 in divisibility order.
std::pair<std::size_t, std::vector<Int>> smith_invariants(const IntMatrix& relations);

// Basis (as rows) of the left kernel {y : y M = 0} over Z.
IntMatrix int_left_kernel(const IntMatrix& m);

// Some integer solution x of M x = b, or nullopt.
std::optional<std::vector<Int>> int_solve(const IntMatrix& m, const std::vector<Int>& b);

}  // namespace gradecheck
