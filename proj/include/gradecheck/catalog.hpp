#pragma once

#include "gradecheck/smirnov.hpp"

namespace gradecheck {

// A named grading from the tables: the graded algebra, the grading over its
// stated universal group, and that group for cross-checking.
struct CatalogEntry {
    std::string name;
    std::string title;
    AlgebraPtr algebra;
    Grading grading;
    AbelianGroup stated_group;
};

const std::vector<std::string>& catalog_names();
CatalogEntry catalog_entry(const std::string& name);

// Shared building blocks (cached; all catalog entries on the same underlying
// algebra share one object so their components can be compared).
AlgebraPtr cayley_algebra();
QuadraticForm cayley_norm();
AlgebraPtr cayley_tensor_cayley();
AlgebraPtr cayley_times_cayley();
const SmirnovModel& smirnov_model();

}  // namespace gradecheck
