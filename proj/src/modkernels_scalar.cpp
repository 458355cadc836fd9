#include "gradecheck/modular.hpp"

namespace gradecheck {

static void saxpy_scalar(std::uint32_t* row, const std::uint32_t* piv, std::size_t n,
                         std::uint32_t f, std::uint32_t p, std::uint32_t pprime) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = piv[i];
        if (!v) continue;
        std::uint32_t prod = MontCtx::redc((std::uint64_t)f * v, p, pprime);
        std::uint32_t r = row[i];
        row[i] = r >= prod ? r - prod : (std::uint32_t)(r + (std::uint64_t)p - prod);
    }
}

const ModKernel& scalar_kernel() {
    static const ModKernel k{saxpy_scalar, "scalar"};
    return k;
}

}  // namespace gradecheck
