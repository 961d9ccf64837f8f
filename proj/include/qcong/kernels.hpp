#pragma once

// Coefficient-vector kernels behind IntPoly. Every kernel has a serial
// reference in qcong::kernels::serial; the OpenMP variants in
// qcong::kernels::parallel must produce identical output and are checked
// against the reference in the test suite and compared in the benchmark.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace qcong::kernels {

using Coeffs = std::vector<mpz_class>;
using CoeffView = std::span<const mpz_class>;

enum class MulAlgorithm { automatic, schoolbook, schoolbook_parallel, kronecker };

/// Below this operand length automatic multiplication stays with schoolbook.
inline constexpr std::size_t kKroneckerThreshold = 24;

namespace serial {

Coeffs mul_schoolbook(CoeffView a, CoeffView b);

/// Long division of rem by a monic divisor. On return rem holds the remainder
/// (untrimmed, length b.size()-1 at most) and quot the quotient.
void divrem_monic(Coeffs& rem, CoeffView b, Coeffs& quot);

}  // namespace serial

namespace parallel {

/// Output-partitioned schoolbook product: each output coefficient is owned by
/// exactly one thread.
Coeffs mul_schoolbook(CoeffView a, CoeffView b);

/// Same contract as serial::divrem_monic; the update of each quotient step is
/// distributed across threads when the divisor is long.
void divrem_monic(Coeffs& rem, CoeffView b, Coeffs& quot);

}  // namespace parallel

/// Kronecker substitution: both operands are packed into single integers at a
/// limb-aligned slot width, multiplied by GMP, and unpacked with signed
/// (balanced) digit extraction.
Coeffs mul_kronecker(CoeffView a, CoeffView b);

Coeffs multiply(CoeffView a, CoeffView b, MulAlgorithm alg = MulAlgorithm::automatic);

}  // namespace qcong::kernels
