#pragma once

// Data-parallel exact kernels. Each OpenMP kernel has a serial counterpart in
// dualpolar::reference with identical results; the tests compare the two and
// bench/ times them.

#include <vector>

#include "dualpolar/matrix.hpp"

namespace dualpolar::kernels {

/// a * b over Z. Rows of the result are computed in parallel; each entry is
/// accumulated in 128 bits and must fit in int64 (Overflow otherwise).
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// a * b^T, i.e. the matrix of row inner products.
IntMatrix multiply_abt(const IntMatrix& a, const IntMatrix& b);

/// m * v for integer vectors of arbitrary size.
std::vector<BigInt> multiply_vector(const IntMatrix& m, const std::vector<BigInt>& v);

/// Rank over Q by fraction-free (Bareiss) elimination. Within one pivot step
/// the row updates run in parallel.
int exact_rank(const IntMatrix& m);

} // namespace dualpolar::kernels

namespace dualpolar::reference {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply_abt(const IntMatrix& a, const IntMatrix& b);
int exact_rank(const IntMatrix& m);

} // namespace dualpolar::reference
