#pragma once

#include <gmpxx.h>

#include <vector>

namespace sympinv {

/// Rank of an integer matrix, computed by fraction-free row elimination:
/// rows are combined by integer cross-multiplication only, with the content
/// (gcd) of each row divided out to keep entries small. No floating point,
/// no rationals; zero tests are exact.
long long integer_matrix_rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace sympinv
