#pragma once

#include <cstddef>
#include <vector>

#include "fermatk3/cyclotomic.hpp"

namespace fermatk3 {

using CycRow = std::vector<CycNumber>;
using CycTable = std::vector<CycRow>;

// Reduced row echelon form; optionally reports the pivot column of each
// nonzero row. Exact Gaussian elimination, no pivot-size heuristics needed.
CycTable rref(CycTable m, std::vector<std::size_t>* pivot_cols = nullptr);

// Basis of the right kernel {x : m x = 0}; each basis vector has a 1 in its
// free column and zeros in the other free columns, listed by free column in
// increasing order.
std::vector<CycRow> kernel_basis(const CycTable& m, std::size_t ncols);

CycNumber determinant(CycTable m);  // square input

CycTable cyc_identity(std::size_t n);

CycTable cyc_inverse(CycTable m);  // throws DivisionByZero when singular

}  // namespace fermatk3
