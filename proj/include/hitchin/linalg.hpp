#ifndef HITCHIN_LINALG_HPP
#define HITCHIN_LINALG_HPP

#include <vector>

#include "hitchin/field.hpp"

namespace hitchin {

using Row = std::vector<Fq>;
using Matrix = std::vector<Row>;

/// Row-reduce in place; returns the rank. Plain Gaussian elimination with
/// exact field arithmetic.
int row_reduce(Matrix& m);

int rank(Matrix m);

/// Basis of the right kernel of m (vectors of length ncols). Rows may be
/// empty; ncols must be passed explicitly so the zero-row case works.
std::vector<Row> kernel_basis(Matrix m, int ncols, const FieldCtx& F);

}  // namespace hitchin

#endif
