// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_MMIO_HPP
#define EXACTCUR_MMIO_HPP

#include <iosfwd>
#include <string>

#include "exactcur/matrix.hpp"

namespace exactcur {

// Matrix Market "array real general": banner, optional % comments, "m n",
// then m*n entries in column-major order, one per line.

DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix_market(const std::string& path);

/// Entries are written with 17 significant digits so reads round-trip.
void write_matrix_market(std::ostream& out, const DenseMatrix& a);
void write_matrix_market(const std::string& path, const DenseMatrix& a);

}  // namespace exactcur

#endif
