#pragma once

#include <string>

#include "flexshift/sparse_matrix.hpp"
#include "flexshift/types.hpp"

namespace flexshift {

/// Reads a Matrix Market coordinate file (real/complex, general/symmetric/
/// hermitian); symmetric storage is expanded on read.
SparseMatrix read_matrix_market(const std::string& path);

/// Writes coordinate complex general format, 1-based indices.
void write_matrix_market(const SparseMatrix& A, const std::string& path);

/// Dense vectors travel as single-column array files.
Vector read_vector_market(const std::string& path);
void write_vector_market(const Vector& v, const std::string& path);

}  // namespace flexshift
