#pragma once

#include "schatten/matrix.hpp"

#include <iosfwd>
#include <string>

namespace schatten {

// Dense CSV format: first line is the dimension d, then d comma-separated
// rows. Values are written with 17 significant digits so that read(write(M))
// reproduces M bit-exactly.
void write_dense_csv(std::ostream& out, const SymmetricMatrix& m);
void write_dense_csv_file(const std::string& path, const SymmetricMatrix& m);
SymmetricMatrix read_dense_csv(std::istream& in);
SymmetricMatrix read_dense_csv_file(const std::string& path);

// Sparse triplet format: one "i j value" line per observed entry, 0-based,
// i <= j. The value column is optional on read when `values_required` is
// false (pattern files); missing values default to 1.
void write_triplets(std::ostream& out, const SampledMatrix& s);
void write_triplets_file(const std::string& path, const SampledMatrix& s);
SampledMatrix read_triplets(std::istream& in, int dim, bool values_required = true);
SampledMatrix read_triplets_file(const std::string& path, int dim, bool values_required = true);

} // namespace schatten
