#pragma once

#include "apc/affine_code.hpp"
#include "apc/matrix.hpp"
#include "apc/plc.hpp"

#include <string>

namespace apc {

// Matrix text format: one row per line. Entries are single decimal digits,
// concatenated for p = 2 and space-separated for p > 2. Received matrices
// use "e" for an erased symbol.

std::string format_matrix(const FieldMatrix& m);
FieldMatrix parse_matrix(const std::string& text, FieldSpec field);

std::string format_vec(const Vec& v, const FieldSpec& field);
Vec parse_vec(const std::string& line, FieldSpec field);  // single row

std::string format_received(const ReceivedMatrix& m, const FieldSpec& field);
ReceivedMatrix parse_received(const std::string& text, FieldSpec field);

// Single row that may contain erasures.
Vec parse_received_vec(const std::string& line, FieldSpec field);

}  // namespace apc
