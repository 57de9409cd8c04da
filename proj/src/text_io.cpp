#include "apc/text_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace apc {

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Symbols of one row; kErased for 'e'.
Vec parse_symbols(const std::string& line, const FieldSpec& field, bool allow_erasure) {
  Vec out;
  auto push = [&](const std::string& tok) {
    if (tok == "e") {
      if (!allow_erasure) throw std::invalid_argument("unexpected erasure symbol");
      out.push_back(kErased);
      return;
    }
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '9')
      throw std::invalid_argument("bad symbol '" + tok + "'");
    const std::uint8_t v = static_cast<std::uint8_t>(tok[0] - '0');
    if (v >= field.p()) throw std::invalid_argument("symbol out of field: " + tok);
    out.push_back(v);
  };
  if (field.p() == 2) {
    for (char c : line) push(std::string(1, c));
  } else {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) push(tok);
  }
  return out;
}

std::string format_symbols(const Vec& v, const FieldSpec& field) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (field.p() > 2 && i > 0) s += ' ';
    if (v[i] == kErased)
      s += 'e';
    else
      s += static_cast<char>('0' + v[i]);
  }
  return s;
}

}  // namespace

std::string format_matrix(const FieldMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    s += format_symbols(m.row(i), m.field());
    s += '\n';
  }
  return s;
}

FieldMatrix parse_matrix(const std::string& text, FieldSpec field) {
  const auto lines = nonempty_lines(text);
  std::vector<Vec> rows;
  for (const auto& line : lines) rows.push_back(parse_symbols(line, field, false));
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix rows");
  return FieldMatrix::from_rows(field, rows);
}

std::string format_vec(const Vec& v, const FieldSpec& field) {
  return format_symbols(v, field);
}

Vec parse_vec(const std::string& line, FieldSpec field) {
  return parse_symbols(line, field, false);
}

std::string format_received(const ReceivedMatrix& m, const FieldSpec& field) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    Vec row(size_t(m.cols()), 0);
    for (int j = 0; j < m.cols(); ++j) row[size_t(j)] = m.at(i, j);
    s += format_symbols(row, field);
    s += '\n';
  }
  return s;
}

ReceivedMatrix parse_received(const std::string& text, FieldSpec field) {
  const auto lines = nonempty_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty received matrix");
  std::vector<Vec> rows;
  for (const auto& line : lines) rows.push_back(parse_symbols(line, field, true));
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix rows");
  ReceivedMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, rows[size_t(i)][size_t(j)]);
  return m;
}

Vec parse_received_vec(const std::string& line, FieldSpec field) {
  return parse_symbols(line, field, true);
}

}  // namespace apc
