#include "qf/mat2.hpp"

#include <cctype>

#include "qf/error.hpp"

namespace qf::detail {

MatrixTokens split_matrix(std::string_view text) {
  MatrixTokens out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto read_entry = [&](int index, char terminator) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && text[pos] != '[') ++pos;
    if (pos >= text.size() || text[pos] != terminator) {
      throw ParseError(std::string("expected '") + terminator + "'", pos);
    }
    out.entries[index] = std::string(text.substr(start, pos - start));
    out.offsets[index] = start;
    ++pos;
  };

  expect('[');
  expect('[');
  read_entry(0, ',');
  read_entry(1, ']');
  expect(',');
  expect('[');
  read_entry(2, ',');
  read_entry(3, ']');
  expect(']');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after matrix", pos);
  return out;
}

}  // namespace qf::detail
