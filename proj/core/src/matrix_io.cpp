#include "tropical/matrix_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace tropical {

Weight parse_weight(const std::string& token) {
  if (token == "INF" || token == "inf") return Weight::infinity();
  if (!token.empty() && token[0] == '-') throw ParseError("negative weight: " + token);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad weight token: " + token);
  if (v > kMaxInputWeight) throw ParseError("weight above 2^60: " + token);
  return Weight(v);
}

std::string format_weight(Weight w) {
  return w.is_inf() ? std::string("INF") : std::to_string(w.value());
}

namespace {

std::size_t read_count(std::istream& in, const char* what) {
  long long v = -1;
  if (!(in >> v) || v < 0) throw ParseError(std::string("expected ") + what);
  return static_cast<std::size_t>(v);
}

Weight read_weight(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw ParseError("unexpected end of input");
  return parse_weight(tok);
}

}  // namespace

WeightMatrix read_matrix(std::istream& in) {
  std::size_t rows = read_count(in, "row count");
  std::size_t cols = read_count(in, "column count");
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = read_weight(in);
  return m;
}

void write_matrix(std::ostream& out, const WeightMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_weight(m(i, j));
    }
    out << '\n';
  }
}

std::vector<Weight> read_vector(std::istream& in) {
  std::size_t n = read_count(in, "vector length");
  std::vector<Weight> v(n);
  for (auto& x : v) x = read_weight(in);
  return v;
}

void write_vector(std::ostream& out, const std::vector<Weight>& v) {
  out << v.size() << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << format_weight(v[i]);
  }
  out << '\n';
}

}  // namespace tropical
