#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& token);
std::string format_weight(Weight w);

WeightMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const WeightMatrix& m);

std::vector<Weight> read_vector(std::istream& in);
void write_vector(std::ostream& out, const std::vector<Weight>& v);

}  // namespace tropical
