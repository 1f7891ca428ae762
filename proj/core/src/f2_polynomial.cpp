#include "tropical/f2_polynomial.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tropical {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.row.reserve(a.row.size() + b.row.size());
  m.col.reserve(a.col.size() + b.col.size());
  std::set_union(a.row.begin(), a.row.end(), b.row.begin(), b.row.end(), std::back_inserter(m.row));
  std::set_union(a.col.begin(), a.col.end(), b.col.begin(), b.col.end(), std::back_inserter(m.col));
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto v : m.row) mix(v);
  mix(0xffffffffULL);
  for (auto v : m.col) mix(v);
  return static_cast<std::size_t>(h);
}

void MonomialAccumulator::toggle(Monomial m) {
  if (m.is_constant()) {
    constant_ = !constant_;
    return;
  }
  auto it = set_.find(m);
  if (it != set_.end())
    set_.erase(it);
  else
    set_.insert(std::move(m));
}

SparseF2Polynomial MonomialAccumulator::finish() {
  std::vector<Monomial> terms(std::make_move_iterator(set_.begin()), std::make_move_iterator(set_.end()));
  set_.clear();
  std::sort(terms.begin(), terms.end());
  return SparseF2Polynomial::from_terms(std::move(terms), constant_);
}

SparseF2Polynomial SparseF2Polynomial::constant(bool c) {
  SparseF2Polynomial p;
  p.constant_ = c;
  return p;
}

SparseF2Polynomial SparseF2Polynomial::row_variable(std::uint32_t v) {
  SparseF2Polynomial p;
  p.terms_.push_back(Monomial{{v}, {}});
  return p;
}

SparseF2Polynomial SparseF2Polynomial::col_variable(std::uint32_t v) {
  SparseF2Polynomial p;
  p.terms_.push_back(Monomial{{}, {v}});
  return p;
}

SparseF2Polynomial SparseF2Polynomial::from_terms(std::vector<Monomial> terms, bool constant) {
  for (auto& m : terms) {
    std::sort(m.row.begin(), m.row.end());
    m.row.erase(std::unique(m.row.begin(), m.row.end()), m.row.end());
    std::sort(m.col.begin(), m.col.end());
    m.col.erase(std::unique(m.col.begin(), m.col.end()), m.col.end());
  }
  std::sort(terms.begin(), terms.end());
  SparseF2Polynomial p;
  p.constant_ = constant;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (terms[i].is_constant())
        p.constant_ = !p.constant_;
      else
        p.terms_.push_back(std::move(terms[i]));
    }
    i = j;
  }
  return p;
}

std::size_t SparseF2Polynomial::row_variable_count() const {
  std::size_t n = 0;
  for (const auto& m : terms_)
    if (!m.row.empty()) n = std::max<std::size_t>(n, m.row.back() + 1);
  return n;
}

std::size_t SparseF2Polynomial::col_variable_count() const {
  std::size_t n = 0;
  for (const auto& m : terms_)
    if (!m.col.empty()) n = std::max<std::size_t>(n, m.col.back() + 1);
  return n;
}

SparseF2Polynomial& SparseF2Polynomial::operator^=(const SparseF2Polynomial& o) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (*a < *b) {
      merged.push_back(std::move(*a++));
    } else if (*b < *a) {
      merged.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  constant_ ^= o.constant_;
  return *this;
}

SparseF2Polynomial operator*(const SparseF2Polynomial& a, const SparseF2Polynomial& b) {
  MonomialAccumulator acc;
  if (a.constant_ && b.constant_) acc.toggle_constant();
  if (a.constant_)
    for (const auto& m : b.terms_) acc.toggle(m);
  if (b.constant_)
    for (const auto& m : a.terms_) acc.toggle(m);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc.toggle(multiply(x, y));
  return acc.finish();
}

SparseF2Polynomial SparseF2Polynomial::shifted(std::uint32_t row_offset, std::uint32_t col_offset) const {
  SparseF2Polynomial p = *this;
  for (auto& m : p.terms_) {
    for (auto& v : m.row) v += row_offset;
    for (auto& v : m.col) v += col_offset;
  }
  return p;
}

bool SparseF2Polynomial::evaluate(std::span<const std::uint8_t> row_values,
                                  std::span<const std::uint8_t> col_values) const {
  bool acc = constant_;
  for (const auto& m : terms_) {
    bool prod = true;
    for (auto v : m.row) {
      if (v >= row_values.size()) throw std::out_of_range("row variable index out of range");
      prod = prod && row_values[v];
    }
    for (auto v : m.col) {
      if (v >= col_values.size()) throw std::out_of_range("column variable index out of range");
      prod = prod && col_values[v];
    }
    acc ^= prod;
  }
  return acc;
}

namespace {

void write_set(std::ostream& out, char tag, const std::vector<std::uint32_t>& s) {
  out << tag << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
}

std::vector<std::uint32_t> parse_set(const std::string& text, char tag) {
  if (text.size() < 3 || text[0] != tag || text[1] != '{' || text.back() != '}')
    throw std::invalid_argument("bad monomial set: " + text);
  std::vector<std::uint32_t> out;
  std::stringstream ss(text.substr(2, text.size() - 3));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

}  // namespace

void SparseF2Polynomial::write(std::ostream& out, const std::vector<std::string>& header) const {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "constant " << (constant_ ? 1 : 0) << '\n';
  out << "terms " << terms_.size() << '\n';
  for (const auto& m : terms_) {
    write_set(out, 'R', m.row);
    out << ';';
    write_set(out, 'C', m.col);
    out << '\n';
  }
}

SparseF2Polynomial SparseF2Polynomial::read(std::istream& in) {
  std::string line;
  bool constant = false;
  std::vector<Monomial> terms;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("constant ", 0) == 0) {
      constant = line.substr(9) == "1";
      continue;
    }
    if (line.rfind("terms ", 0) == 0) continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("bad monomial line: " + line);
    terms.push_back(Monomial{parse_set(line.substr(0, semi), 'R'), parse_set(line.substr(semi + 1), 'C')});
  }
  return from_terms(std::move(terms), constant);
}

}  // namespace tropical
