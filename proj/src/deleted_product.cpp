#include "kampen/deleted_product.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kampen {

Cell::Cell(Simplex a, Simplex b) : first(std::move(a)), second(std::move(b)) {
  if (first.empty() || second.empty())
    throw std::invalid_argument("cell factors must be nonempty");
  if (!first.disjoint(second))
    throw std::invalid_argument("cell factors must be disjoint");
}

std::string Cell::encode() const {
  return first.encode() + "x" + second.encode();
}

namespace {

void append_pairs(const SimplicialComplex& k, int d, std::vector<Cell>& out) {
  for (int a = 0; a <= d; ++a) {
    for (const auto& s : k.faces(a))
      for (const auto& t : k.faces(d - a))
        if (s.disjoint(t)) out.emplace_back(s, t);
  }
}

}  // namespace

Simplex parse_simplex(std::string_view s) {
  std::vector<Vertex> v;
  while (!s.empty()) {
    const auto cut = s.find('_');
    const auto tok = s.substr(0, cut);
    Vertex x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad vertex in cell encoding");
    v.push_back(x);
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut + 1);
    if (s.empty()) throw ParseError("trailing '_' in cell encoding");
  }
  try {
    return Simplex(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Cell parse_cell(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw ParseError("cell encoding needs 'x'");
  try {
    return Cell(parse_simplex(text.substr(0, x)), parse_simplex(text.substr(x + 1)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Cell> cells(const SimplicialComplex& k, int d) {
  std::vector<Cell> out;
  if (d < 0) return out;
  append_pairs(k, d, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> cells_full(int n, int d, int max_face_dim) {
  return cells(SimplicialComplex::skeleton(n + 1, max_face_dim), d);
}

int swap_sign(const Cell& c) {
  return ((c.first.dim() + 1) * (c.second.dim() + 1)) % 2 ? -1 : 1;
}

std::pair<Cell, int> canonicalize(const Cell& c) {
  if (c.first < c.second) return {c, 1};
  return {Cell(c.second, c.first), swap_sign(c)};
}

SignedCellSum coboundary_row(const Cell& c) {
  if (c.dim() < 1) throw std::invalid_argument("coboundary row needs dim >= 1");
  SignedCellSum out;
  if (c.first.dim() >= 1)
    for (std::size_t i = 0; i < c.first.size(); ++i)
      out.push_back({Cell(c.first.facet(i), c.second), i % 2 ? -1 : 1});
  const int shift = c.first.dim();
  if (c.second.dim() >= 1)
    for (std::size_t j = 0; j < c.second.size(); ++j)
      out.push_back({Cell(c.first, c.second.facet(j)),
                     (shift + static_cast<int>(j)) % 2 ? -1 : 1});
  return out;
}

SignedCellSum normalize(SignedCellSum sum) {
  std::sort(sum.begin(), sum.end(),
            [](const SignedCell& a, const SignedCell& b) { return a.cell < b.cell; });
  SignedCellSum out;
  for (auto& t : sum) {
    if (!out.empty() && out.back().cell == t.cell)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (out.back().coef == 0) out.pop_back();
  }
  return out;
}

}  // namespace kampen
