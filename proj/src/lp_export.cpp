#include <sstream>

#include "kampen/ilp.hpp"

namespace kampen {

namespace {

void write_terms(std::ostringstream& out, const std::vector<Term>& terms,
                 const Model& m) {
  if (terms.empty()) {
    out << " 0 " << m.variables().front().name;
    return;
  }
  bool first = true;
  for (const auto& t : terms) {
    const auto c = t.coef;
    if (first) {
      if (c < 0) out << " -";
      else out << " ";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << " ";
    out << m.variables()[t.var].name;
    first = false;
  }
}

const char* relation(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEqual: return ">=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const Model& m) {
  std::ostringstream out;
  out << "\\ kampen obstruction system";
  if (!m.info.complex.empty())
    out << ": complex " << m.info.complex << ", m " << m.info.m << ", preset "
        << m.info.preset;
  out << "\n";
  if (m.variables().empty()) {
    out << "End\n";
    return out.str();
  }
  out << "Minimize\n obj: 0 " << m.variables().front().name << "\nSubject To\n";
  for (const auto& r : m.rows()) {
    out << " " << r.name << ":";
    write_terms(out, r.terms, m);
    out << " " << relation(r.rel) << " " << r.rhs << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : m.variables())
    out << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
  out << "Generals\n";
  std::size_t col = 0;
  for (const auto& v : m.variables()) {
    out << " " << v.name;
    if (++col == 8) {
      out << "\n";
      col = 0;
    }
  }
  if (col) out << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace kampen
