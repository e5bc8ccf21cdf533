#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kampen {

using Vertex = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input documents (JSON complexes, cell encodings, assignments).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A simplex is a nonempty, strictly increasing list of vertex labels.
// Orientation is the one induced by the increasing order.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  Vertex front() const { return v_.front(); }
  Vertex back() const { return v_.back(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(Vertex x) const;
  bool disjoint(const Simplex& other) const;
  // The face opposite to the i-th vertex; may be empty for a vertex.
  Simplex facet(std::size_t i) const;
  Simplex join(const Simplex& other) const;

  // Vertices joined by '_', e.g. "0_2".
  std::string encode() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Unchecked {};
  Simplex(std::vector<Vertex> vertices, Unchecked) : v_(std::move(vertices)) {}
  std::vector<Vertex> v_;
};

using FVector = std::vector<std::size_t>;

// Finite abstract simplicial complex on the vertex set {0, ..., N}.
// Immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex(std::string name, int num_vertices,
                    std::vector<Simplex> facets);

  // The d-skeleton of the simplex on num_vertices vertices.
  static SimplicialComplex skeleton(int num_vertices, int max_dim);

  const std::string& name() const { return name_; }
  int num_vertices() const { return num_vertices_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Simplex>& facets() const { return facets_; }
  // Faces of dimension d in lexicographic order (empty if none).
  const std::vector<Simplex>& faces(int d) const;
  bool contains(const Simplex& s) const;
  // Vertices not covered by any facet.
  const std::vector<Vertex>& unused_vertices() const { return unused_; }

 private:
  std::string name_;
  int num_vertices_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;
  std::vector<Vertex> unused_;
};

FVector f_vector(const SimplicialComplex& k);

// Faces s with the i-th vertex removed, signed (-1)^i. Empty for a vertex.
std::vector<std::pair<Simplex, int>> boundary(const Simplex& s);

// Parses {"name", "num_vertices", "facets", optional "one_based"}.
SimplicialComplex parse_complex(std::string_view json_text);
SimplicialComplex load_complex(const std::string& path);

// Built-in instances live in the data directory (overridable through the
// KAMPEN_DATA_DIR environment variable).
std::vector<std::string> builtin_names();
SimplicialComplex load_builtin(const std::string& name);

}  // namespace kampen
