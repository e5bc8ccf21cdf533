#include "kampen/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace kampen {

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw std::invalid_argument("simplex must be nonempty");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && v_[i - 1] >= v_[i])
      throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
}

bool Simplex::contains(Vertex x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

bool Simplex::disjoint(const Simplex& other) const {
  auto a = v_.begin(), b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Simplex Simplex::facet(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j)
    if (j != i) out.push_back(v_[j]);
  return Simplex(std::move(out), Unchecked{});
}

Simplex Simplex::join(const Simplex& other) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() + other.v_.size());
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                 std::back_inserter(out));
  return Simplex(std::move(out), Unchecked{});
}

std::string Simplex::encode() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(v_[i]);
  }
  return s;
}

namespace {

void add_subsets(const std::vector<Vertex>& f,
                 std::vector<std::vector<Simplex>>& by_dim, int max_dim) {
  const std::size_t n = f.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(f[i]);
    const int d = static_cast<int>(sub.size()) - 1;
    if (d > max_dim) continue;
    if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
    by_dim[d].emplace_back(std::move(sub));
  }
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
  std::vector<Vertex> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::string name, int num_vertices,
                                     std::vector<Simplex> facets)
    : name_(std::move(name)), num_vertices_(num_vertices) {
  if (num_vertices < 1) throw std::invalid_argument("num_vertices must be positive");
  if (facets.empty()) throw std::invalid_argument("empty facet list");
  for (const auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    if (f.back() >= num_vertices)
      throw std::invalid_argument("vertex " + std::to_string(f.back()) +
                                  " out of range 0.." +
                                  std::to_string(num_vertices - 1));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets_ = std::move(facets);

  for (const auto& f : facets_) {
    if (f.size() > 20) throw std::invalid_argument("facet too large");
    add_subsets(f.vertices(), faces_, static_cast<int>(f.size()));
  }
  for (auto& layer : faces_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  std::vector<bool> used(num_vertices_, false);
  for (const auto& s : faces_[0]) used[s.front()] = true;
  for (int v = 0; v < num_vertices_; ++v)
    if (!used[v]) unused_.push_back(v);
}

SimplicialComplex SimplicialComplex::skeleton(int num_vertices, int max_dim) {
  if (num_vertices < 1 || max_dim < 0)
    throw std::invalid_argument("invalid skeleton parameters");
  const int top = std::min(max_dim, num_vertices - 1);
  std::vector<Simplex> facets;
  for_each_subset(num_vertices, top + 1,
                  [&](const std::vector<Vertex>& s) { facets.emplace_back(s); });
  return SimplicialComplex("skeleton_" + std::to_string(num_vertices) + "_" +
                               std::to_string(max_dim),
                           num_vertices, std::move(facets));
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return none;
  return faces_[d];
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& layer = faces(s.dim());
  return std::binary_search(layer.begin(), layer.end(), s);
}

FVector f_vector(const SimplicialComplex& k) {
  FVector out;
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.faces(d).size());
  return out;
}

std::vector<std::pair<Simplex, int>> boundary(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.dim() < 1) return out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.emplace_back(s.facet(i), i % 2 == 0 ? 1 : -1);
  return out;
}

SimplicialComplex parse_complex(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("complex document must be an object");
    const int n = doc.at("num_vertices").get<int>();
    const bool one_based = doc.value("one_based", false);
    const std::string name = doc.value("name", std::string("complex"));
    const auto& fs = doc.at("facets");
    if (!fs.is_array() || fs.empty()) throw ParseError("empty facet list");
    std::vector<Simplex> facets;
    for (const auto& f : fs) {
      std::vector<Vertex> v = f.get<std::vector<Vertex>>();
      if (one_based)
        for (auto& x : v) --x;
      for (auto x : v)
        if (x < 0 || x >= n)
          throw ParseError("vertex " + std::to_string(one_based ? x + 1 : x) +
                           " out of range");
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ParseError("facet with repeated vertex");
      if (v.empty()) throw ParseError("empty facet");
      facets.emplace_back(std::move(v));
    }
    return SimplicialComplex(name, n, std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex schema: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

std::vector<std::string> builtin_names() {
  return {"rp2", "bipyramid", "csaszar", "moebius-brehm",
          "m2-10", "m3-10", "m4-11", "m5-12"};
}

SimplicialComplex load_builtin(const std::string& name) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw ParseError("unknown builtin '" + name + "'");
  const char* env = std::getenv("KAMPEN_DATA_DIR");
  const std::string dir = env && *env ? env : KAMPEN_DATA_DIR;
  return load_complex(dir + "/" + name + ".json");
}

}  // namespace kampen
