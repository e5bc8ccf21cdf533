#include "kampen/geometry.hpp"

#include <random>
#include <stdexcept>

#include "kampen/system_builder.hpp"

namespace kampen {

PointMap moment_map(int n, int m) {
  PointMap out{m, {}};
  for (int i = 0; i <= n; ++i) {
    Vector p;
    Rational x = 1;
    for (int d = 0; d < m; ++d) {
      x *= i;
      p.push_back(x);
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

bool in_general_position(const std::vector<Vector>& points, int m) {
  const int n = static_cast<int>(points.size());
  if (n < m + 1) return true;
  std::vector<int> idx(m + 1);
  for (int i = 0; i <= m; ++i) idx[i] = i;
  while (true) {
    Matrix a(m, Vector(m));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a[r][c] = points[idx[c + 1]][r] - points[idx[0]][r];
    if (determinant(std::move(a)) == 0) return false;
    int i = m;
    while (i >= 0 && idx[i] == n - (m + 1) + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j <= m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

constexpr int kRetryCap = 1000;

Rational draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 10);
  const long a = num(rng), b = den(rng);
  Rational x(a);
  x /= b;
  return x;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

PointMap random_map(int n, int m, std::uint64_t seed, const std::optional<PointMap>& prefix) {
  std::mt19937_64 rng(seed);
  const int k = prefix ? prefix->num_vertices() - 1 : -1;
  if (prefix && prefix->m != m) throw std::invalid_argument("random_map: prefix dimension");
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    PointMap out{m, {}};
    for (int v = 0; v <= n; ++v) {
      if (v <= k) {
        out.points.push_back((*prefix)[v]);
        continue;
      }
      Vector p;
      for (int d = 0; d < m; ++d) p.push_back(draw(rng));
      out.points.push_back(std::move(p));
    }
    if (in_general_position(out.points, m)) return out;
  }
  throw Error("random_map: no general position sample within the retry cap");
}

DeformationPair random_pair(int n, int m, std::uint64_t seed, int k, bool g_moment) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    const auto s = mix(seed, attempt);
    DeformationPair pair;
    pair.g = g_moment ? moment_map(n, m) : random_map(n, m, mix(s, 1));
    pair.shared_prefix = k;
    std::optional<PointMap> prefix;
    if (k >= 0) {
      PointMap pre{m, {}};
      for (int v = 0; v <= k && v <= n; ++v) pre.points.push_back(pair.g[v]);
      prefix = std::move(pre);
    }
    pair.f = random_map(n, m, mix(s, 2), prefix);
    std::vector<Vector> all = pair.f.points;
    for (int v = k + 1; v <= n; ++v) all.push_back(pair.g[v]);
    if (in_general_position(all, m)) return pair;
  }
  throw Error("random_pair: no general position sample within the retry cap");
}

int intersection_number(const PointMap& f, const Simplex& sigma, const Simplex& tau) {
  const int m = f.m;
  const int k = sigma.dim(), l = tau.dim();
  if (k + l != m) throw std::invalid_argument("intersection_number: dims must sum to m");
  if (!sigma.disjoint(tau)) throw std::invalid_argument("intersection_number: overlap");
  // Unknowns alpha_0..alpha_k, beta_0..beta_l with
  // sum alpha_i f(s_i) = sum beta_j f(t_j), sum alpha = sum beta = 1.
  const int n = m + 2;
  Matrix a(n, Vector(n, 0));
  Vector b(n, 0);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= k; ++i) a[r][i] = f[sigma[i]][r];
    for (int j = 0; j <= l; ++j) a[r][k + 1 + j] = -f[tau[j]][r];
  }
  for (int i = 0; i <= k; ++i) a[m][i] = 1;
  for (int j = 0; j <= l; ++j) a[m + 1][k + 1 + j] = 1;
  b[m] = b[m + 1] = 1;
  const auto x = solve(std::move(a), std::move(b));
  if (!x) return 0;  // parallel affine hulls
  for (const auto& c : *x) {
    if (c < 0) return 0;
  }
  for (const auto& c : *x)
    if (c == 0) throw DegenerateConfiguration("intersection on a simplex boundary");
  Vector p(m, 0);
  for (int i = 0; i <= k; ++i)
    for (int r = 0; r < m; ++r) p[r] += (*x)[i] * f[sigma[i]][r];
  Matrix h;
  auto push = [&](const Vector& v) {
    Vector row{1};
    row.insert(row.end(), v.begin(), v.end());
    h.push_back(std::move(row));
  };
  push(p);
  for (int i = 1; i <= k; ++i) push(f[sigma[i]]);
  for (int j = 1; j <= l; ++j) push(f[tau[j]]);
  const int s = sign(determinant(std::move(h)));
  if (s == 0) throw DegenerateConfiguration("flat intersection simplex");
  return s;
}

int phi(const PointMap& f, const Cell& c) {
  if (c.dim() != f.m) throw std::invalid_argument("phi: cell dimension must be m");
  return (c.first.dim() % 2 ? -1 : 1) * intersection_number(f, c.first, c.second);
}

namespace {

struct CharData {
  Polynomial chi;              // det(x I - D)
  std::vector<Matrix> adj;     // adj(x I - D) = sum_k adj[k-1] x^{m-k}
};

// Faddeev-LeVerrier recursion over the rationals.
CharData characteristic(const Matrix& d) {
  const std::size_t n = d.size();
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  CharData out;
  Matrix prev(n, Vector(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix mk = multiply(d, prev);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    const Matrix dm = multiply(d, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += dm[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    out.adj.push_back(mk);
    prev = std::move(mk);
  }
  out.chi = Polynomial(std::move(c));
  return out;
}

Polynomial adj_entry(const CharData& cd, std::size_t i, std::size_t col) {
  const std::size_t n = cd.adj.size();
  std::vector<Rational> c(n, 0);
  for (std::size_t k = 1; k <= n; ++k) c[n - k] = cd.adj[k - 1][i][col];
  return Polynomial(std::move(c));
}

}  // namespace

LambdaFamily lambda_family(const DeformationPair& pair, const Simplex& j) {
  const int m = pair.g.m;
  if (static_cast<int>(j.size()) != m + 1)
    throw std::invalid_argument("lambda_family: |J| must be m+1");
  const auto& f = pair.f;
  const auto& g = pair.g;

  LambdaFamily out;
  out.j = j;
  for (const auto& c : partition_family(j).pairs) out.values[c] = 0;

  // Columns (g(j_i) - g(j_0), 0) and (f(j_0) - g(j_0), 1).
  Matrix basis(m + 1, Vector(m + 1, 0));
  for (int i = 1; i <= m; ++i)
    for (int r = 0; r < m; ++r) basis[r][i - 1] = g[j[i]][r] - g[j[0]][r];
  for (int r = 0; r < m; ++r) basis[r][m] = f[j[0]][r] - g[j[0]][r];
  basis[m][m] = 1;
  out.epsilon = sign(determinant(basis));
  if (out.epsilon == 0) throw DegenerateConfiguration("g(J) is flat");

  Matrix d(m, Vector(m, 0));
  for (int i = 1; i <= m; ++i) {
    Vector rhs(m + 1, 0);
    for (int r = 0; r < m; ++r) rhs[r] = f[j[i]][r] - g[j[0]][r];
    rhs[m] = 1;
    const auto y = solve(basis, rhs);
    for (int r = 0; r < m; ++r) d[r][i - 1] = (*y)[r];
  }

  const CharData cd = characteristic(d);
  const Polynomial& chi = cd.chi;
  out.det_d_sign = ((m % 2) ? -1 : 1) * sgn(chi.coeffs()[0]);
  {
    Polynomial p = chi;
    const Polynomial x_minus_1(std::vector<Rational>{-1, 1});
    while (p.degree() >= 1 && p(Rational(1)) == 0) {
      p = divmod(p, x_minus_1).first;
      ++out.multiplicity_one;
    }
  }

  // Negative eigenvalues u correspond to intersection times t = 1/(1-u).
  std::vector<Rational> stripped = chi.coeffs();
  while (!stripped.empty() && stripped.front() == 0) stripped.erase(stripped.begin());
  const Polynomial sq = squarefree_part(Polynomial(stripped));
  if (sq.degree() < 1) return out;
  const Rational bound = root_bound(sq);
  const Polynomial dchi = chi.derivative();
  const Polynomial repeated = gcd(chi, dchi);
  const int chi_sign = (m % 2) ? -1 : 1;  // det(D - xI) = (-1)^m chi

  for (auto root : isolate_roots(sq, -bound, Rational(0))) {
    if (repeated.degree() >= 1 && sign_at_root(repeated, sq, root) == 0)
      throw DegenerateConfiguration("repeated negative eigenvalue");
    std::vector<int> s;
    Polynomial total;
    for (int col = 0; col < m && s.empty(); ++col) {
      std::vector<int> signs;
      Polynomial sum;
      bool nonzero = false;
      for (int i = 0; i < m; ++i) {
        const Polynomial e = adj_entry(cd, i, col);
        signs.push_back(sign_at_root(e, sq, root));
        nonzero |= signs.back() != 0;
        sum = sum + e;
      }
      if (nonzero) {
        s = std::move(signs);
        total = std::move(sum);
      }
    }
    if (s.empty()) throw DegenerateConfiguration("no eigenvector column");
    for (int x : s)
      if (x == 0) throw DegenerateConfiguration("zero eigenvector component");
    const int ts = sign_at_root(total, sq, root);
    if (ts == 0) throw DegenerateConfiguration("eigenvector coordinates sum to zero");
    if (ts > 0)
      for (auto& x : s) x = -x;
    std::vector<Vertex> plus{j[0]}, minus;
    for (int i = 0; i < m; ++i) (s[i] > 0 ? plus : minus).push_back(j[i + 1]);
    const Simplex tp(plus), tm(minus);
    const int dsign = chi_sign * sign_at_root(dchi, sq, root);
    out.values[Cell(tp, tm)] += shuffle_sign(tp, tm) * dsign;
  }
  for (auto& [c, v] : out.values) v *= out.epsilon;
  return out;
}

int lambda(const DeformationPair& pair, const Cell& c) {
  if (c.dim() != pair.g.m - 1) throw std::invalid_argument("lambda: cell must have dim m-1");
  const auto [rep, s] = canonicalize(c);
  return s * lambda_family(pair, c.support()).values.at(rep);
}

}  // namespace kampen
