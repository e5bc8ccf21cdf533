#include "kampen/cyclic.hpp"

#include <stdexcept>

namespace kampen {

int cyclic_intersection(const Simplex& sigma, const Simplex& tau, int m) {
  const int k = sigma.dim(), l = tau.dim();
  if (k < 0 || l < 0 || k + l != m)
    throw std::invalid_argument("cyclic_intersection: dimensions must sum to m");
  if (!sigma.disjoint(tau))
    throw std::invalid_argument("cyclic_intersection: simplices must be disjoint");

  // Reduce to k >= l and, for k == l, sigma starting first. Swapping the
  // arguments costs (-1)^{kl}.
  if (k < l || (k == l && tau.front() < sigma.front()))
    return ((k * l) % 2 ? -1 : 1) * cyclic_intersection(tau, sigma, m);

  const int half = (m + 1) / 2;
  if (k != half) return 0;
  // Alternation s0 < t0 < s1 < t1 < ...; with k + l = m and k = ceil(m/2)
  // the lengths are either equal or sigma has one more vertex.
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!(sigma[i] < tau[i])) return 0;
    if (i + 1 < sigma.size() && !(tau[i] < sigma[i + 1])) return 0;
  }
  return ((k * (k - 1) / 2) % 2) ? -1 : 1;
}

int phi_c(const Cell& c, int m) {
  if (c.dim() != m) throw std::invalid_argument("phi_c: cell dimension must be m");
  const int sign = c.first.dim() % 2 ? -1 : 1;
  return sign * cyclic_intersection(c.first, c.second, m);
}

}  // namespace kampen
