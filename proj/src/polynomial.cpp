#include "kampen/polynomial.hpp"

#include <stdexcept>

namespace kampen {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> d = c_;
  const Rational lead = c_.back();
  for (auto& x : d) x /= lead;
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[i] / b.leading();
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    Polynomial r = divmod(a, b).second;
    chain_.push_back(Polynomial() - r);
  }
  chain_.pop_back();
}

int SturmChain::sign_changes(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 1;
  Rational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

namespace {

void isolate(const Polynomial& p, const SturmChain& s, const Rational& a,
             const Rational& b, std::vector<RootInterval>& out) {
  const int n = s.count(a, b);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b});
    return;
  }
  // Split at a point where p does not vanish: 1/2, 1/3, 2/3, 1/4, 3/4, ...
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational frac(num);
      frac /= den;
      const Rational mid = a + (b - a) * frac;
      if (p(mid) == 0) continue;
      isolate(p, s, a, mid, out);
      isolate(p, s, mid, b, out);
      return;
    }
  }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  if (p(a) == 0 || p(b) == 0)
    throw std::invalid_argument("isolate_roots: endpoint is a root");
  isolate(p, SturmChain(p), a, b, out);
  return out;
}

int sign_at_root(const Polynomial& q, const Polynomial& p, RootInterval& root) {
  if (q.is_zero()) return 0;
  const Polynomial g = gcd(q, p);
  if (g.degree() >= 1 && SturmChain(g).count(root.lo, root.hi) > 0) return 0;
  const SturmChain sq(q);
  const int sign_lo = sgn(p(root.lo));
  while (true) {
    const Rational qlo = q(root.lo);
    if (qlo != 0 && sq.count(root.lo, root.hi) == 0) return sgn(qlo);
    const Rational mid = (root.lo + root.hi) / 2;
    const int pm = sgn(p(mid));
    if (pm == 0) return sgn(q(mid));
    if (pm == sign_lo) root.lo = mid;
    else root.hi = mid;
  }
}

}  // namespace kampen
