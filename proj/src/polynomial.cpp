#include "hermdig/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hermdig {

Polynomial::Polynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long long> ascending) {
  for (long long v : ascending) c_.emplace_back(v);
  normalize();
}

Polynomial Polynomial::monomial(int k, BigInt c) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[k];
}

std::vector<std::int64_t> Polynomial::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(c_.size());
  for (const BigInt& v : c_) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("coefficient does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<BigInt> v = a.c_;
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const BigInt& k, const Polynomial& a) {
  std::vector<BigInt> v = a.c_;
  for (auto& x : v) x *= k;
  return Polynomial(std::move(v));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.c_[k] < b.c_[k]) return std::strong_ordering::less;
    if (a.c_[k] > b.c_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v[k - 1] = p.coeffs()[k] * k;
  return Polynomial(std::move(v));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<BigInt> v = p.coeffs();
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Polynomial(std::move(v));
}

int zero_multiplicity(const Polynomial& p) {
  int z = 0;
  while (z <= p.degree() && p.coeffs()[z] == 0) ++z;
  return p.is_zero() ? 0 : z;
}

Polynomial shift_down(const Polynomial& p, int z) {
  if (z > p.degree()) return {};
  return Polynomial(std::vector<BigInt>(p.coeffs().begin() + z, p.coeffs().end()));
}

Polynomial even_part_in_square(const Polynomial& p) {
  std::vector<BigInt> v;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % 2 == 1) {
      if (p.coeffs()[k] != 0) throw std::invalid_argument("polynomial is not even");
      continue;
    }
    v.push_back(p.coeffs()[k]);
  }
  return Polynomial(std::move(v));
}

int sign_at(const Polynomial& p, const Rational& x) {
  // homogenized Horner: sum c_k num^k den^(d-k)
  if (p.is_zero()) return 0;
  BigInt acc = p.leading();
  BigInt den_pow = x.den;
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * x.num + p.coeffs()[k] * den_pow;
    den_pow *= x.den;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

BigInt content(const Polynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) x /= g;
  return Polynomial(std::move(v));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> r = a.coeffs();
  int steps = 0;
  int dr = a.degree();
  while (dr >= db) {
    const BigInt lr = r[dr];
    const int shift = dr - db;
    for (int k = 0; k <= dr; ++k) r[k] *= lb;
    for (int k = 0; k <= db; ++k) r[k + shift] -= lr * b.coeffs()[k];
    ++steps;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  BigInt scale = 1;
  for (int k = steps; k < a.degree() - db + 1; ++k) scale *= lb;
  Polynomial out(std::move(r));
  return scale == 1 ? out : scale * out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt rem;
    BigInt quo;
    boost::multiprecision::divide_qr(r[k + db], b.leading(), quo, rem);
    if (rem != 0) throw std::domain_error("inexact polynomial division");
    q[k] = quo;
    for (int j = 0; j <= db; ++j) r[k + j] -= quo * b.coeffs()[j];
  }
  for (const BigInt& x : r)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(q));
}

BigInt root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 1;
  BigInt m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, BigInt(boost::multiprecision::abs(p.coeffs()[k])));
  const BigInt lead = boost::multiprecision::abs(p.leading());
  return 1 + (m + lead - 1) / lead;
}

bool is_squarefree(const Polynomial& p) { return gcd(p, derivative(p)).degree() < 1; }

Polynomial squarefree_part(const Polynomial& p) {
  const Polynomial g = gcd(p, derivative(p));
  return primitive_part(exact_quotient(primitive_part(p), g));
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& squarefree) {
  std::vector<Polynomial> seq{squarefree, derivative(squarefree)};
  while (seq.back().degree() > 0) {
    const Polynomial& a = seq[seq.size() - 2];
    const Polynomial& b = seq.back();
    // prem is lc(b)^e times the remainder; flip so the multiple is positive
    Polynomial r = pseudo_remainder(a, b);
    const int e = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && e % 2 == 1) r = -r;
    if (r.is_zero()) break;
    std::vector<BigInt> v = r.coeffs();
    const BigInt c = content(r);
    for (auto& x : v) x = -x / c;
    seq.emplace_back(std::move(v));
  }
  return seq;
}

int variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const Polynomial& s : seq) {
    const int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

}  // namespace

int count_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return variations(seq, lo) - variations(seq, hi);
}

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  int total = 0;
  Polynomial g = p;
  while (g.degree() >= 1) {
    total += count_distinct_roots(g, lo, hi);
    g = gcd(g, derivative(g));
  }
  return total;
}

int count_positive_roots(const Polynomial& p) {
  return count_roots(p, Rational{0, 1}, Rational{root_bound(p), 1});
}

int count_negative_roots(const Polynomial& p) { return count_positive_roots(reflect(p)); }

bool all_roots_real(const Polynomial& p) {
  const BigInt b = root_bound(p);
  return count_roots(p, Rational{-b - 1, 1}, Rational{b, 1}) == p.degree();
}

namespace {

using I128 = __int128;

std::vector<std::int64_t> divisors(std::int64_t v) {
  // positive divisors of |v|, v != 0
  if (v < 0) v = -v;
  std::vector<std::int64_t> d;
  for (std::int64_t k = 1; k * k <= v; ++k)
    if (v % k == 0) {
      d.push_back(k);
      if (k != v / k) d.push_back(v / k);
    }
  return d;
}

bool divides_exactly(const Polynomial& p, const std::vector<I128>& g) {
  // g monic, ascending
  std::vector<BigInt> r = p.coeffs();
  const int dg = static_cast<int>(g.size()) - 1;
  for (int k = p.degree() - dg; k >= 0; --k) {
    const BigInt q = r[k + dg];
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      const auto gj = static_cast<long long>(g[j]);
      r[k + j] -= q * gj;
    }
  }
  for (int k = 0; k < dg; ++k)
    if (r[k] != 0) return false;
  return true;
}

struct Kronecker {
  const Polynomial& p;
  int d;
  std::vector<std::int64_t> xs;
  std::vector<std::vector<std::int64_t>> values;  // candidate g(x_i), signed
  std::vector<std::int64_t> chosen;

  bool search(std::size_t i) {
    if (i == xs.size()) return try_candidate();
    for (std::int64_t v : values[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = (v - chosen[j]) % (xs[i] - xs[j]) == 0;
      if (!ok) continue;
      chosen[i] = v;
      if (search(i + 1)) return true;
    }
    return false;
  }

  bool try_candidate() {
    // h = g - t^d has degree < d and h(x_i) = chosen_i - x_i^d; Newton interpolation
    const std::size_t m = xs.size();
    std::vector<I128> dd(m);
    for (std::size_t i = 0; i < m; ++i) {
      I128 pw = 1;
      for (int k = 0; k < d; ++k) pw *= xs[i];
      dd[i] = chosen[i] - pw;
    }
    for (std::size_t level = 1; level < m; ++level)
      for (std::size_t i = m - 1; i >= level; --i) {
        const I128 num = dd[i] - dd[i - 1];
        const I128 den = xs[i] - xs[i - level];
        if (num % den != 0) return false;
        dd[i] = num / den;
      }
    // expand Newton form into ascending coefficients
    std::vector<I128> h(1, dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
      std::vector<I128> next(h.size() + 1, 0);
      for (std::size_t k = 0; k < h.size(); ++k) {
        next[k + 1] += h[k];
        next[k] -= h[k] * xs[i];
      }
      next[0] += dd[i];
      h = std::move(next);
    }
    std::vector<I128> g(d + 1, 0);
    for (std::size_t k = 0; k < h.size() && k < static_cast<std::size_t>(d); ++k) g[k] = h[k];
    for (std::size_t k = d; k < h.size(); ++k)
      if (h[k] != 0) return false;
    g[d] = 1;
    return divides_exactly(p, g);
  }
};

}  // namespace

bool is_irreducible(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("irreducibility of a constant");
  if (p.leading() != 1) throw std::invalid_argument("irreducibility test needs a monic polynomial");
  const int n = p.degree();
  if (n == 1) return true;
  if (p.coeffs()[0] == 0) return false;

  // evaluation points with small nonzero |p(x)|, fewest divisors first
  struct Point {
    std::int64_t x;
    std::int64_t value;
    std::size_t tau;
  };
  std::vector<Point> points;
  const BigInt limit = BigInt(1) << 40;
  for (std::int64_t step = 0; step <= 40 && points.size() < 24; ++step) {
    for (std::int64_t x : {step, -step}) {
      BigInt v = 0;
      for (int k = n; k >= 0; --k) v = v * x + p.coeffs()[k];
      if (v == 0) return false;  // integer root
      if (boost::multiprecision::abs(v) > limit) continue;
      const auto vi = static_cast<std::int64_t>(v);
      points.push_back({x, vi, divisors(vi).size()});
      if (step == 0) break;
    }
  }

  // linear factors: integer roots divide p(0)
  const BigInt c0 = boost::multiprecision::abs(p.coeffs()[0]);
  if (c0 > limit) throw std::overflow_error("constant term too large for the irreducibility test");
  for (std::int64_t r : divisors(static_cast<std::int64_t>(c0)))
    for (std::int64_t s : {r, -r})
      if (sign_at(p, Rational{s, 1}) == 0) return false;

  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.tau < b.tau; });
  for (int d = 2; d <= n / 2; ++d) {
    if (static_cast<int>(points.size()) < d) throw std::runtime_error("not enough evaluation points");
    Kronecker k{p, d, {}, {}, std::vector<std::int64_t>(d)};
    for (int i = 0; i < d; ++i) {
      k.xs.push_back(points[i].x);
      std::vector<std::int64_t> cand;
      for (std::int64_t v : divisors(points[i].value)) {
        cand.push_back(v);
        cand.push_back(-v);
      }
      k.values.push_back(std::move(cand));
    }
    if (k.search(0)) return false;
  }
  return true;
}

}  // namespace hermdig
