#include <stdexcept>
#include <string>

#include "ahm/designs.hpp"

namespace ahm {

namespace {

using Poly = std::vector<unsigned>;  // c_0..c_d, may carry trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p * p - (lead * g[i]) % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly decode(unsigned e, unsigned p, unsigned k) {
  Poly c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = e % p;
    e /= p;
  }
  return c;
}

unsigned encode(const Poly& c, unsigned p) {
  unsigned e = 0;
  for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
  return e;
}

unsigned ipow(unsigned base, unsigned e) {
  unsigned r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<unsigned>& monic_coeffs, unsigned p) {
  Poly f = monic_coeffs;
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("expected a monic polynomial of degree >= 1");
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  for (unsigned dg = 1; dg <= d / 2; ++dg) {
    const unsigned count = ipow(p, dg);
    for (unsigned t = 0; t < count; ++t) {
      Poly g = decode(t, p, dg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kFieldBudget) {
      throw std::invalid_argument("field order p^k exceeds budget " + std::to_string(kFieldBudget));
    }
  }
  q_ = q;

  for (unsigned t = 0; t < q_ && modulus_.empty(); ++t) {
    Poly cand = decode(t, p, k);
    cand.push_back(1);
    if (is_irreducible(cand, p)) modulus_ = cand;
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const Poly pa = decode(a, p, k);
    Poly na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = encode(na, p);
    for (unsigned b = 0; b < q_; ++b) {
      const Poly pb = decode(b, p, k);
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = encode(s, p);

      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == 0) throw std::logic_error("element without inverse; modulus not irreducible");
  }
  // The nonzero elements form a group of order q - 1.
  for (unsigned a = 1; a < q_; ++a) {
    if (pow(a, q_ - 1) != 1) throw std::logic_error("multiplicative group order check failed");
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0 || a >= q_) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FiniteField::to_string(Elem a) const {
  const Poly c = decode(a, p_, k_);
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

FiniteField build_field(unsigned p, unsigned k) { return FiniteField(p, k); }

}  // namespace ahm
