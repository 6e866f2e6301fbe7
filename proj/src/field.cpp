#include "engel/field.hpp"

#include <sstream>

#include "engel/error.hpp"

namespace engel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return {0, 0};
  std::uint32_t k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return {ps[0], k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b non-zero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t k = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t k, std::uint64_t size_cap) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidArgument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > size_cap)
      throw CapExceeded("field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds size cap " +
                        std::to_string(size_cap));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);

  // Lexicographically smallest (c_{k-1}, ..., c_0): the digits of the counter, most significant
  // digit being c_{k-1}.
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (k == 1 || is_irreducible(f, p)) {
      t->poly.assign(f.begin(), f.end() - 1);
      break;
    }
  }

  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Value r = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t d = x % p;
      x /= p;
      r += ((p - d) % p) * scale;
      scale *= p;
    }
    t->neg[a] = r;
  }

  // Least primitive element: first candidate whose powers cycle with period q-1.
  if (q == 2) {
    t->primitive = 1;
  } else {
    auto factors = prime_divisors(q - 1);
    for (Value g = 1; g < q; ++g) {
      bool ok = true;
      for (auto f : factors) {
        std::uint64_t e = (q - 1) / f;
        Value r = 1, b = g;
        for (; e; e >>= 1) {
          if (e & 1) r = mul_poly_raw(*t, r, b);
          b = mul_poly_raw(*t, b, b);
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        t->primitive = g;
        break;
      }
    }
  }

  t->log.assign(q, 0);
  t->exp.assign(2 * (q - 1), 0);
  Value cur = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    t->exp[i] = cur;
    t->exp[i + q - 1] = cur;
    t->log[cur] = i;
    cur = mul_poly_raw(*t, cur, t->primitive);
  }

  if (q <= 1024) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    for (Value a = 0; a < q; ++a)
      for (Value b = 0; b < q; ++b) t->add[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(add_digits(*t, a, b));
  }
  return FieldSpec(std::move(t));
}

FieldSpec::Value FieldSpec::add_digits(const Tables& t, Value a, Value b) {
  if (t.p == 2) return a ^ b;
  Value r = 0, scale = 1;
  for (std::uint32_t i = 0; i < t.k; ++i) {
    r += ((a % t.p + b % t.p) % t.p) * scale;
    a /= t.p;
    b /= t.p;
    scale *= t.p;
  }
  return r;
}

FieldSpec::Value FieldSpec::add(Value a, Value b) const {
  if (!t_->add.empty()) return t_->add[static_cast<std::size_t>(a) * t_->q + b];
  return add_digits(*t_, a, b);
}

FieldSpec::Value FieldSpec::mul_poly_raw(const Tables& t, Value a, Value b) {
  const std::uint32_t p = t.p, k = t.k;
  std::vector<std::uint64_t> prod(2 * k, 0);
  std::vector<std::uint32_t> da(k), db(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
  // X^k = -(c_{k-1} X^{k-1} + ... + c_0)
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * t.poly[i]) % p;
  }
  Value r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    r += static_cast<Value>(prod[i]) * scale;
    scale *= p;
  }
  return r;
}

FieldSpec::Value FieldSpec::mul_poly(Value a, Value b) const { return mul_poly_raw(*t_, a, b); }

FieldSpec::Value FieldSpec::inv(Value a) const {
  if (a == 0) throw InvalidArgument("inverse of zero field element");
  std::uint32_t l = t_->log[a];
  return t_->exp[(t_->q - 1 - l) % (t_->q - 1)];
}

FieldSpec::Value FieldSpec::pow(Value a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw InvalidArgument("negative power of zero field element");
    return e == 0 ? 1 : 0;
  }
  std::int64_t m = t_->q - 1;
  std::int64_t l = (static_cast<std::int64_t>(t_->log[a]) * (e % m)) % m;
  if (l < 0) l += m;
  return t_->exp[l];
}

std::uint32_t FieldSpec::log(Value a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero field element");
  return t_->log[a];
}

FieldSpec::Value FieldSpec::exp(std::int64_t e) const {
  std::int64_t m = t_->q - 1;
  e %= m;
  if (e < 0) e += m;
  return t_->exp[e];
}

std::string FieldSpec::describe_poly() const {
  std::ostringstream os;
  os << "X^" << t_->k;
  for (std::int64_t i = static_cast<std::int64_t>(t_->k) - 1; i >= 0; --i) {
    auto c = t_->poly[i];
    if (c == 0) continue;
    os << " + ";
    if (c != 1 || i == 0) os << c;
    if (i > 0) os << (c != 1 ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (t_->k == 1 && t_->poly[0] == 0) return "X";
  return os.str();
}

}  // namespace engel
