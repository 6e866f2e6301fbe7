#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace engel {

bool is_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Returns {p, k} with n = p^k, or {0, 0} when n is not a prime power.
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t n);

// GF(p^k) in polynomial basis. An element is stored as the integer whose base-p digits are the
// coefficients of its residue class (digit i = coefficient of X^i).
class FieldSpec {
 public:
  using Value = std::uint32_t;

  // Builds GF(p^k) reduced by the lexicographically smallest monic irreducible polynomial of
  // degree k. Throws InvalidArgument for non-prime p or k = 0, CapExceeded above `size_cap`.
  static FieldSpec make(std::uint32_t p, std::uint32_t k, std::uint64_t size_cap = 65536);

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->k; }
  std::uint32_t size() const { return t_->q; }
  // Coefficients c_0..c_{k-1} of X^k + c_{k-1}X^{k-1} + ... + c_0.
  std::span<const std::uint32_t> reduction_poly() const { return t_->poly; }
  std::string describe_poly() const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value neg(Value a) const { return t_->neg[a]; }
  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Value inv(Value a) const;  // throws on 0
  Value pow(Value a, std::int64_t e) const;

  // Least primitive element (by integer encoding) and discrete logarithms relative to it.
  Value primitive() const { return t_->primitive; }
  std::uint32_t log(Value a) const;  // a != 0
  Value exp(std::int64_t e) const;

  // Reference multiplication straight from the polynomial representation (no tables).
  Value mul_poly(Value a, Value b) const;

  bool operator==(const FieldSpec& o) const { return t_->p == o.t_->p && t_->k == o.t_->k; }

 private:
  struct Tables {
    std::uint32_t p = 0, k = 0, q = 0;
    std::vector<std::uint32_t> poly;
    Value primitive = 0;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Value> exp;          // length 2(q-1)
    std::vector<Value> neg;
    std::vector<std::uint16_t> add;  // q*q table, empty for large q
  };
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  static Value mul_poly_raw(const Tables& t, Value a, Value b);
  static Value add_digits(const Tables& t, Value a, Value b);

  std::shared_ptr<const Tables> t_;
};

}  // namespace engel
