#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "engel/element.hpp"
#include "engel/field.hpp"

namespace engel {

// Multiplication rules for one backend and one set of dimensions. All products use right
// actions: in a*b, a acts first. Commutators are [a,b] = a^-1 b^-1 a b and conjugates are
// a^b = b^-1 a b.
class Arithmetic {
 public:
  virtual ~Arithmetic() = default;

  virtual Backend backend() const = 0;
  virtual std::size_t payload_size() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual Element commutator(const Element& a, const Element& b) const;
  virtual std::string format(const Element& a) const = 0;
  // Structural validity of a payload (bijection, invertible matrix, exponent ranges).
  virtual bool valid(const Element& a) const = 0;
  // Identifies the backend and its dimensions; equal descriptors mean compatible elements.
  virtual std::string descriptor() const = 0;

  Element conjugate(const Element& a, const Element& by) const { return mul(mul(inv(by), a), by); }
  Element power(const Element& a, std::int64_t e) const;
  std::uint64_t order(const Element& a) const;
  bool is_identity(const Element& a) const { return a == identity(); }

  // Throws BackendMismatch unless `a` carries this backend's tag and payload length.
  void check(const Element& a) const;
};

class PermutationArithmetic final : public Arithmetic {
 public:
  explicit PermutationArithmetic(std::size_t degree);

  Backend backend() const override { return Backend::permutation; }
  std::size_t payload_size() const override { return degree_; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  Element commutator(const Element& a, const Element& b) const override;
  std::string format(const Element& a) const override;
  bool valid(const Element& a) const override;
  std::string descriptor() const override { return "perm:" + std::to_string(degree_); }

  std::size_t degree() const { return degree_; }
  // Builds a permutation from disjoint cycles written with 1-based points.
  Element from_cycles(const std::vector<std::vector<int>>& cycles) const;
  Element from_images(const std::vector<int>& images) const;  // 0-based images

 private:
  std::size_t degree_;
};

class MatrixArithmetic final : public Arithmetic {
 public:
  MatrixArithmetic(FieldSpec field, std::size_t dim);

  Backend backend() const override { return Backend::matrix; }
  std::size_t payload_size() const override { return dim_ * dim_; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string format(const Element& a) const override;
  bool valid(const Element& a) const override;
  std::string descriptor() const override;

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  // Row-major entries.
  Element from_rows(const std::vector<std::vector<FieldSpec::Value>>& rows) const;
  FieldSpec::Value entry(const Element& a, std::size_t row, std::size_t col) const { return a[row * dim_ + col]; }
  FieldSpec::Value determinant(const Element& a) const;

 private:
  FieldSpec field_;
  std::size_t dim_;
};

// Affine semilinear maps of GF(Q)^2 with diagonal linear part, Q = q^r:
//   w  |->  sigma^j(w) * diag(omega^l1, omega^l2) + (v1, v2)
// where sigma(a) = a^q and omega is the field's primitive element.
// Payload: [j, l1, l2, v1, v2].
class SemilinearArithmetic final : public Arithmetic {
 public:
  SemilinearArithmetic(FieldSpec field, std::uint32_t q, std::uint32_t r);

  Backend backend() const override { return Backend::semilinear; }
  std::size_t payload_size() const override { return 5; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string format(const Element& a) const override;
  bool valid(const Element& a) const override;
  std::string descriptor() const override;

  const FieldSpec& field() const { return field_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t r() const { return r_; }
  Element make(std::uint32_t j, std::uint32_t log1, std::uint32_t log2, FieldSpec::Value v1 = 0,
               FieldSpec::Value v2 = 0) const;
  Element translation(FieldSpec::Value v1, FieldSpec::Value v2) const { return make(0, 0, 0, v1, v2); }
  FieldSpec::Value frobenius(FieldSpec::Value a, std::uint32_t j) const { return frob_[j % r_][a]; }

 private:
  FieldSpec field_;
  std::uint32_t q_, r_, logmod_;
  std::vector<std::uint32_t> qpow_;              // q^j mod (Q-1)
  std::vector<std::vector<FieldSpec::Value>> frob_;  // frob_[j][a] = a^(q^j)
};

// Split or non-split metacyclic groups <a, b | a^m, b^d = a^e, b a b^-1 = a^k>.
// Element a^i b^j has payload [i, j].
class MetacyclicArithmetic final : public Arithmetic {
 public:
  MetacyclicArithmetic(std::uint32_t m, std::uint32_t d, std::uint32_t k, std::uint32_t e);

  Backend backend() const override { return Backend::metacyclic; }
  std::size_t payload_size() const override { return 2; }
  Element identity() const override { return make(0, 0); }
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string format(const Element& a) const override;
  bool valid(const Element& a) const override;
  std::string descriptor() const override;

  Element make(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t m() const { return m_; }
  std::uint32_t d() const { return d_; }

 private:
  std::uint32_t m_, d_, k_, e_;
  std::vector<std::uint32_t> kpow_;  // k^j mod m
};

}  // namespace engel
