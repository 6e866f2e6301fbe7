#include "engel/arithmetic.hpp"

#include <numeric>
#include <sstream>

#include "engel/error.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// Arithmetic

Element Arithmetic::commutator(const Element& a, const Element& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element Arithmetic::power(const Element& a, std::int64_t e) const {
  Element base = e < 0 ? inv(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Element result = identity();
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

std::uint64_t Arithmetic::order(const Element& a) const {
  const Element id = identity();
  Element cur = a;
  std::uint64_t n = 1;
  while (cur != id) {
    cur = mul(cur, a);
    ++n;
  }
  return n;
}

void Arithmetic::check(const Element& a) const {
  if (a.backend() != backend() || a.size() != payload_size())
    throw BackendMismatch(std::string("element of backend ") + backend_name(a.backend()) + " with " +
                          std::to_string(a.size()) + " words used with " + descriptor());
}

// ---------------------------------------------------------------------------------------------
// Permutations

PermutationArithmetic::PermutationArithmetic(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > Element::kCapacity)
    throw CapExceeded("permutation degree " + std::to_string(degree) + " outside 1.." +
                      std::to_string(Element::kCapacity));
}

Element PermutationArithmetic::identity() const {
  Element e;
  std::vector<std::uint16_t> w(degree_);
  std::iota(w.begin(), w.end(), std::uint16_t{0});
  return Element(Backend::permutation, w);
}

Element PermutationArithmetic::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = a;
  for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
  return out;
}

Element PermutationArithmetic::inv(const Element& a) const {
  check(a);
  Element out = a;
  for (std::size_t i = 0; i < degree_; ++i) out[a[i]] = static_cast<std::uint16_t>(i);
  return out;
}

Element PermutationArithmetic::commutator(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::array<std::uint16_t, Element::kCapacity> ai{}, bi{};
  for (std::size_t i = 0; i < degree_; ++i) {
    ai[a[i]] = static_cast<std::uint16_t>(i);
    bi[b[i]] = static_cast<std::uint16_t>(i);
  }
  Element out = a;
  for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[bi[ai[i]]]];
  return out;
}

std::string PermutationArithmetic::format(const Element& a) const {
  std::vector<bool> seen(degree_, false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || a[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ',';
      os << j + 1;
      first = false;
      j = a[j];
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

bool PermutationArithmetic::valid(const Element& a) const {
  if (a.backend() != Backend::permutation || a.size() != degree_) return false;
  std::vector<bool> hit(degree_, false);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a[i] >= degree_ || hit[a[i]]) return false;
    hit[a[i]] = true;
  }
  return true;
}

Element PermutationArithmetic::from_cycles(const std::vector<std::vector<int>>& cycles) const {
  Element out = identity();
  std::vector<bool> used(degree_, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree_ || static_cast<std::size_t>(to) > degree_)
        throw InvalidArgument("cycle point outside 1.." + std::to_string(degree_));
      if (used[from - 1]) throw InvalidArgument("cycles are not disjoint");
      used[from - 1] = true;
      out[from - 1] = static_cast<std::uint16_t>(to - 1);
    }
  }
  return out;
}

Element PermutationArithmetic::from_images(const std::vector<int>& images) const {
  std::vector<std::uint16_t> w(images.begin(), images.end());
  Element out(Backend::permutation, w);
  if (!valid(out)) throw InvalidArgument("image list is not a permutation of degree " + std::to_string(degree_));
  return out;
}

// ---------------------------------------------------------------------------------------------
// Matrices

MatrixArithmetic::MatrixArithmetic(FieldSpec field, std::size_t dim) : field_(std::move(field)), dim_(dim) {
  if (dim == 0 || dim * dim > Element::kCapacity)
    throw CapExceeded("matrix dimension " + std::to_string(dim) + " unsupported");
}

std::string MatrixArithmetic::descriptor() const {
  return "matrix:" + std::to_string(dim_) + ":GF(" + std::to_string(field_.size()) + ")";
}

Element MatrixArithmetic::identity() const {
  std::vector<std::uint16_t> w(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) w[i * dim_ + i] = 1;
  return Element(Backend::matrix, w);
}

Element MatrixArithmetic::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = a;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      FieldSpec::Value s = 0;
      for (std::size_t k = 0; k < dim_; ++k) s = field_.add(s, field_.mul(a[i * dim_ + k], b[k * dim_ + j]));
      out[i * dim_ + j] = static_cast<std::uint16_t>(s);
    }
  }
  return out;
}

Element MatrixArithmetic::inv(const Element& a) const {
  check(a);
  const std::size_t n = dim_;
  std::vector<FieldSpec::Value> m(a.words().begin(), a.words().end());
  std::vector<FieldSpec::Value> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) throw InvalidArgument("singular matrix has no inverse");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(r[piv * n + j], r[col * n + j]);
      }
    }
    FieldSpec::Value s = field_.inv(m[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] = field_.mul(m[col * n + j], s);
      r[col * n + j] = field_.mul(r[col * n + j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i * n + col] == 0) continue;
      FieldSpec::Value f = field_.neg(m[i * n + col]);
      for (std::size_t j = 0; j < n; ++j) {
        m[i * n + j] = field_.add(m[i * n + j], field_.mul(f, m[col * n + j]));
        r[i * n + j] = field_.add(r[i * n + j], field_.mul(f, r[col * n + j]));
      }
    }
  }
  Element out = a;
  for (std::size_t i = 0; i < n * n; ++i) out[i] = static_cast<std::uint16_t>(r[i]);
  return out;
}

FieldSpec::Value MatrixArithmetic::determinant(const Element& a) const {
  const std::size_t n = dim_;
  std::vector<FieldSpec::Value> m(a.words().begin(), a.words().end());
  FieldSpec::Value det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = field_.neg(det);
    }
    det = field_.mul(det, m[col * n + col]);
    FieldSpec::Value s = field_.inv(m[col * n + col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i * n + col] == 0) continue;
      FieldSpec::Value f = field_.neg(field_.mul(m[i * n + col], s));
      for (std::size_t j = col; j < n; ++j) m[i * n + j] = field_.add(m[i * n + j], field_.mul(f, m[col * n + j]));
    }
  }
  return det;
}

std::string MatrixArithmetic::format(const Element& a) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << a[i * dim_ + j];
  }
  os << ']';
  return os.str();
}

bool MatrixArithmetic::valid(const Element& a) const {
  if (a.backend() != Backend::matrix || a.size() != dim_ * dim_) return false;
  for (auto w : a.words())
    if (w >= field_.size()) return false;
  return determinant(a) != 0;
}

Element MatrixArithmetic::from_rows(const std::vector<std::vector<FieldSpec::Value>>& rows) const {
  if (rows.size() != dim_) throw InvalidArgument("matrix row count mismatch");
  std::vector<std::uint16_t> w;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidArgument("matrix column count mismatch");
    for (auto v : row) w.push_back(static_cast<std::uint16_t>(v));
  }
  Element out(Backend::matrix, w);
  if (!valid(out)) throw InvalidArgument("matrix is singular or has entries outside the field");
  return out;
}

// ---------------------------------------------------------------------------------------------
// Semilinear affine maps

SemilinearArithmetic::SemilinearArithmetic(FieldSpec field, std::uint32_t q, std::uint32_t r)
    : field_(std::move(field)), q_(q), r_(r), logmod_(field_.size() - 1) {
  std::uint64_t Q = 1;
  for (std::uint32_t i = 0; i < r; ++i) Q *= q;
  if (r == 0 || Q != field_.size()) throw InvalidArgument("semilinear backend needs a field of size q^r");
  qpow_.resize(r);
  std::uint64_t cur = 1;
  for (std::uint32_t j = 0; j < r; ++j) {
    qpow_[j] = static_cast<std::uint32_t>(cur % logmod_);
    cur = cur * q % logmod_;
  }
  frob_.assign(r, std::vector<FieldSpec::Value>(field_.size()));
  for (std::uint32_t j = 0; j < r; ++j) {
    for (FieldSpec::Value a = 0; a < field_.size(); ++a)
      frob_[j][a] = a == 0 ? 0 : field_.exp(static_cast<std::int64_t>(field_.log(a)) * qpow_[j]);
  }
}

std::string SemilinearArithmetic::descriptor() const {
  return "semilinear:GF(" + std::to_string(q_) + "^" + std::to_string(r_) + ")";
}

Element SemilinearArithmetic::make(std::uint32_t j, std::uint32_t log1, std::uint32_t log2, FieldSpec::Value v1,
                                   FieldSpec::Value v2) const {
  return Element(Backend::semilinear, {static_cast<std::uint16_t>(j % r_), static_cast<std::uint16_t>(log1 % logmod_),
                                       static_cast<std::uint16_t>(log2 % logmod_), static_cast<std::uint16_t>(v1),
                                       static_cast<std::uint16_t>(v2)});
}

Element SemilinearArithmetic::identity() const { return make(0, 0, 0, 0, 0); }

Element SemilinearArithmetic::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  // (j, M, v) acts as w -> sigma^j(w) M + v; a then b gives
  // (ja + jb, sigma^jb(Ma) Mb, sigma^jb(va) Mb + vb)
  const std::uint32_t jb = b[0];
  const std::uint64_t s = qpow_[jb];
  Element out = a;
  out[0] = static_cast<std::uint16_t>((a[0] + jb) % r_);
  for (int i = 0; i < 2; ++i) {
    std::uint32_t l = static_cast<std::uint32_t>((a[1 + i] * s + b[1 + i]) % logmod_);
    out[1 + i] = static_cast<std::uint16_t>(l);
    FieldSpec::Value va = frob_[jb][a[3 + i]];
    FieldSpec::Value scaled = va == 0 ? 0 : field_.mul(va, field_.exp(b[1 + i]));
    out[3 + i] = static_cast<std::uint16_t>(field_.add(scaled, b[3 + i]));
  }
  return out;
}

Element SemilinearArithmetic::inv(const Element& a) const {
  check(a);
  // (-j, sigma^-j(M^-1), -sigma^-j(v M^-1))
  const std::uint32_t jinv = (r_ - a[0]) % r_;
  const std::uint64_t s = qpow_[jinv];
  Element out = a;
  out[0] = static_cast<std::uint16_t>(jinv);
  for (int i = 0; i < 2; ++i) {
    std::uint32_t linv = (logmod_ - a[1 + i]) % logmod_;
    out[1 + i] = static_cast<std::uint16_t>(linv * s % logmod_);
    FieldSpec::Value v = a[3 + i];
    FieldSpec::Value w = v == 0 ? 0 : field_.mul(v, field_.exp(linv));
    out[3 + i] = static_cast<std::uint16_t>(field_.neg(frob_[jinv][w]));
  }
  return out;
}

std::string SemilinearArithmetic::format(const Element& a) const {
  std::ostringstream os;
  os << "<j=" << a[0] << ",diag(w^" << a[1] << ",w^" << a[2] << "),v=(" << a[3] << "," << a[4] << ")>";
  return os.str();
}

bool SemilinearArithmetic::valid(const Element& a) const {
  return a.backend() == Backend::semilinear && a.size() == 5 && a[0] < r_ && a[1] < logmod_ && a[2] < logmod_ &&
         a[3] < field_.size() && a[4] < field_.size();
}

// ---------------------------------------------------------------------------------------------
// Metacyclic

MetacyclicArithmetic::MetacyclicArithmetic(std::uint32_t m, std::uint32_t d, std::uint32_t k, std::uint32_t e)
    : m_(m), d_(d), k_(k % m), e_(e % m) {
  if (m == 0 || d == 0) throw InvalidArgument("metacyclic parameters must be positive");
  if (m > 65535 || d > 65535) throw CapExceeded("metacyclic parameters exceed 16-bit payload");
  if (std::gcd(k_, m_) != 1 && m_ > 1) throw InvalidArgument("metacyclic twist must be a unit mod m");
  kpow_.resize(d_ + 1);
  std::uint64_t cur = 1 % m_;
  for (std::uint32_t j = 0; j <= d_; ++j) {
    kpow_[j] = static_cast<std::uint32_t>(cur);
    cur = cur * k_ % m_;
  }
  if (kpow_[d_] != 1 % m_) throw InvalidArgument("metacyclic twist k must satisfy k^d = 1 mod m");
  if ((static_cast<std::uint64_t>(e_) * ((k_ + m_ - 1) % m_)) % m_ != 0)
    throw InvalidArgument("metacyclic relation b^d = a^e requires e(k-1) = 0 mod m");
}

std::string MetacyclicArithmetic::descriptor() const {
  return "metacyclic:" + std::to_string(m_) + ":" + std::to_string(d_) + ":" + std::to_string(k_) + ":" +
         std::to_string(e_);
}

Element MetacyclicArithmetic::make(std::uint32_t i, std::uint32_t j) const {
  return Element(Backend::metacyclic, {static_cast<std::uint16_t>(i % m_), static_cast<std::uint16_t>(j % d_)});
}

Element MetacyclicArithmetic::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  // a^i b^j a^i' b^j' = a^(i + i' k^j) b^(j + j'), with b^d = a^e
  std::uint64_t i = a[0] + static_cast<std::uint64_t>(b[0]) * kpow_[a[1]];
  std::uint32_t j = a[1] + b[1];
  if (j >= d_) {
    j -= d_;
    i += e_;
  }
  return make(static_cast<std::uint32_t>(i % m_), j);
}

Element MetacyclicArithmetic::inv(const Element& a) const {
  check(a);
  if (a[1] == 0) return make((m_ - a[0]) % m_, 0);
  // (a^i b^j)^-1 = b^(d-j) a^(-e-i) = a^((-e-i) k^(d-j)) b^(d-j)
  std::uint32_t jj = d_ - a[1];
  std::uint64_t base = (2ull * m_ - e_ - a[0]) % m_;
  return make(static_cast<std::uint32_t>(base * kpow_[jj] % m_), jj);
}

std::string MetacyclicArithmetic::format(const Element& a) const {
  std::ostringstream os;
  os << "a^" << a[0] << "*b^" << a[1];
  return os.str();
}

bool MetacyclicArithmetic::valid(const Element& a) const {
  return a.backend() == Backend::metacyclic && a.size() == 2 && a[0] < m_ && a[1] < d_;
}

}  // namespace engel
