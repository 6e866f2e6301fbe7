#include "engel/catalog.hpp"

#include <numeric>
#include <unordered_map>

#include "engel/error.hpp"
#include "engel/field.hpp"

namespace engel {

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Group checked(Group g, std::uint64_t expected, const std::string& name) {
  if (g.order() != expected)
    throw Error(name + ": generated order " + std::to_string(g.order()) + ", expected " + std::to_string(expected));
  return g;
}

void check_degree(unsigned n, const char* family) {
  if (n < 2) throw InvalidArgument(std::string(family) + "(n) needs n >= 2");
  if (n > 9) throw CapExceeded(std::string(family) + "(n) is limited to n <= 9");
}

std::vector<int> cycle(int from, int to) {
  std::vector<int> c;
  for (int i = from; i <= to; ++i) c.push_back(i);
  return c;
}

unsigned least_primitive_root(unsigned p) {
  if (p == 2) return 1;
  auto divs = prime_divisors(p - 1);
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (auto d : divs) {
      std::uint64_t acc = 1, b = g, e = (p - 1) / d;
      while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root mod " + std::to_string(p));
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Permutation families

Group make_symmetric(unsigned n, const Limits& limits) {
  check_degree(n, "S");
  auto arith = std::make_shared<PermutationArithmetic>(n);
  std::vector<Element> gens{arith->from_cycles({{1, 2}})};
  if (n > 2) gens.push_back(arith->from_cycles({cycle(1, static_cast<int>(n))}));
  return checked(Group::generate(arith, gens, limits), factorial(n), "S(" + std::to_string(n) + ")");
}

Group make_alternating(unsigned n, const Limits& limits) {
  check_degree(n, "A");
  auto arith = std::make_shared<PermutationArithmetic>(n);
  std::vector<Element> gens;
  if (n >= 3) gens.push_back(arith->from_cycles({{1, 2, 3}}));
  if (n >= 4) gens.push_back(n % 2 ? arith->from_cycles({cycle(1, static_cast<int>(n))})
                                   : arith->from_cycles({cycle(2, static_cast<int>(n))}));
  return checked(Group::generate(arith, gens, limits), factorial(n) / 2, "A(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------------------------
// Metacyclic families

namespace {

Group metacyclic(unsigned m, unsigned d, unsigned k, unsigned e, std::uint64_t expected, const std::string& name) {
  auto arith = std::make_shared<MetacyclicArithmetic>(m, d, k, e);
  std::vector<Element> gens;
  if (m > 1) gens.push_back(arith->make(1, 0));
  if (d > 1) gens.push_back(arith->make(0, 1));
  return checked(Group::generate(arith, gens), expected, name);
}

}  // namespace

Group make_cyclic(unsigned n) {
  if (n < 1) throw InvalidArgument("C(n) needs n >= 1");
  return metacyclic(n, 1, 1, 0, n, "C(" + std::to_string(n) + ")");
}

Group make_dihedral(unsigned n) {
  if (n < 2 || n % 2) throw InvalidArgument("D(n) is the dihedral group of order n and needs even n >= 2");
  unsigned m = n / 2;
  return metacyclic(m, 2, m - 1, 0, n, "D(" + std::to_string(n) + ")");
}

Group make_dicyclic(unsigned n) {
  if (n < 4 || n % 4) throw InvalidArgument("Q(n) is the dicyclic group of order n and needs 4 | n");
  unsigned m = n / 2;
  return metacyclic(m, 2, m - 1, n / 4, n, "Q(" + std::to_string(n) + ")");
}

Group make_frobenius_metacyclic(unsigned p, unsigned d) {
  if (!is_prime(p)) throw InvalidArgument("Frob(p,d): p = " + std::to_string(p) + " is not prime");
  if (d < 1 || (p - 1) % d) throw InvalidArgument("Frob(p,d): d = " + std::to_string(d) + " does not divide p-1");
  auto k = static_cast<unsigned>(powmod(least_primitive_root(p), (p - 1) / d, p));
  return metacyclic(p, d, k, 0, static_cast<std::uint64_t>(p) * d,
                    "Frob(" + std::to_string(p) + "," + std::to_string(d) + ")");
}

// ---------------------------------------------------------------------------------------------
// Linear groups

Group make_linear(LinearKind kind, unsigned dim, unsigned q, const Limits& limits) {
  if (dim != 2) throw InvalidArgument("linear groups are supported in dimension 2 only");
  auto [p, k] = prime_power(q);
  if (p == 0) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  FieldSpec f = FieldSpec::make(static_cast<std::uint32_t>(p), k, limits.max_field_size);
  const FieldSpec::Value w = f.primitive(), one = 1;
  const std::uint64_t qq = q;

  if (kind == LinearKind::PSL) {
    if (q > 32) throw CapExceeded("PSL(2,q) is limited to q <= 32");
    const auto inf = static_cast<int>(q);
    auto arith = std::make_shared<PermutationArithmetic>(q + 1);
    std::vector<int> shift(q + 1), scale(q + 1), flip(q + 1);
    const FieldSpec::Value w2 = f.mul(w, w);
    for (FieldSpec::Value z = 0; z < q; ++z) {
      shift[z] = static_cast<int>(f.add(z, one));
      scale[z] = static_cast<int>(f.mul(w2, z));
      flip[z] = z == 0 ? inf : static_cast<int>(f.neg(f.inv(z)));
    }
    shift[q] = scale[q] = inf;
    flip[q] = 0;
    std::vector<Element> gens{arith->from_images(shift), arith->from_images(scale), arith->from_images(flip)};
    return checked(Group::generate(arith, gens, limits), qq * (qq * qq - 1) / std::gcd<std::uint64_t>(2, qq - 1),
                   "PSL(2," + std::to_string(q) + ")");
  }

  auto arith = std::make_shared<MatrixArithmetic>(f, 2);
  const FieldSpec::Value winv = f.inv(w), m1 = f.neg(one);
  std::vector<Element> gens{arith->from_rows({{one, one}, {0, one}}), arith->from_rows({{0, one}, {m1, 0}})};
  gens.push_back(arith->from_rows({{w, 0}, {0, winv}}));
  std::uint64_t order = qq * (qq * qq - 1);
  std::string name = "SL(2," + std::to_string(q) + ")";
  if (kind == LinearKind::GL) {
    gens.push_back(arith->from_rows({{w, 0}, {0, one}}));
    order *= qq - 1;
    name = "GL(2," + std::to_string(q) + ")";
  }
  return checked(Group::generate(arith, gens, limits), order, name);
}

Group make_suzuki(unsigned q, const Limits& limits) {
  if (q != 8) throw InvalidArgument("Sz(q) is supported for q = 8 only");
  const unsigned t = 1;  // q = 2^(2t+1)
  FieldSpec f = FieldSpec::make(2, 2 * t + 1, limits.max_field_size);
  auto arith = std::make_shared<MatrixArithmetic>(f, 4);
  auto theta = [&](FieldSpec::Value a) { return f.pow(a, std::int64_t{1} << (t + 1)); };
  auto S = [&](FieldSpec::Value a, FieldSpec::Value b) {
    const FieldSpec::Value at = theta(a);
    const FieldSpec::Value c0 = f.add(f.add(f.mul(f.mul(a, a), at), f.mul(a, b)), theta(b));
    const FieldSpec::Value c1 = f.add(f.mul(a, at), b);
    return arith->from_rows({{1, 0, 0, 0}, {a, 1, 0, 0}, {b, at, 1, 0}, {c0, c1, a, 1}});
  };
  const FieldSpec::Value k = f.primitive();
  const std::int64_t s = std::int64_t{1} << t;
  auto M = arith->from_rows({{f.pow(k, s + 1), 0, 0, 0},
                             {0, f.pow(k, s), 0, 0},
                             {0, 0, f.pow(k, -s), 0},
                             {0, 0, 0, f.pow(k, -s - 1)}});
  auto T = arith->from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  std::vector<Element> gens{S(1, 0), S(0, 1), M, T};
  const std::uint64_t qq = q;
  return checked(Group::generate(arith, gens, limits), qq * qq * (qq * qq + 1) * (qq - 1), "Sz(8)");
}

// ---------------------------------------------------------------------------------------------
// F x| D example

namespace {

class Ex4Indexer final : public ElementIndexer {
 public:
  Ex4Indexer(const SemilinearArithmetic& arith, std::vector<Element> d_table)
      : d_(std::move(d_table)), fsize_(arith.field().size()), r_(arith.r()), logmod_(fsize_ - 1) {
    const std::uint64_t keys = static_cast<std::uint64_t>(r_) * logmod_ * logmod_;
    if (keys <= (std::uint64_t{1} << 24)) dense_.assign(keys, kNoIndex);
    for (ElemIndex i = 0; i < d_.size(); ++i) {
      if (dense_.empty())
        sparse_.emplace(key(d_[i]), i);
      else
        dense_[key(d_[i])] = i;
    }
  }

  std::uint64_t size() const override { return d_.size() * fsize_ * fsize_; }

  Element at(ElemIndex i) const override {
    const std::uint64_t sq = static_cast<std::uint64_t>(fsize_) * fsize_;
    Element e = d_[i / sq];
    const std::uint64_t rem = i % sq;
    e[3] = static_cast<std::uint16_t>(rem / fsize_);
    e[4] = static_cast<std::uint16_t>(rem % fsize_);
    return e;
  }

  ElemIndex find(const Element& e) const override {
    if (e.backend() != Backend::semilinear || e.size() != 5) return kNoIndex;
    if (e[0] >= r_ || e[1] >= logmod_ || e[2] >= logmod_ || e[3] >= fsize_ || e[4] >= fsize_) return kNoIndex;
    ElemIndex d;
    if (dense_.empty()) {
      auto it = sparse_.find(key(e));
      if (it == sparse_.end()) return kNoIndex;
      d = it->second;
    } else {
      d = dense_[key(e)];
      if (d == kNoIndex) return kNoIndex;
    }
    return static_cast<ElemIndex>((static_cast<std::uint64_t>(d) * fsize_ + e[3]) * fsize_ + e[4]);
  }

 private:
  std::uint64_t key(const Element& e) const {
    return (static_cast<std::uint64_t>(e[0]) * logmod_ + e[1]) * logmod_ + e[2];
  }

  std::vector<Element> d_;
  std::uint32_t fsize_, r_, logmod_;
  std::vector<ElemIndex> dense_;
  std::unordered_map<std::uint64_t, ElemIndex> sparse_;
};

}  // namespace

Ex4Instance make_ex4(unsigned q, unsigned r, unsigned t, const Limits& limits) {
  auto [p, k] = prime_power(q);
  if (p == 0 || p == 2) throw InvalidArgument("Ex4(q,r,t): q = " + std::to_string(q) + " is not an odd prime power");
  if (!is_prime(r) || r < 3) throw InvalidArgument("Ex4(q,r,t): r = " + std::to_string(r) + " is not a prime >= 3");
  if (!is_prime(t)) throw InvalidArgument("Ex4(q,r,t): t = " + std::to_string(t) + " is not prime");
  if ((q - 1) % r != 0) throw InvalidArgument("Ex4(q,r,t): r does not divide q-1");
  if ((q - 1) % (r * r) == 0) throw InvalidArgument("Ex4(q,r,t): r^2 divides q-1 (r must divide q-1 exactly)");
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < r; ++i) {
    Q *= q;
    if (Q > limits.max_field_size) throw CapExceeded("Ex4(q,r,t): field size q^r exceeds the field cap");
  }
  if (((Q - 1) / (q - 1)) % t != 0) throw InvalidArgument("Ex4(q,r,t): t does not divide (q^r-1)/(q-1)");
  if ((q - 1) % t == 0) throw InvalidArgument("Ex4(q,r,t): t divides q-1");
  const std::uint64_t order = Q * Q * r * r * t;
  if (order > limits.max_order_stream)
    throw CapExceeded("Ex4(q,r,t): order " + std::to_string(order) + " exceeds the streaming cap");

  FieldSpec field = FieldSpec::make(static_cast<std::uint32_t>(p), k * r, limits.max_field_size);
  auto arith = std::make_shared<SemilinearArithmetic>(field, q, r);
  const auto le = static_cast<std::uint32_t>((Q - 1) / (r * r));
  const auto lf = static_cast<std::uint32_t>((Q - 1) / t);
  const Element z = arith->make(0, le, le);
  const Element x = arith->mul(z, arith->make(1, 0, 0));
  const Element c = arith->make(0, 0, lf);

  Group d = Group::generate(arith, {x, c}, limits);
  if (d.order() != static_cast<std::uint64_t>(r) * r * t)
    throw Error("Ex4: <x,c> has order " + std::to_string(d.order()) + ", expected r^2 t");

  std::vector<Element> f_basis;
  FieldSpec::Value unit = 1;
  for (unsigned i = 0; i < k * r; ++i, unit *= static_cast<FieldSpec::Value>(p)) {
    f_basis.push_back(arith->translation(unit, 0));
    f_basis.push_back(arith->translation(0, unit));
  }

  std::vector<Element> gens{x, c};
  gens.insert(gens.end(), f_basis.begin(), f_basis.end());
  auto indexer = std::make_shared<Ex4Indexer>(*arith, d.elements());
  Group group = Group::with_indexer(arith, gens, indexer);

  Subgroup D = subgroup_closure(group, std::vector<Element>{x, c}, limits);
  Subgroup C = subgroup_closure(group, std::vector<Element>{c}, limits);
  std::vector<Element> fc_gens;
  for (const auto& v : f_basis) fc_gens.push_back(arith->commutator(v, c));
  Subgroup FC = subgroup_closure(group, fc_gens, limits);
  return Ex4Instance{q, r, t, arith, group, x, c, z, f_basis, D, C, FC, Q * Q};
}

Group Ex4Instance::fc_d(const Limits& limits) const {
  std::vector<Element> gens = FC.generators();
  gens.push_back(x);
  gens.push_back(c);
  return Group::generate(arith, gens, limits);
}

// ---------------------------------------------------------------------------------------------
// Expressions

namespace {

unsigned arg(const GroupSpecExpr& e, std::size_t i) {
  const std::int64_t v = e.args.at(i);
  if (v < 0 || v > 0xFFFFFF) throw InvalidArgument(e.family + ": argument " + std::to_string(v) + " out of range");
  return static_cast<unsigned>(v);
}

void arity(const GroupSpecExpr& e, std::size_t n) {
  if (e.args.size() != n)
    throw InvalidArgument(e.family + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                          std::to_string(e.args.size()));
}

}  // namespace

Group make_group(const GroupSpecExpr& e, const Limits& limits) {
  const std::string& f = e.family;
  if (f == "S") return arity(e, 1), make_symmetric(arg(e, 0), limits);
  if (f == "A") return arity(e, 1), make_alternating(arg(e, 0), limits);
  if (f == "C") return arity(e, 1), make_cyclic(arg(e, 0));
  if (f == "D") return arity(e, 1), make_dihedral(arg(e, 0));
  if (f == "Q") return arity(e, 1), make_dicyclic(arg(e, 0));
  if (f == "GL" || f == "SL" || f == "PSL") {
    arity(e, 2);
    LinearKind kind = f == "GL" ? LinearKind::GL : f == "SL" ? LinearKind::SL : LinearKind::PSL;
    return make_linear(kind, arg(e, 0), arg(e, 1), limits);
  }
  if (f == "Sz") return arity(e, 1), make_suzuki(arg(e, 0), limits);
  if (f == "Frob") return arity(e, 2), make_frobenius_metacyclic(arg(e, 0), arg(e, 1));
  if (f == "Ex4") return arity(e, 3), make_ex4(arg(e, 0), arg(e, 1), arg(e, 2), limits).group;
  throw InvalidArgument("unknown group family '" + f + "'");
}

std::uint64_t expected_order(const GroupSpecExpr& e) {
  const std::string& f = e.family;
  if (f == "S") return factorial(arg(e, 0));
  if (f == "A") return factorial(arg(e, 0)) / 2;
  if (f == "C" || f == "D" || f == "Q") return arg(e, 0);
  const auto q = static_cast<std::uint64_t>(e.args.size() > 1 ? arg(e, 1) : 0);
  if (f == "GL") return q * (q * q - 1) * (q - 1);
  if (f == "SL") return q * (q * q - 1);
  if (f == "PSL") return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
  if (f == "Sz") {
    const std::uint64_t s = arg(e, 0);
    return s * s * (s * s + 1) * (s - 1);
  }
  if (f == "Frob") return static_cast<std::uint64_t>(arg(e, 0)) * arg(e, 1);
  if (f == "Ex4") {
    const std::uint64_t r = arg(e, 1), Q = ipow(arg(e, 0), static_cast<unsigned>(r));
    return Q * Q * r * r * arg(e, 2);
  }
  throw InvalidArgument("unknown group family '" + f + "'");
}

}  // namespace engel
