#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "engel/arithmetic.hpp"
#include "engel/catalog.hpp"
#include "engel/error.hpp"
#include "engel/field.hpp"
#include "engel/group.hpp"

using namespace engel;

namespace {

// Orbit of a under conjugation, by brute force.
std::set<Element> conjugates(const Group& g, const Element& a) {
  std::set<Element> out;
  for (const auto& h : g.elements()) out.insert(g.conjugate(a, h));
  return out;
}

std::uint64_t brute_order(const Arithmetic& ar, const Element& a) {
  std::uint64_t n = 1;
  for (Element cur = a; !ar.is_identity(cur); cur = ar.mul(cur, a)) ++n;
  return n;
}

}  // namespace

TEST_CASE("prime field uses X as reduction polynomial") {
  FieldSpec f = FieldSpec::make(7, 1);
  CHECK(f.size() == 7);
  REQUIRE(f.reduction_poly().size() == 1);
  CHECK(f.reduction_poly()[0] == 0);
  for (FieldSpec::Value a = 0; a < 7; ++a)
    for (FieldSpec::Value b = 0; b < 7; ++b) {
      CHECK(f.add(a, b) == (a + b) % 7);
      CHECK(f.mul(a, b) == (a * b) % 7);
    }
}

TEST_CASE("GF(8) has an element of multiplicative order 7") {
  FieldSpec f = FieldSpec::make(2, 3);
  CHECK(f.size() == 8);
  // Powering with the table-free multiplication.
  bool found = false;
  for (FieldSpec::Value a = 1; a < 8; ++a) {
    std::set<FieldSpec::Value> powers;
    FieldSpec::Value cur = a;
    for (int i = 0; i < 7; ++i) {
      powers.insert(cur);
      cur = f.mul_poly(cur, a);
    }
    if (powers.size() == 7) found = true;
  }
  CHECK(found);
  // reduction polynomial of degree 3 is irreducible iff it has no root in GF(2)
  auto c = f.reduction_poly();
  for (unsigned x = 0; x < 2; ++x) CHECK((x * x * x + c[2] * x * x + c[1] * x + c[0]) % 2 != 0);
}

TEST_CASE("field tables agree with polynomial multiplication") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 3}}) {
    FieldSpec f = FieldSpec::make(p, k);
    std::mt19937 rng(p * 100 + k);
    for (int i = 0; i < 2000; ++i) {
      FieldSpec::Value a = rng() % f.size(), b = rng() % f.size();
      CHECK(f.mul(a, b) == f.mul_poly(a, b));
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("field construction is deterministic and validates input") {
  FieldSpec a = FieldSpec::make(7, 3), b = FieldSpec::make(7, 3);
  CHECK(a.size() == 343);
  CHECK(std::vector<std::uint32_t>(a.reduction_poly().begin(), a.reduction_poly().end()) ==
        std::vector<std::uint32_t>(b.reduction_poly().begin(), b.reduction_poly().end()));
  CHECK(a.primitive() == b.primitive());
  CHECK_THROWS_AS(FieldSpec::make(6, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::make(2, 0), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::make(2, 20, 65536), CapExceeded);
}

TEST_CASE("element basics") {
  PermutationArithmetic ar(4);
  Element t = ar.from_cycles({{1, 2}});
  CHECK(ar.is_identity(ar.mul(t, t)));
  CHECK(ar.order(ar.identity()) == 1);
  PermutationArithmetic ar5(5);
  CHECK(ar5.order(ar5.from_cycles({{1, 2, 3, 4, 5}})) == 5);

  // right actions: in a*b, a acts first
  Element a = ar.from_cycles({{1, 2}}), b = ar.from_cycles({{2, 3}});
  CHECK(ar.mul(a, b) == ar.from_cycles({{1, 3, 2}}));

  MetacyclicArithmetic mc(5, 4, 2, 0);
  CHECK_THROWS_AS(ar.mul(t, mc.make(1, 0)), BackendMismatch);
  PermutationArithmetic ar3(3);
  CHECK_THROWS_AS(ar.mul(t, ar3.identity()), BackendMismatch);
}

TEST_CASE("group axioms and encodings on every backend") {
  std::vector<Group> groups{make_symmetric(5), make_linear(LinearKind::GL, 2, 3), make_frobenius_metacyclic(19, 6),
                            make_dicyclic(12)};
  Ex4Instance ex = make_ex4(7, 3, 19);
  std::mt19937_64 rng(7);
  for (const auto& g : groups) {
    const auto& el = g.elements();
    for (int i = 0; i < 500; ++i) {
      const Element &a = el[rng() % el.size()], &b = el[rng() % el.size()], &c = el[rng() % el.size()];
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.arithmetic().is_identity(g.mul(a, g.inv(a))));
      CHECK((a.encoding() == b.encoding()) == (a == b));
      CHECK(g.order() % g.elem_order(a) == 0);
    }
  }
  for (int i = 0; i < 500; ++i) {
    const Element a = ex.group.element(static_cast<ElemIndex>(rng() % ex.group.order()));
    const Element b = ex.group.element(static_cast<ElemIndex>(rng() % ex.group.order()));
    const Element c = ex.group.element(static_cast<ElemIndex>(rng() % ex.group.order()));
    CHECK(ex.group.mul(ex.group.mul(a, b), c) == ex.group.mul(a, ex.group.mul(b, c)));
    CHECK(ex.arith->is_identity(ex.group.mul(a, ex.group.inv(a))));
    CHECK(ex.group.contains(ex.group.mul(a, b)));
    CHECK(ex.group.index_of(a) < ex.group.order());
  }
}

TEST_CASE("element orders by direct powering") {
  Ex4Instance ex = make_ex4(7, 3, 19);
  CHECK(brute_order(*ex.arith, ex.x) == 9);
  CHECK(ex.group.elem_order(ex.x) == 9);
  CHECK(brute_order(*ex.arith, ex.c) == 19);
  CHECK(brute_order(*ex.arith, ex.z) == 9);
}

TEST_CASE("z commutes with c, x does not") {
  Ex4Instance ex = make_ex4(7, 3, 19);
  const Arithmetic& ar = *ex.arith;
  CHECK(ar.mul(ex.z, ex.c) == ar.mul(ex.c, ex.z));
  CHECK(ar.mul(ex.x, ex.c) != ar.mul(ex.c, ex.x));
}

TEST_CASE("enumeration") {
  Group s4 = make_symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  Group again = make_symmetric(4);
  CHECK(s4.elements() == again.elements());

  const std::uint64_t q = 8;
  CHECK(make_linear(LinearKind::PSL, 2, 8).order() == q * (q * q - 1) / 1);

  Ex4Instance ex = make_ex4(7, 3, 19);
  CHECK(ex.group.order() == 20117979ull);
  CHECK_FALSE(ex.group.stored());
  CHECK_THROWS_AS(ex.group.elements(), InvalidArgument);

  Limits small;
  small.max_order_stored = 1000;
  CHECK_THROWS_AS(make_symmetric(7, small), CapExceeded);
}

TEST_CASE("trivial group") {
  Group c1 = make_cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(centralizer(c1, c1.identity()).order() == 1);
  CHECK(c1.classes().count() == 1);
}

TEST_CASE("centralizers") {
  Group a5 = make_alternating(5);
  PermutationArithmetic ar(5);
  Element x = ar.from_cycles({{1, 2, 3, 4, 5}});
  Subgroup c = centralizer(a5, x);
  std::vector<ElemIndex> brute;
  for (ElemIndex i = 0; i < a5.order(); ++i)
    if (a5.mul(a5.element(i), x) == a5.mul(x, a5.element(i))) brute.push_back(i);
  CHECK(c.members() == brute);
  CHECK(c.order() == 5);
  CHECK(c == subgroup_closure(a5, std::vector<Element>{x}));
  CHECK(centralizer(a5, a5.identity()).order() == 60);

  for (const auto& g : {make_symmetric(4), make_alternating(5), make_linear(LinearKind::GL, 2, 3)}) {
    for (const auto& a : g.elements()) {
      const std::uint64_t cs = centralizer(g, a).order();
      CHECK(g.order() % cs == 0);
      CHECK(conjugates(g, a).size() * cs == g.order());
    }
  }
}

TEST_CASE("normalizer of a cyclic subgroup") {
  Group s4 = make_symmetric(4);
  for (const auto& a : s4.elements()) {
    Subgroup cyc = subgroup_closure(s4, std::vector<Element>{a});
    std::vector<ElemIndex> brute;
    for (ElemIndex i = 0; i < s4.order(); ++i)
      if (cyc.contains(s4.conjugate(a, s4.element(i)))) brute.push_back(i);
    CHECK(normalizer_of_cyclic(s4, a).members() == brute);
  }
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const Group& g) {
    std::multiset<std::size_t> s;
    for (const auto& m : g.classes().members) s.insert(m.size());
    return s;
  };
  Group s3 = make_symmetric(3);
  CHECK(sizes(s3) == std::multiset<std::size_t>{1, 2, 3});

  Group a5 = make_alternating(5);
  std::multiset<std::size_t> brute;
  std::set<Element> seen;
  for (const auto& a : a5.elements()) {
    if (seen.count(a)) continue;
    auto orbit = conjugates(a5, a);
    seen.insert(orbit.begin(), orbit.end());
    brute.insert(orbit.size());
  }
  CHECK(sizes(a5) == brute);
  CHECK(brute == std::multiset<std::size_t>{1, 12, 12, 15, 20});

  Group c12 = make_cyclic(12);
  CHECK(c12.classes().count() == 12);

  // representatives are the least members, and the transport tree reproduces every member
  for (const auto& g : {a5, make_linear(LinearKind::GL, 2, 3)}) {
    const auto& cp = g.classes();
    std::size_t total = 0;
    for (std::size_t c = 0; c < cp.count(); ++c) {
      total += cp.members[c].size();
      CHECK(cp.representatives[c] == cp.members[c].front());
    }
    CHECK(total == g.order());
    for (ElemIndex i = 0; i < g.order(); ++i) {
      if (cp.parent[i] == i) continue;
      CHECK(g.conjugate(g.element(cp.parent[i]), g.generators()[cp.via[i]]) == g.element(i));
    }
  }
}

TEST_CASE("subgroup closure") {
  Group s3 = make_symmetric(3);
  PermutationArithmetic ar(3);
  CHECK(subgroup_closure(s3, std::vector<Element>{ar.from_cycles({{1, 2, 3}})}).order() == 3);
  CHECK(subgroup_closure(s3, std::vector<Element>{}).order() == 1);

  Ex4Instance ex = make_ex4(7, 3, 19);
  // independent count: c^x = c^7 makes <c> normal in <x,c>, and <x> meets <c> trivially
  CHECK(ex.group.conjugate(ex.c, ex.x) == ex.group.power(ex.c, 7));
  const std::uint64_t expected = brute_order(*ex.arith, ex.x) * brute_order(*ex.arith, ex.c);
  CHECK(ex.D.order() == expected);
  CHECK(ex.D.order() == 171);
}
