#include <doctest.h>

#include <numeric>
#include <set>

#include "engel/catalog.hpp"
#include "engel/connectivity.hpp"
#include "engel/error.hpp"
#include "engel/structure.hpp"

using namespace engel;

namespace {

std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("orders follow the closed forms") {
  for (unsigned n = 2; n <= 7; ++n) {
    CHECK(make_symmetric(n).order() == factorial(n));
    CHECK(make_alternating(n).order() == factorial(n) / 2);
  }
  for (unsigned n : {1u, 2u, 7u, 30u}) CHECK(make_cyclic(n).order() == n);
  for (unsigned n : {2u, 6u, 10u, 16u}) CHECK(make_dihedral(n).order() == n);
  for (unsigned n : {4u, 8u, 12u, 20u}) CHECK(make_dicyclic(n).order() == n);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const std::uint64_t Q = q;
    CHECK(make_linear(LinearKind::GL, 2, q).order() == (Q * Q - 1) * (Q * Q - Q));
    CHECK(make_linear(LinearKind::SL, 2, q).order() == Q * (Q * Q - 1));
    CHECK(make_linear(LinearKind::PSL, 2, q).order() == Q * (Q * Q - 1) / std::gcd<std::uint64_t>(2, Q - 1));
  }
  for (unsigned q : {11u, 13u, 16u, 29u, 31u, 32u}) {
    const std::uint64_t Q = q;
    CHECK(make_linear(LinearKind::PSL, 2, q).order() == Q * (Q * Q - 1) / std::gcd<std::uint64_t>(2, Q - 1));
  }
  CHECK(make_frobenius_metacyclic(19, 6).order() == 114);
  CHECK(make_frobenius_metacyclic(31, 15).order() == 465);

  for (const auto& e : std::vector<GroupSpecExpr>{{"S", {5}}, {"PSL", {2, 13}}, {"Frob", {13, 12}}, {"Q", {24}},
                                                  {"D", {12}}, {"GL", {2, 4}}})
    CHECK(make_group(e).order() == expected_order(e));
  CHECK(expected_order({"Sz", {8}}) == 8ull * 8 * (8 * 8 + 1) * (8 - 1));
}

TEST_CASE("the dicyclic group has a unique involution") {
  Group q = make_dicyclic(12);
  int involutions = 0;
  for (const auto& a : q.elements()) involutions += q.elem_order(a) == 2;
  CHECK(involutions == 1);
  Group d = make_dihedral(12);
  involutions = 0;
  for (const auto& a : d.elements()) involutions += d.elem_order(a) == 2;
  CHECK(involutions == 7);
}

TEST_CASE("PSL(2,4) and A5 give the same graph data") {
  AnalysisOptions o;
  o.diameters = true;
  Analysis a = analyze(make_linear(LinearKind::PSL, 2, 4), GraphMode::gamma(), o);
  Analysis b = analyze(make_alternating(5), GraphMode::gamma(), o);
  CHECK(a.order == 60);
  CHECK(a.vertex_count == b.vertex_count);
  CHECK(a.edge_count == b.edge_count);
  CHECK(a.scc_count == b.scc_count);
  CHECK(a.verdict == b.verdict);
  CHECK(a.undirected.text() == b.undirected.text());
  CHECK(a.directed.text() == b.directed.text());
  std::multiset<std::size_t> sa, sb;
  Group psl = make_linear(LinearKind::PSL, 2, 4), a5 = make_alternating(5);
  for (const auto& m : psl.classes().members) sa.insert(m.size());
  for (const auto& m : a5.classes().members) sb.insert(m.size());
  CHECK(sa == sb);
}

TEST_CASE("Sz(8)") {
  Group sz = make_suzuki(8);
  CHECK(sz.order() == 29120);
  std::set<std::uint32_t> orders(sz.element_orders().begin(), sz.element_orders().end());
  CHECK(orders == std::set<std::uint32_t>{1, 2, 4, 5, 7, 13});
  CHECK(sylow(sz, 2).order() == 64);
  CHECK(center(sz).order() == 1);
}

TEST_CASE("Frobenius metacyclic groups") {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{5, 4}, {7, 3}, {19, 6}, {13, 12}}) {
    Group g = make_frobenius_metacyclic(p, d);
    CHECK(g.order() == p * d);
    auto v = is_frobenius(g);
    CHECK(v.frobenius);
    REQUIRE(v.kernel);
    CHECK(v.kernel->order() == p);
  }
  CHECK_THROWS_AS(make_frobenius_metacyclic(9, 2), InvalidArgument);
  CHECK_THROWS_AS(make_frobenius_metacyclic(7, 4), InvalidArgument);
}

TEST_CASE("Ex4 handles") {
  Ex4Instance ex = make_ex4(7, 3, 19);
  CHECK(ex.group.order() == 117649ull * 19 * 9);
  CHECK(ex.f_order == 117649);
  CHECK(ex.group.elem_order(ex.x) == 9);
  CHECK(ex.group.elem_order(ex.c) == 19);
  CHECK(ex.D.order() == 171);
  CHECK(ex.C.order() == 19);
  CHECK(ex.FC.order() == 343);
  CHECK(ex.group.conjugate(ex.c, ex.x) == ex.group.power(ex.c, 7));
  CHECK(ex.group.conjugate(ex.c, ex.x) != ex.c);
  for (const auto& f : ex.f_basis) {
    CHECK(ex.in_F(f));
    CHECK(ex.group.contains(f));
    CHECK(ex.group.elem_order(f) == 7);
  }
  // F is normal and abelian
  for (const auto& a : ex.f_basis) {
    for (const auto& b : ex.f_basis) CHECK(ex.group.mul(a, b) == ex.group.mul(b, a));
    for (const auto& s : ex.group.generators()) CHECK(ex.in_F(ex.group.conjugate(a, s)));
  }
  Group fcd = ex.fc_d();
  CHECK(fcd.order() == 343 * 171);
  CHECK(is_frobenius(fcd).frobenius);
}

TEST_CASE("Ex4 constraints") {
  CHECK_THROWS_AS(make_ex4(8, 7, 73), InvalidArgument);   // even q
  CHECK_THROWS_AS(make_ex4(7, 2, 19), InvalidArgument);   // r too small
  CHECK_THROWS_AS(make_ex4(7, 4, 19), InvalidArgument);   // r not prime
  CHECK_THROWS_AS(make_ex4(11, 3, 19), InvalidArgument);  // r does not divide q-1
  CHECK_THROWS_AS(make_ex4(19, 3, 7), InvalidArgument);   // r^2 divides q-1
  CHECK_THROWS_AS(make_ex4(7, 3, 5), InvalidArgument);    // t does not divide (q^r-1)/(q-1)
  CHECK_THROWS_AS(make_ex4(7, 3, 20), InvalidArgument);   // t not prime
  Limits small = default_limits();
  small.max_order_stream = 1000000;
  CHECK_THROWS_AS(make_ex4(7, 3, 19, small), CapExceeded);
}

TEST_CASE("invalid catalog inputs") {
  CHECK_THROWS_AS(make_group({"D", {7}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"Q", {6}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"S", {10}}), CapExceeded);
  CHECK_THROWS_AS(make_group({"A", {1}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"Sz", {32}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"PSL", {2, 6}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"PSL", {3, 5}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"PSL", {2, 37}}), CapExceeded);
  CHECK_THROWS_AS(make_group({"C", {0}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"PSL", {2}}), InvalidArgument);
  CHECK_THROWS_AS(make_group({"Mystery", {2}}), InvalidArgument);
  Limits small = default_limits();
  small.max_order_stored = 300;
  CHECK_THROWS_AS(make_group({"A", {6}}, small), CapExceeded);
}
