#include "engel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "engel/connectivity.hpp"
#include "engel/engel.hpp"
#include "engel/error.hpp"
#include "engel/parser.hpp"
#include "engel/structure.hpp"

namespace engel {

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "core") return Suite::core;
  if (name == "extended") return Suite::extended;
  if (name == "nightly") return Suite::nightly;
  if (name == "full") return Suite::full;
  return std::nullopt;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

std::vector<GroupSpecExpr> weak_connectivity_corpus() {
  return {{"S", {4}},      {"S", {5}},      {"S", {6}},       {"S", {7}},       {"A", {5}},      {"A", {6}},
          {"A", {7}},      {"GL", {2, 3}},  {"SL", {2, 3}},   {"PSL", {2, 4}},  {"PSL", {2, 5}}, {"PSL", {2, 7}},
          {"PSL", {2, 8}}, {"PSL", {2, 9}}, {"PSL", {2, 11}}, {"PSL", {2, 13}}, {"Frob", {19, 6}}, {"D", {6}},
          {"D", {10}},     {"D", {12}},     {"Q", {12}},      {"Q", {20}}};
}

std::vector<GroupSpecExpr> small_corpus() {
  return {{"S", {3}},      {"S", {4}},     {"S", {5}},     {"A", {4}},     {"A", {5}},      {"GL", {2, 3}},
          {"SL", {2, 3}},  {"PSL", {2, 7}}, {"D", {6}},     {"D", {8}},     {"D", {10}},     {"D", {12}},
          {"Q", {8}},      {"Q", {12}},    {"C", {6}},     {"Frob", {5, 4}}, {"Frob", {7, 3}}, {"Frob", {19, 6}},
          {"Frob", {13, 12}}};
}

std::vector<GroupSpecExpr> medium_corpus() {
  auto v = small_corpus();
  for (GroupSpecExpr e : std::vector<GroupSpecExpr>{{"S", {6}},
                                                    {"A", {6}},
                                                    {"PSL", {2, 8}},
                                                    {"PSL", {2, 9}},
                                                    {"PSL", {2, 11}},
                                                    {"PSL", {2, 13}},
                                                    {"SL", {2, 5}},
                                                    {"GL", {2, 5}},
                                                    {"Frob", {31, 15}},
                                                    {"Q", {24}}})
    v.push_back(e);
  return v;
}

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(int criterion, std::string title) : start_(Clock::now()) {
    r_.criterion = criterion;
    r_.title = std::move(title);
  }
  bool check(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    all_ &= ok;
    return ok;
  }
  void note(const std::string& what) { r_.details.push_back("     " + what); }
  void inconclusive(const std::string& why) {
    inconclusive_ = true;
    r_.details.push_back("???  " + why);
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  CheckResult finish() {
    r_.outcome = !all_ ? Outcome::fail : inconclusive_ ? Outcome::inconclusive : Outcome::pass;
    r_.seconds = elapsed();
    return std::move(r_);
  }

 private:
  CheckResult r_;
  bool all_ = true, inconclusive_ = false;
  Clock::time_point start_;
};

std::string label(const GroupSpecExpr& e) { return print_group_expr(e); }

std::string graph_label(const GroupSpecExpr& e, const GraphMode& m) {
  std::string mode = m.kind == GraphMode::Kind::gamma    ? "Gamma"
                     : m.kind == GraphMode::Kind::gamma_n ? "Gamma_" + std::to_string(m.n)
                     : m.kind == GraphMode::Kind::lambda  ? "Lambda"
                                                          : "Delta";
  return mode + "(" + label(e) + ")";
}

// Strong connectivity claim for one instance.
void expect_strong(Recorder& rec, const GroupSpecExpr& e, const GraphMode& m, bool expected) {
  Group g = make_group(e);
  Analysis a = analyze(g, m);
  rec.check(a.strongly_connected == expected, graph_label(e, m) + (a.strongly_connected ? " strongly connected" : " not strongly connected") +
                                                  " (" + std::to_string(a.scc_count) + " strong components on " +
                                                  std::to_string(a.vertex_count) + " vertices)");
}

ElemIndex first_of_order(const Group& g, std::uint32_t order) {
  const auto& orders = g.element_orders();
  for (ElemIndex i = 0; i < orders.size(); ++i)
    if (orders[i] == order) return i;
  throw Error("no element of order " + std::to_string(order));
}

// ---------------------------------------------------------------------------------------------

CheckResult weak_connectivity(Suite) {
  Recorder rec(1, "Gamma(G) is weakly connected with undirected diameter at most 10");
  for (const auto& e : weak_connectivity_corpus()) {
    Group g = make_group(e);
    AnalysisOptions o;
    o.diameters = true;
    Analysis a = analyze(g, GraphMode::gamma(), o);
    if (a.vertex_count == 0) {
      rec.check(false, "Gamma(" + label(e) + ") unexpectedly empty");
      continue;
    }
    const bool ok = a.weakly_connected && a.undirected.value && *a.undirected.value <= 10;
    rec.check(ok, "Gamma(" + label(e) + "): " + std::to_string(a.vertex_count) + " vertices, weakly connected = " +
                      (a.weakly_connected ? "yes" : "no") + ", undirected diameter " + a.undirected.text());
  }
  return rec.finish();
}

CheckResult frobenius_disconnection(Suite) {
  Recorder rec(2, "Frobenius groups: no edge leaves the kernel, Gamma not strongly connected");
  for (GroupSpecExpr e : std::vector<GroupSpecExpr>{{"Frob", {19, 6}}, {"Frob", {5, 4}}, {"S", {3}}, {"A", {4}}}) {
    Group g = make_group(e);
    FrobeniusVerdict v = is_frobenius(g);
    if (!rec.check(v.frobenius, label(e) + " is Frobenius" + (v.kernel ? " with kernel of order " + std::to_string(v.kernel->order()) : "")))
      continue;
    const auto kmask = v.kernel->mask();
    std::uint64_t bad = 0, pairs = 0;
    for (auto k : v.kernel->members()) {
      if (k == g.identity_index()) continue;
      for (ElemIndex h = 0; h < g.order(); ++h) {
        if (kmask[h]) continue;
        ++pairs;
        if (eng(g, g.element(k), g.element(h)).adjacent) ++bad;
      }
    }
    rec.check(bad == 0, label(e) + ": " + std::to_string(pairs) + " kernel-to-outside pairs, " + std::to_string(bad) + " edges");
    Analysis a = analyze(g, GraphMode::gamma());
    rec.check(!a.strongly_connected, "Gamma(" + label(e) + ") has " + std::to_string(a.scc_count) + " strong components");
  }
  return rec.finish();
}

CheckResult alternating(Suite) {
  Recorder rec(3, "Alternating groups: Gamma(A5), Gamma_2(A6) disconnected; Gamma_3(A6), Gamma_2(A7) strongly connected");
  expect_strong(rec, {"A", {5}}, GraphMode::gamma(), false);
  expect_strong(rec, {"A", {6}}, GraphMode::gamma_n(2), false);
  expect_strong(rec, {"A", {6}}, GraphMode::gamma_n(3), true);
  expect_strong(rec, {"A", {7}}, GraphMode::gamma_n(2), true);
  return rec.finish();
}

CheckResult symmetric(Suite suite) {
  Recorder rec(4, "Symmetric groups: Gamma_2(S_n) strongly connected");
  std::vector<unsigned> ns{5, 6};
  if (suite != Suite::core) ns.push_back(7);
  for (auto n : ns) expect_strong(rec, {"S", {n}}, GraphMode::gamma_n(2), true);
  return rec.finish();
}

CheckResult gl23(Suite) {
  Recorder rec(5, "GL(2,3): hypercenter, Gamma_2/Gamma_3 threshold, out-neighbours of an order-3 element");
  const GroupSpecExpr e{"GL", {2, 3}};
  Group g = make_group(e);
  Subgroup z = center(g), zi = hypercenter(g);
  rec.check(z == zi && zi.order() == 2, "Z(G) = Z_inf(G) of order " + std::to_string(zi.order()));
  expect_strong(rec, e, GraphMode::gamma_n(3), true);
  expect_strong(rec, e, GraphMode::gamma_n(2), false);

  const Element x = g.element(first_of_order(g, 3));
  VertexSet vs = vertex_set(g, GraphMode::gamma());
  auto out = out_neighbors(g, vs, x, GraphMode::gamma());
  rec.check(out.size() == 9, "x of order 3 has " + std::to_string(out.size()) + " non-central out-neighbours");
  std::size_t order4 = 0, order4_exact = 0;
  for (auto y : out) {
    const Element ye = g.element(y);
    if (g.elem_order(ye) != 4) continue;
    ++order4;
    const Arithmetic& ar = g.arithmetic();
    if (ar.is_identity(engel_word(ar, x, ye, 3)) && !ar.is_identity(engel_word(ar, x, ye, 2))) ++order4_exact;
  }
  rec.check(order4 == 6 && order4_exact == 6, std::to_string(order4) + " of them have order 4, " +
                                                   std::to_string(order4_exact) + " with [x,3 g] = 1 and [x,2 g] != 1");
  return rec.finish();
}

CheckResult psl_even(Suite suite) {
  Recorder rec(6, "PSL(2,2^f): Gamma not strongly connected");
  std::vector<unsigned> qs{4, 8};
  if (suite != Suite::core) qs.push_back(16);
  for (auto q : qs) expect_strong(rec, {"PSL", {2, q}}, GraphMode::gamma(), false);
  return rec.finish();
}

CheckResult psl_odd(Suite suite) {
  Recorder rec(7, "PSL(2,p), p odd: Gamma strongly connected iff p != 5 mod 8");
  for (unsigned p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
    if (suite == Suite::core && p > 13) continue;
    expect_strong(rec, {"PSL", {2, p}}, GraphMode::gamma(), p % 8 != 5);
  }
  return rec.finish();
}

CheckResult suzuki(Suite) {
  Recorder rec(8, "Sz(8): vertices reachable from an order-13 element all have order 13");
  Group g = make_suzuki(8);
  rec.check(g.order() == 29120, "Sz(8) has order " + std::to_string(g.order()));
  const Element x = g.element(first_of_order(g, 13));
  VertexSet vs = vertex_set(g, GraphMode::gamma());
  Ball b = ball(g, vs, GraphMode::gamma(), x, std::numeric_limits<unsigned>::max(), BallDirection::out_of);
  std::size_t outside = 0;
  for (auto m : b.members)
    if (13 % g.element_orders()[m] != 0) ++outside;
  rec.check(b.complete && outside == 0, "forward closure has " + std::to_string(b.members.size()) + " vertices, " +
                                            std::to_string(outside) + " of order not dividing 13");
  rec.check(b.members.size() < vs.size(), "closure is a proper subset of the " + std::to_string(vs.size()) +
                                              " vertices, so Gamma(Sz(8)) is not strongly connected");
  return rec.finish();
}

CheckResult engel_sets(Suite) {
  Recorder rec(9, "Left Engel elements = F(G), right Engel elements = Z_inf(G)");
  for (const auto& e : medium_corpus()) {
    Group g = make_group(e);
    auto left = left_engel_set(g, 2000), right = right_engel_set(g, 2000);
    auto f = fitting(g).members(), z = hypercenter(g).members();
    rec.check(left == f && right == z, label(e) + ": |left| = " + std::to_string(left.size()) + ", |F| = " +
                                           std::to_string(f.size()) + ", |right| = " + std::to_string(right.size()) +
                                           ", |Z_inf| = " + std::to_string(z.size()));
  }
  return rec.finish();
}

CheckResult ex4_structure(Suite) {
  Recorder rec(10, "Ex4(7,3,19): order, x, c and centralizers, [F,C]D Frobenius");
  Ex4Instance ex = make_ex4(7, 3, 19);
  const Group& g = ex.group;
  const Arithmetic& ar = g.arithmetic();
  rec.check(g.order() == 20117979, "|G| = " + std::to_string(g.order()));
  rec.check(g.elem_order(ex.x) == 9, "|x| = " + std::to_string(g.elem_order(ex.x)));
  const Element xr = g.power(ex.x, ex.r);
  rec.check(g.elem_order(xr) == 3, "|x^r| = " + std::to_string(g.elem_order(xr)));
  std::uint64_t fixed = 0;
  const std::uint32_t Q = ex.arith->field().size();
  for (std::uint32_t v1 = 0; v1 < Q; ++v1)
    for (std::uint32_t v2 = 0; v2 < Q; ++v2) {
      if (v1 == 0 && v2 == 0) continue;
      const Element v = ex.arith->translation(v1, v2);
      if (g.conjugate(v, xr) == v) ++fixed;
    }
  rec.check(fixed == 0, "x^r fixes " + std::to_string(fixed) + " non-zero vectors of F");
  const Element cx = g.conjugate(ex.c, ex.x), cq = g.power(ex.c, ex.q);
  rec.check(cx == cq && cx != ex.c, "c^x = c^q and c^x != c");
  rec.check(ar.mul(ex.z, ex.c) == ar.mul(ex.c, ex.z), "z and c commute");

  Subgroup cx_cent = centralizer(g, ex.x);
  Subgroup x_cyclic = subgroup_closure(g, std::vector<Element>{ex.x});
  rec.check(cx_cent == x_cyclic, "C_G(x) = <x>, order " + std::to_string(cx_cent.order()));
  Subgroup cxr = centralizer(g, xr);
  rec.check(cxr == ex.D, "C_G(x^r) = D, order " + std::to_string(cxr.order()));

  Group fcd = ex.fc_d();
  rec.check(fcd.order() == 58653, "|[F,C]D| = " + std::to_string(fcd.order()));
  FrobeniusVerdict v = is_frobenius(fcd);
  rec.check(v.frobenius && v.kernel && v.kernel->order() == 343,
            std::string("[F,C]D is ") + (v.frobenius ? "Frobenius with kernel of order " + std::to_string(v.kernel->order()) : "not Frobenius"));
  return rec.finish();
}

CheckResult ex4_balls(Suite) {
  Recorder rec(11, "Ex4(7,3,19): B1(x) = <x> - 1, B2(x) = D - 1, some [F,C] element outside B3(x)");
  constexpr double kBudgetSeconds = 4 * 3600;
  Ex4Instance ex = make_ex4(7, 3, 19);
  const Group& g = ex.group;
  VertexSet vs(g.order(), hypercenter(g).members());
  rec.check(vs.removed().size() == 1, "Z_inf(G) has order " + std::to_string(vs.removed().size()));

  Ball b1 = ball(g, vs, GraphMode::gamma(), ex.x, 1, BallDirection::into);
  std::vector<ElemIndex> xs;
  const Subgroup x_cyclic = subgroup_closure(g, std::vector<Element>{ex.x});
  for (auto i : x_cyclic.members())
    if (i != g.identity_index()) xs.push_back(i);
  rec.check(b1.members == xs, "|B1(x)| = " + std::to_string(b1.members.size()));
  if (rec.elapsed() > kBudgetSeconds) {
    rec.inconclusive("time budget exhausted after B1");
    return rec.finish();
  }

  Ball b2 = ball(g, vs, GraphMode::gamma(), ex.x, 2, BallDirection::into);
  std::vector<ElemIndex> ds;
  for (auto i : ex.D.members())
    if (i != g.identity_index()) ds.push_back(i);
  rec.check(b2.members == ds, "|B2(x)| = " + std::to_string(b2.members.size()));
  if (rec.elapsed() > kBudgetSeconds) {
    rec.inconclusive("time budget exhausted after B2");
    return rec.finish();
  }

  // B3 = B2 together with every vertex that has an edge into B2.
  ElemIndex yi = kNoIndex;
  for (auto i : ex.FC.members())
    if (i != g.identity_index()) {
      yi = i;
      break;
    }
  const Element y = g.element(yi);
  bool outside = !std::binary_search(b2.members.begin(), b2.members.end(), yi);
  for (auto d : b2.members) outside = outside && !eng(g, y, g.element(d)).adjacent;
  rec.check(outside, "y = " + g.format(y) + " in [F,C] has no edge into B2(x), so y is not in B3(x)");
  return rec.finish();
}

CheckResult permutation_identities(Suite) {
  Recorder rec(12, "Permutation identities for 3-cycles and transpositions");
  for (int n = 6; n <= 12; ++n) {
    PermutationArithmetic ar(static_cast<std::size_t>(n));
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    const Element a = ar.from_cycles({{1, 3, 5}}), s = ar.from_cycles({full});
    const Element lhs = ar.mul(ar.mul(ar.mul(a, s), ar.inv(a)), ar.inv(s));
    const Element rhs = ar.from_cycles({{1, 3, 5}, {2, n, 4}});
    rec.check(lhs == rhs, "n = " + std::to_string(n) + ": (1,3,5)(1..n)(1,3,5)^-1(1..n)^-1 = " + ar.format(lhs));
  }
  for (int m = 4; m <= 10; ++m) {
    PermutationArithmetic ar(static_cast<std::size_t>(m));
    std::vector<int> full;
    for (int i = 1; i <= m; ++i) full.push_back(i);
    const Element t = ar.from_cycles({{1, 3}}), s = ar.from_cycles({full});
    const Element lhs = ar.mul(ar.mul(ar.mul(t, s), t), ar.inv(s));
    const Element rhs = ar.from_cycles({{1, 3}, {2, m}});
    const bool engel2 = ar.is_identity(ar.commutator(ar.commutator(s, t), t));
    rec.check(lhs == rhs && engel2, "m = " + std::to_string(m) + ": (1,3)(1..m)(1,3)(1..m)^-1 = " + ar.format(lhs) +
                                        ", [(1..m),(1,3),(1,3)] " + (engel2 ? "= 1" : "!= 1"));
  }
  return rec.finish();
}

// Canonical form of a partition: each vertex labelled by the least vertex of its block.
std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& comp) {
  std::vector<std::uint32_t> least(comp.size(), std::numeric_limits<std::uint32_t>::max()), out(comp.size());
  for (std::uint32_t v = 0; v < comp.size(); ++v) least[comp[v]] = std::min(least[comp[v]], v);
  for (std::uint32_t v = 0; v < comp.size(); ++v) out[v] = least[comp[v]];
  return out;
}

CheckResult properties(Suite) {
  Recorder rec(13, "Evaluator, equivariance, monotonicity and condensation properties");

  // eng against direct evaluation of [x,_n y]
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    const Arithmetic& ar = g.arithmetic();
    const auto& el = g.elements();
    const std::size_t n = el.size();
    std::uint64_t mismatches = 0, long_trails = 0;
    std::vector<char> hit(n + 1);
    for (const auto& x : el)
      for (const auto& y : el) {
        Element z = x;
        std::size_t first = 0;
        for (std::size_t k = 1; k <= n && !first; ++k) {
          z = ar.commutator(z, y);
          if (ar.is_identity(z)) first = k;
        }
        EngelTrace t = eng(ar, x, y);
        if (t.trail_length > n) ++long_trails;
        if (t.adjacent != (first != 0)) ++mismatches;
        if (t.adjacent && t.trail_length != first) ++mismatches;
        for (unsigned b = 1; b <= 10; ++b)
          if (engel_edge(ar, x, y, GraphMode::gamma_n(b)) != (first != 0 && first <= b)) ++mismatches;
        if (engel_edge(ar, x, y, GraphMode::gamma_n(1)) != engel_edge(ar, y, x, GraphMode::gamma_n(1))) ++mismatches;
      }
    rec.check(mismatches == 0 && long_trails == 0, label(e) + ": " + std::to_string(n * n) + " pairs against direct evaluation, " +
                                                       std::to_string(mismatches) + " mismatches");
  }

  // conjugation equivariance on random triples
  {
    std::mt19937_64 rng(20240601);
    auto corpus = small_corpus();
    std::vector<Group> groups;
    for (const auto& e : corpus) groups.push_back(make_group(e));
    const GraphMode modes[] = {GraphMode::gamma_n(1), GraphMode::gamma_n(2), GraphMode::gamma_n(3), GraphMode::lambda()};
    std::uint64_t bad = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      const Group& g = groups[rng() % groups.size()];
      const auto& el = g.elements();
      const Element &x = el[rng() % el.size()], &y = el[rng() % el.size()], &h = el[rng() % el.size()];
      const GraphMode& m = modes[rng() % 4];
      if (engel_edge(g.arithmetic(), x, y, m) != engel_edge(g.arithmetic(), g.conjugate(x, h), g.conjugate(y, h), m)) ++bad;
    }
    rec.check(bad == 0, std::to_string(trials) + " random conjugation triples, " + std::to_string(bad) + " violations");
  }

  // Gamma_n edges inside Gamma_{n+1} edges inside Lambda edges
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    GraphOptions o;
    BitMatrix prev = engel_in_matrix(g, 1u, o);
    bool mono = true;
    for (unsigned n = 2; n <= 7 && mono; ++n) {
      BitMatrix cur = engel_in_matrix(g, n, o);
      for (std::size_t r = 0; r < cur.rows() && mono; ++r)
        for (std::size_t w = 0; w < cur.words_per_row(); ++w)
          if (prev.row(r)[w] & ~cur.row(r)[w]) mono = false;
      prev = std::move(cur);
    }
    BitMatrix all = engel_in_matrix(g, std::nullopt, o);
    for (std::size_t r = 0; r < all.rows() && mono; ++r)
      for (std::size_t w = 0; w < all.words_per_row(); ++w)
        if (prev.row(r)[w] & ~all.row(r)[w]) mono = false;
    rec.check(mono, label(e) + ": Gamma_1 <= ... <= Gamma_7 <= Lambda edge sets");
  }

  // condensed SCCs equal plain SCCs
  for (const auto& e : medium_corpus()) {
    Group g = make_group(e);
    bool same = true;
    for (const GraphMode& m : {GraphMode::gamma(), GraphMode::gamma_n(2), GraphMode::gamma_n(3)}) {
      EngelGraph eg = build_engel_graph(g, m);
      if (eg.digraph.size() == 0) continue;
      same = same && canonical(graph_scc(eg, true).component) == canonical(graph_scc(eg, false).component);
    }
    rec.check(same, label(e) + ": condensed and plain strong components agree (Gamma, Gamma_2, Gamma_3)");
  }
  return rec.finish();
}

}  // namespace

const std::vector<CheckSpec>& claim_checks() {
  static const std::vector<CheckSpec> checks{
      {1, "weak connectivity and undirected diameter", Suite::core, weak_connectivity},
      {2, "Frobenius disconnection", Suite::core, frobenius_disconnection},
      {3, "alternating groups", Suite::core, alternating},
      {4, "symmetric groups, Gamma_2", Suite::core, symmetric},
      {5, "GL(2,3)", Suite::core, gl23},
      {6, "PSL(2,2^f) disconnection", Suite::core, psl_even},
      {7, "PSL(2,p) threshold", Suite::core, psl_odd},
      {8, "Sz(8) disconnection", Suite::extended, suzuki},
      {9, "Engel element sets", Suite::core, engel_sets},
      {10, "Ex4(7,3,19) structure", Suite::extended, ex4_structure},
      {11, "Ex4(7,3,19) balls", Suite::nightly, ex4_balls},
      {12, "permutation identities", Suite::core, permutation_identities},
      {13, "property suites", Suite::core, properties},
  };
  return checks;
}

namespace {

int rank(Suite s) {
  switch (s) {
    case Suite::core: return 0;
    case Suite::extended: return 1;
    case Suite::nightly: return 2;
    case Suite::full: return 3;
  }
  return 3;
}

CheckResult run_guarded(const CheckSpec& spec, Suite suite) {
  try {
    return spec.run(suite);
  } catch (const std::exception& ex) {
    CheckResult r;
    r.criterion = spec.criterion;
    r.title = spec.title;
    r.outcome = Outcome::fail;
    r.details.push_back(std::string("FAIL exception: ") + ex.what());
    return r;
  }
}

}  // namespace

CheckResult run_check(int criterion, Suite suite) {
  for (const auto& c : claim_checks())
    if (c.criterion == criterion) return run_guarded(c, suite);
  throw InvalidArgument("no check numbered " + std::to_string(criterion));
}

std::vector<CheckResult> run_suite(Suite suite, std::ostream* progress) {
  std::vector<CheckResult> out;
  for (const auto& c : claim_checks()) {
    if (rank(c.first_suite) > rank(suite)) continue;
    out.push_back(run_guarded(c, suite));
    if (progress) {
      const auto& r = out.back();
      *progress << "[" << outcome_name(r.outcome) << "] " << r.criterion << ". " << r.title << " (" << r.seconds << " s)\n";
      for (const auto& d : r.details) *progress << "    " << d << "\n";
      progress->flush();
    }
  }
  return out;
}

}  // namespace engel
