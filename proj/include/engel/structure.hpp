#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "engel/group.hpp"

namespace engel {

// Z_0 = 1 < Z_1 < ... < Z_m = Z_m+1 = Z_inf(G).
struct CentralSeries {
  std::vector<Subgroup> terms;
  const Subgroup& hypercenter() const { return terms.back(); }
};

Subgroup center(const Group& g);
// Z_{i+1} = {h : [h, s] in Z_i for every generator s}. Works on stored and streaming groups.
CentralSeries upper_central_series(const Group& g);
Subgroup hypercenter(const Group& g);

// A Sylow p-subgroup, grown from a p-element by adjoining p-elements that normalize the current
// subgroup. The seed fixes the choices made along the way.
Subgroup sylow(const Group& g, std::uint64_t p, std::uint64_t seed = 0);
// Largest normal p-subgroup: the intersection of the conjugates of a Sylow p-subgroup.
Subgroup p_core(const Group& g, std::uint64_t p);
Subgroup fitting(const Group& g);

Subgroup normal_closure(const Group& g, std::span<const Element> seeds);
Subgroup derived_subgroup(const Group& g);

bool is_nilpotent(const Group& g);
bool is_nilpotent(const Subgroup& s);
// Nilpotency class, or nullopt for non-nilpotent groups.
std::optional<unsigned> nilpotency_class(const Group& g);
bool is_soluble(const Group& g);
bool is_soluble(const Subgroup& s);

struct FrobeniusVerdict {
  bool frobenius = false;
  std::optional<Subgroup> kernel;
};
// The only kernel candidate is F(G): G is Frobenius iff 1 < F(G) < G and C_G(k) <= F(G) for
// every non-identity k in F(G).
FrobeniusVerdict is_frobenius(const Group& g);

// Left Engel elements {y : every x reaches [x,_n y] = 1} and right Engel elements
// {x : every y gives [x,_n y] = 1}, by evaluating eng() on pairs. Up to `exhaustive_limit`
// every candidate is checked against every element; above it one candidate per conjugacy class
// is checked and its class is taken whole.
std::vector<ElemIndex> left_engel_set(const Group& g, std::uint64_t exhaustive_limit = 2000);
std::vector<ElemIndex> right_engel_set(const Group& g, std::uint64_t exhaustive_limit = 2000);

struct PrimeGraph {
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q, sorted
  std::vector<std::vector<std::uint64_t>> components;          // sorted by least prime
};
PrimeGraph prime_graph(const Group& g);

}  // namespace engel
