#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "engel/arithmetic.hpp"
#include "engel/group.hpp"

namespace engel {

// Family name plus integer arguments, e.g. PSL(2,11) = {"PSL", {2, 11}}.
struct GroupSpecExpr {
  std::string family;
  std::vector<std::int64_t> args;

  bool operator==(const GroupSpecExpr&) const = default;
};

Group make_symmetric(unsigned n, const Limits& limits = default_limits());
Group make_alternating(unsigned n, const Limits& limits = default_limits());
Group make_cyclic(unsigned n);
// Dihedral group of order n (n even).
Group make_dihedral(unsigned n);
// Dicyclic (generalized quaternion for 2-powers) group of order n, 4 | n.
Group make_dicyclic(unsigned n);

enum class LinearKind { GL, SL, PSL };
// PSL acts on the q+1 points of the projective line (point q is infinity); GL and SL are
// 2x2 matrix groups.
Group make_linear(LinearKind kind, unsigned dim, unsigned q, const Limits& limits = default_limits());
// 4x4 matrices over GF(q); only q = 8 is supported. The order is checked after generation.
Group make_suzuki(unsigned q, const Limits& limits = default_limits());
// C_p x| C_d, the generator of C_d acting as the power map by g^((p-1)/d), g the least
// primitive root mod p.
Group make_frobenius_metacyclic(unsigned p, unsigned d);

// F x| D with F = GF(q^r)^2 and D = <x, c>, acting by semilinear maps. The group is never
// stored: elements are indexed as (D index, v1, v2).
struct Ex4Instance {
  unsigned q = 0, r = 0, t = 0;
  std::shared_ptr<const SemilinearArithmetic> arith;
  Group group;
  Element x, c;
  Element z;                    // scalar of order r^2; x = z beta. Not an element of the group.
  std::vector<Element> f_basis;  // translations generating F over GF(p)
  Subgroup D, C, FC;            // <x,c>, <c>, [F,C]
  std::uint64_t f_order = 0;

  bool in_F(const Element& e) const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
  // [F,C]D as a stored group.
  Group fc_d(const Limits& limits = default_limits()) const;
};
Ex4Instance make_ex4(unsigned q, unsigned r, unsigned t, const Limits& limits = default_limits());

// Builds the group named by an expression. Ex4 is returned without its handles.
Group make_group(const GroupSpecExpr& expr, const Limits& limits = default_limits());
// Closed-form order of the family, used for self-checks.
std::uint64_t expected_order(const GroupSpecExpr& expr);

}  // namespace engel
