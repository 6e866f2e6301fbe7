#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "engel/arithmetic.hpp"
#include "engel/config.hpp"
#include "engel/element.hpp"

namespace engel {

using ElemIndex = std::uint32_t;
inline constexpr ElemIndex kNoIndex = std::numeric_limits<ElemIndex>::max();

// Bijection between [0, size) and the elements of a group.
class ElementIndexer {
 public:
  virtual ~ElementIndexer() = default;
  virtual std::uint64_t size() const = 0;
  virtual Element at(ElemIndex i) const = 0;
  // kNoIndex when `e` is not an element of the group.
  virtual ElemIndex find(const Element& e) const = 0;
  // The full table, when the group is stored.
  virtual const std::vector<Element>* table() const { return nullptr; }
};

// Sorted element table with an open-addressing hash index.
class TableIndexer final : public ElementIndexer {
 public:
  explicit TableIndexer(std::vector<Element> sorted_elements);

  std::uint64_t size() const override { return table_.size(); }
  Element at(ElemIndex i) const override { return table_[i]; }
  ElemIndex find(const Element& e) const override;
  const std::vector<Element>* table() const override { return &table_; }

 private:
  std::vector<Element> table_;
  std::vector<ElemIndex> slots_;
  std::uint64_t mask_ = 0;
};

// Conjugacy classes of a stored group. Classes are ordered by representative, and each
// representative is the class member with the least canonical encoding (= least index).
struct ClassPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<ElemIndex> representatives;
  std::vector<std::vector<ElemIndex>> members;
  // Transport tree: element i = element(parent[i]) ^ generator(via[i]); a representative is its
  // own parent. Every parent precedes its children in `bfs_order`.
  std::vector<ElemIndex> parent;
  std::vector<std::uint16_t> via;
  std::vector<ElemIndex> bfs_order;

  std::size_t count() const { return representatives.size(); }
};

class Group {
 public:
  // Breadth-first closure of the generators, stored as a table sorted by canonical encoding.
  // Throws CapExceeded once the closure grows past limits.max_order_stored.
  static Group generate(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                       const Limits& limits = default_limits());
  // Stored group over an element list already known to be closed.
  static Group from_elements(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                             std::vector<Element> elements);
  // Group backed by a structural indexer; elements are produced on demand, never stored.
  static Group with_indexer(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                            std::shared_ptr<const ElementIndexer> indexer);

  const Arithmetic& arithmetic() const { return *impl_->arithmetic; }
  const std::shared_ptr<const Arithmetic>& arithmetic_ptr() const { return impl_->arithmetic; }
  const std::vector<Element>& generators() const { return impl_->generators; }
  std::uint64_t order() const { return impl_->indexer->size(); }
  bool stored() const { return impl_->indexer->table() != nullptr; }
  // Throws InvalidArgument for groups without a stored table.
  const std::vector<Element>& elements() const;
  Element element(ElemIndex i) const { return impl_->indexer->at(i); }
  ElemIndex index_of(const Element& e) const { return impl_->indexer->find(e); }
  bool contains(const Element& e) const { return index_of(e) != kNoIndex; }
  ElemIndex identity_index() const { return impl_->identity_index; }

  Element identity() const { return impl_->arithmetic->identity(); }
  Element mul(const Element& a, const Element& b) const { return impl_->arithmetic->mul(a, b); }
  Element inv(const Element& a) const { return impl_->arithmetic->inv(a); }
  Element commutator(const Element& a, const Element& b) const { return impl_->arithmetic->commutator(a, b); }
  Element conjugate(const Element& a, const Element& by) const { return impl_->arithmetic->conjugate(a, by); }
  Element power(const Element& a, std::int64_t e) const { return impl_->arithmetic->power(a, e); }
  std::uint64_t elem_order(const Element& a) const { return impl_->arithmetic->order(a); }
  std::string format(const Element& a) const { return impl_->arithmetic->format(a); }

  // Cached per group; computed once even under concurrent first calls.
  const std::vector<std::uint32_t>& element_orders() const;
  const ClassPartition& classes() const;
  // conjugation_action(s)[i] = index of element(i)^generator(s).
  const std::vector<ElemIndex>& conjugation_action(std::size_t generator) const;

  bool same_as(const Group& o) const { return impl_ == o.impl_; }

 private:
  struct Impl {
    std::shared_ptr<const Arithmetic> arithmetic;
    std::vector<Element> generators;
    std::shared_ptr<const ElementIndexer> indexer;
    ElemIndex identity_index = kNoIndex;

    mutable std::once_flag orders_once, classes_once, action_once;
    mutable std::vector<std::uint32_t> orders;
    mutable ClassPartition classes;
    mutable std::vector<std::vector<ElemIndex>> action;
  };
  explicit Group(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

class Subgroup {
 public:
  Subgroup(Group parent, std::vector<ElemIndex> members, std::vector<Element> generators);
  // Subgroup on a known-closed member set; a small generating set is chosen greedily.
  static Subgroup from_members(const Group& parent, std::vector<ElemIndex> members);

  const Group& parent() const { return parent_; }
  const std::vector<ElemIndex>& members() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::uint64_t order() const { return members_.size(); }
  bool contains(ElemIndex i) const;
  bool contains(const Element& e) const { return contains(parent_.index_of(e)); }
  // Membership bitmap over the parent's index range.
  std::vector<bool> mask() const;
  std::vector<Element> elements() const;
  Group as_group() const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

 private:
  Group parent_;
  std::vector<ElemIndex> members_;
  std::vector<Element> generators_;
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);

// Least subgroup of g containing the seeds. Throws CapExceeded past limits.max_order_stored.
Subgroup subgroup_closure(const Group& g, std::span<const Element> seeds, const Limits& limits = default_limits());
// Exact centralizer by scanning every element (stored or streaming).
Subgroup centralizer(const Group& g, const Element& a);
// {h : a^h in <a>}.
Subgroup normalizer_of_cyclic(const Group& g, const Element& a);
// Orbits of the conjugation action; stored groups only.
const ClassPartition& conjugacy_classes(const Group& g);

// Indices of the elements of g that satisfy pred, found by a parallel scan.
std::vector<ElemIndex> scan_elements(const Group& g, const std::function<bool(const Element&)>& pred);

}  // namespace engel
