#include "engel/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "engel/error.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// TableIndexer

TableIndexer::TableIndexer(std::vector<Element> sorted_elements) : table_(std::move(sorted_elements)) {
  if (table_.size() >= kNoIndex) throw CapExceeded("element table too large for 32-bit indices");
  std::uint64_t cap = 16;
  while (cap < 2 * table_.size()) cap <<= 1;
  mask_ = cap - 1;
  slots_.assign(cap, kNoIndex);
  for (ElemIndex i = 0; i < table_.size(); ++i) {
    std::uint64_t h = table_[i].hash() & mask_;
    while (slots_[h] != kNoIndex) h = (h + 1) & mask_;
    slots_[h] = i;
  }
}

ElemIndex TableIndexer::find(const Element& e) const {
  std::uint64_t h = e.hash() & mask_;
  while (true) {
    ElemIndex s = slots_[h];
    if (s == kNoIndex) return kNoIndex;
    if (table_[s] == e) return s;
    h = (h + 1) & mask_;
  }
}

// ---------------------------------------------------------------------------------------------
// Group

namespace {

void check_generators(const Arithmetic& arith, const std::vector<Element>& generators) {
  for (const auto& g : generators) {
    arith.check(g);
    if (!arith.valid(g)) throw InvalidArgument("generator " + arith.format(g) + " is not a valid element");
  }
}

}  // namespace

Group Group::generate(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                      const Limits& limits) {
  check_generators(*arithmetic, generators);
  const Element id = arithmetic->identity();
  std::unordered_set<Element, ElementHash> seen{id};
  std::vector<Element> all{id};
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& s : generators) {
      Element next = arithmetic->mul(all[head], s);
      if (seen.insert(next).second) {
        all.push_back(next);
        if (all.size() > limits.max_order_stored)
          throw CapExceeded("group order exceeds stored-table cap " + std::to_string(limits.max_order_stored));
      }
    }
  }
  return from_elements(std::move(arithmetic), std::move(generators), std::move(all));
}

Group Group::from_elements(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                           std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto indexer = std::make_shared<TableIndexer>(std::move(elements));
  return with_indexer(std::move(arithmetic), std::move(generators), std::move(indexer));
}

Group Group::with_indexer(std::shared_ptr<const Arithmetic> arithmetic, std::vector<Element> generators,
                          std::shared_ptr<const ElementIndexer> indexer) {
  check_generators(*arithmetic, generators);
  auto impl = std::make_shared<Impl>();
  impl->arithmetic = std::move(arithmetic);
  impl->generators = std::move(generators);
  impl->indexer = std::move(indexer);
  impl->identity_index = impl->indexer->find(impl->arithmetic->identity());
  if (impl->identity_index == kNoIndex) throw InvalidArgument("element set does not contain the identity");
  return Group(std::move(impl));
}

const std::vector<Element>& Group::elements() const {
  const auto* t = impl_->indexer->table();
  if (t == nullptr) throw InvalidArgument("group of order " + std::to_string(order()) + " has no stored table");
  return *t;
}

const std::vector<std::uint32_t>& Group::element_orders() const {
  std::call_once(impl_->orders_once, [this] {
    const auto& table = elements();
    impl_->orders.assign(table.size(), 0);
    parallel_for(table.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) impl_->orders[i] = static_cast<std::uint32_t>(elem_order(table[i]));
    });
  });
  return impl_->orders;
}

const std::vector<ElemIndex>& Group::conjugation_action(std::size_t generator) const {
  std::call_once(impl_->action_once, [this] {
    const auto& table = elements();
    const auto& gens = generators();
    impl_->action.assign(gens.size(), std::vector<ElemIndex>(table.size(), kNoIndex));
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element sinv = inv(gens[s]);
      auto& act = impl_->action[s];
      parallel_for(table.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) act[i] = index_of(mul(mul(sinv, table[i]), gens[s]));
      });
    }
  });
  return impl_->action.at(generator);
}

const ClassPartition& Group::classes() const {
  std::call_once(impl_->classes_once, [this] {
    const auto& table = elements();
    const std::size_t n = table.size();
    const std::size_t ngens = generators().size();
    ClassPartition& cp = impl_->classes;
    cp.class_of.assign(n, std::numeric_limits<std::uint32_t>::max());
    cp.parent.assign(n, kNoIndex);
    cp.via.assign(n, 0);
    cp.bfs_order.clear();
    cp.bfs_order.reserve(n);
    for (ElemIndex start = 0; start < n; ++start) {
      if (cp.class_of[start] != std::numeric_limits<std::uint32_t>::max()) continue;
      const auto id = static_cast<std::uint32_t>(cp.representatives.size());
      cp.representatives.push_back(start);
      cp.members.emplace_back();
      auto& mem = cp.members.back();
      cp.class_of[start] = id;
      cp.parent[start] = start;
      std::size_t head = cp.bfs_order.size();
      cp.bfs_order.push_back(start);
      while (head < cp.bfs_order.size()) {
        ElemIndex cur = cp.bfs_order[head++];
        mem.push_back(cur);
        for (std::size_t s = 0; s < ngens; ++s) {
          ElemIndex nxt = conjugation_action(s)[cur];
          if (cp.class_of[nxt] == std::numeric_limits<std::uint32_t>::max()) {
            cp.class_of[nxt] = id;
            cp.parent[nxt] = cur;
            cp.via[nxt] = static_cast<std::uint16_t>(s);
            cp.bfs_order.push_back(nxt);
          }
        }
      }
      std::sort(mem.begin(), mem.end());
    }
  });
  return impl_->classes;
}

// ---------------------------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(Group parent, std::vector<ElemIndex> members, std::vector<Element> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(ElemIndex i) const {
  return i != kNoIndex && std::binary_search(members_.begin(), members_.end(), i);
}

std::vector<bool> Subgroup::mask() const {
  std::vector<bool> m(parent_.order(), false);
  for (auto i : members_) m[i] = true;
  return m;
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (auto i : members_) out.push_back(parent_.element(i));
  return out;
}

Group Subgroup::as_group() const { return Group::from_elements(parent_.arithmetic_ptr(), generators_, elements()); }

namespace {

// Closure of `seeds` inside g, as sorted parent indices; nullopt-free: throws on cap.
std::vector<ElemIndex> closure_indices(const Group& g, std::span<const Element> seeds, std::uint64_t cap) {
  std::unordered_set<ElemIndex> seen{g.identity_index()};
  std::vector<Element> frontier{g.identity()};
  std::vector<ElemIndex> out{g.identity_index()};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (const auto& s : seeds) {
      Element next = g.mul(frontier[head], s);
      ElemIndex idx = g.index_of(next);
      if (idx == kNoIndex) throw InvalidArgument("seed " + g.format(s) + " is not an element of the group");
      if (seen.insert(idx).second) {
        frontier.push_back(next);
        out.push_back(idx);
        if (out.size() > cap) throw CapExceeded("subgroup closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup Subgroup::from_members(const Group& parent, std::vector<ElemIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Element> gens;
  std::vector<ElemIndex> span{parent.identity_index()};
  for (ElemIndex m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    gens.push_back(parent.element(m));
    span = closure_indices(parent, gens, std::numeric_limits<std::uint64_t>::max());
  }
  if (span != members) throw InvalidArgument("member set is not closed under multiplication");
  return Subgroup(parent, std::move(members), std::move(gens));
}

Subgroup whole_group(const Group& g) {
  std::vector<ElemIndex> all(g.order());
  for (ElemIndex i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(g, std::move(all), g.generators());
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {g.identity_index()}, {}); }

Subgroup subgroup_closure(const Group& g, std::span<const Element> seeds, const Limits& limits) {
  std::uint64_t cap = g.stored() ? limits.max_order_stored : limits.max_order_stream;
  std::vector<Element> gens;
  for (const auto& s : seeds)
    if (s != g.identity()) gens.push_back(s);
  auto members = closure_indices(g, gens, cap);
  return Subgroup(g, std::move(members), std::move(gens));
}

std::vector<ElemIndex> scan_elements(const Group& g, const std::function<bool(const Element&)>& pred) {
  const std::size_t n = g.order();
  const unsigned threads = default_limits().thread_count();
  std::vector<std::vector<ElemIndex>> parts(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  parallel_for(
      threads,
      [&](std::size_t b, std::size_t e) {
        for (std::size_t t = b; t < e; ++t) {
          std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
          for (std::size_t i = lo; i < hi; ++i)
            if (pred(g.element(static_cast<ElemIndex>(i)))) parts[t].push_back(static_cast<ElemIndex>(i));
        }
      },
      threads);
  std::vector<ElemIndex> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Subgroup centralizer(const Group& g, const Element& a) {
  g.arithmetic().check(a);
  auto members = scan_elements(g, [&](const Element& h) { return g.mul(h, a) == g.mul(a, h); });
  return Subgroup::from_members(g, std::move(members));
}

Subgroup normalizer_of_cyclic(const Group& g, const Element& a) {
  g.arithmetic().check(a);
  std::vector<Element> powers{g.identity()};
  for (Element cur = a; cur != g.identity(); cur = g.mul(cur, a)) powers.push_back(cur);
  std::sort(powers.begin(), powers.end());
  auto members = scan_elements(
      g, [&](const Element& h) { return std::binary_search(powers.begin(), powers.end(), g.conjugate(a, h)); });
  return Subgroup::from_members(g, std::move(members));
}

const ClassPartition& conjugacy_classes(const Group& g) { return g.classes(); }

}  // namespace engel
