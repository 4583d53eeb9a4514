#ifndef MULAMBDA_GROUP_HPP
#define MULAMBDA_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "perm.hpp"

namespace mulambda {

struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string &what) : std::runtime_error(what) {}
};

inline constexpr std::size_t k_default_element_cap = 100000;

namespace detail {

struct perm_hash {
  std::size_t operator()(const Perm &p) const {
    // FNV-1a over the image bytes
    std::uint64_t h = 1469598103934665603ull;
    for (point x : p.images()) {
      h ^= static_cast<std::uint64_t>(x & 0xff);
      h *= 1099511628211ull;
      h ^= static_cast<std::uint64_t>(x >> 8);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace detail

// A finite permutation group with its element set fully enumerated.
// Elements are kept sorted, so equal groups have identical element tables.
class Group {
public:
  Group() : degree_(1) { elems_.push_back(Perm::identity(1)); }

  static Group trivial(std::size_t degree) {
    Group g;
    g.degree_ = degree;
    g.elems_ = {Perm::identity(degree)};
    g.gens_.clear();
    return g;
  }

  // smallest element set containing the generators and the identity,
  // closed under composition
  static Group close(std::vector<Perm> generators,
                     std::size_t element_cap = k_default_element_cap) {
    if (generators.empty())
      throw std::invalid_argument("close: empty generator list; use trivial()");
    std::size_t deg = generators[0].degree();
    for (const Perm &g : generators)
      if (g.degree() != deg)
        throw std::invalid_argument("close: generators of mixed degree");

    std::unordered_map<Perm, std::uint32_t, detail::perm_hash> seen;
    std::vector<Perm> order;
    Perm id = Perm::identity(deg);
    seen.emplace(id, 0);
    order.push_back(id);
    std::size_t head = 0;
    while (head < order.size()) {
      Perm cur = order[head++];
      for (const Perm &g : generators) {
        Perm nxt = compose(cur, g);
        if (seen.emplace(nxt, static_cast<std::uint32_t>(order.size())).second) {
          if (order.size() + 1 > element_cap)
            throw cap_exceeded("close: element cap " + std::to_string(element_cap) +
                               " exceeded");
          order.push_back(std::move(nxt));
        }
      }
    }
    std::sort(order.begin(), order.end());
    Group grp;
    grp.degree_ = deg;
    grp.gens_ = std::move(generators);
    grp.elems_ = std::move(order);
    return grp;
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm> &elements() const { return elems_; }
  const std::vector<Perm> &generators() const { return gens_; }

  const Perm &element(std::size_t rank) const { return elems_[rank]; }

  bool contains(const Perm &p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

  // rank of p in the sorted element table; throws if absent
  std::uint32_t rank_of(const Perm &p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || *it != p)
      throw std::invalid_argument("rank_of: element not in group");
    return static_cast<std::uint32_t>(it - elems_.begin());
  }

  bool is_subgroup_of(const Group &other) const {
    if (degree_ != other.degree_) return false;
    if (other.order() % order() != 0) return false;
    for (const Perm &p : elems_)
      if (!other.contains(p)) return false;
    return true;
  }

  friend bool operator==(const Group &a, const Group &b) {
    return a.degree_ == b.degree_ && a.elems_ == b.elems_;
  }

  // {g in G : H^g = H}; requires H <= G
  Group normalizer(const Group &h) const {
    if (!h.is_subgroup_of(*this))
      throw std::invalid_argument("normalizer: H is not contained in G");
    std::vector<Perm> members;
    for (const Perm &g : elems_) {
      Perm gi = g.inverse();
      bool ok = true;
      const std::vector<Perm> &hgens = h.gens_.empty() ? h.elems_ : h.gens_;
      for (const Perm &x : hgens) {
        if (!h.contains(compose(gi, compose(x, g)))) { ok = false; break; }
      }
      if (ok) members.push_back(g);
    }
    return from_sorted_elements(degree_, std::move(members));
  }

  Group conjugate(const Perm &g) const {
    if (g.degree() != degree_)
      throw std::invalid_argument("conjugate: degree mismatch");
    Perm gi = g.inverse();
    std::vector<Perm> members;
    members.reserve(elems_.size());
    for (const Perm &x : elems_) members.push_back(compose(gi, compose(x, g)));
    std::sort(members.begin(), members.end());
    return from_sorted_elements(degree_, std::move(members));
  }

  Group intersect(const Group &other) const {
    if (degree_ != other.degree_)
      throw std::invalid_argument("intersect: degree mismatch");
    std::vector<Perm> members;
    std::set_intersection(elems_.begin(), elems_.end(),
                          other.elems_.begin(), other.elems_.end(),
                          std::back_inserter(members));
    return from_sorted_elements(degree_, std::move(members));
  }

  // [G : H], exact by Lagrange
  std::size_t index(const Group &h) const {
    if (!h.is_subgroup_of(*this))
      throw std::invalid_argument("index: H is not contained in G");
    return order() / h.order();
  }

  // normal closure in *this of the commutators of generator pairs
  Group derived_subgroup(std::size_t element_cap = k_default_element_cap) const {
    if (gens_.empty()) return trivial(degree_);
    std::vector<Perm> seed;
    for (const Perm &a : gens_)
      for (const Perm &b : gens_) {
        Perm c = compose(compose(a, b).inverse(), compose(b, a));
        if (!c.is_identity()) seed.push_back(c);
      }
    if (seed.empty()) return trivial(degree_);
    return normal_closure(seed, element_cap);
  }

  // smallest normal subgroup of *this containing the given elements
  Group normal_closure(std::vector<Perm> seed,
                       std::size_t element_cap = k_default_element_cap) const {
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    Group n = close(seed, element_cap);
    for (;;) {
      std::vector<Perm> added;
      for (const Perm &g : gens_) {
        Perm gi = g.inverse();
        for (const Perm &x : seed) {
          Perm c = compose(gi, compose(x, g));
          if (!n.contains(c)) added.push_back(c);
        }
      }
      if (added.empty()) return n;
      seed.insert(seed.end(), added.begin(), added.end());
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      n = close(seed, element_cap);
    }
  }

  bool is_solvable(std::size_t element_cap = k_default_element_cap) const {
    Group d = *this;
    for (;;) {
      Group next = d.derived_subgroup(element_cap);
      if (next.order() == 1) return true;
      if (next.order() == d.order()) return false;
      d = std::move(next);
    }
  }

  bool is_abelian() const {
    for (const Perm &a : gens_)
      for (const Perm &b : gens_)
        if (compose(a, b) != compose(b, a)) return false;
    return true;
  }

  Group center() const {
    std::vector<Perm> members;
    for (const Perm &x : elems_) {
      bool ok = true;
      for (const Perm &g : gens_)
        if (compose(x, g) != compose(g, x)) { ok = false; break; }
      if (ok) members.push_back(x);
    }
    return from_sorted_elements(degree_, std::move(members));
  }

  // assemble a subgroup from an already closed, sorted element list;
  // recovers a small generating set by greedy extension
  static Group from_sorted_elements(std::size_t degree, std::vector<Perm> elems) {
    Group g;
    g.degree_ = degree;
    g.elems_ = std::move(elems);
    std::vector<Perm> small;
    Group cur = trivial(degree);
    for (const Perm &p : g.elems_) {
      if (p.is_identity() || cur.contains(p)) continue;
      small.push_back(p);
      cur = close(small, g.elems_.size() + 1);
      if (cur.order() == g.elems_.size()) break;
    }
    if (cur.order() != g.elems_.size())
      throw std::invalid_argument("from_sorted_elements: list is not a subgroup");
    g.gens_ = std::move(small);
    return g;
  }

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

} // namespace mulambda

#endif
