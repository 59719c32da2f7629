#include "grpiso/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>

#include "grpiso/error.hpp"

namespace grpiso {

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Element y : images_) {
    if (y >= images_.size() || hit[y])
      throw Error(Errc::NotPermutation, "image sequence is not a bijection");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return Permutation(Trusted{}, std::move(id));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x]] = static_cast<Element>(x);
  return Permutation(Trusted{}, std::move(inv));
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.size() != b.size())
    throw Error(Errc::DomainMismatch, "permutations of different degree");
  std::vector<Element> c(a.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    c[x] = a.images_[b.images_[x]];
  return Permutation(Permutation::Trusted{}, std::move(c));
}

// Deterministic Schreier-Sims. Level k stabilizes base[0..k-1]; its
// generators generate the level group on their own and every Schreier
// generator of level k is pushed into level k+1 unless it already sifts.
struct PermGroup::Chain {
  struct Level {
    Element base;
    std::vector<Permutation> gens;
    std::vector<int> slot; // point -> index into trans, or -1
    std::vector<Permutation> trans;
    std::vector<Permutation> trans_inv;
  };

  std::size_t n;
  std::vector<Level> levels;

  Chain(std::size_t domain, std::span<const Permutation> generators)
      : n(domain) {
    // Base: every point moved by some generator, ascending. Points fixed by
    // all generators are fixed by the whole group.
    std::vector<bool> moved(n, false);
    for (const auto &g : generators)
      for (Element x = 0; x < n; ++x)
        if (g[x] != x)
          moved[x] = true;
    for (Element x = 0; x < n; ++x)
      if (moved[x]) {
        Level lv{x, {}, std::vector<int>(n, -1), {}, {}};
        lv.slot[x] = 0;
        lv.trans.push_back(Permutation::identity(n));
        lv.trans_inv.push_back(Permutation::identity(n));
        levels.push_back(std::move(lv));
      }
    for (const auto &g : generators)
      if (!is_member(0, g))
        add(0, g);
  }

  bool is_member(std::size_t from, Permutation g) const {
    for (std::size_t k = from; k < levels.size(); ++k) {
      const Level &lv = levels[k];
      const int s = lv.slot[g[lv.base]];
      if (s < 0)
        return false;
      g = lv.trans_inv[s] * g;
    }
    return g.is_identity();
  }

  void add(std::size_t k, const Permutation &g) {
    levels[k].gens.push_back(g);
    const std::size_t known = levels[k].trans.size();
    for (std::size_t i = 0; i < known; ++i)
      update(k, g * levels[k].trans[i]);
  }

  void update(std::size_t k, const Permutation &t) {
    Level &lv = levels[k];
    const Element x = t[lv.base];
    const int s = lv.slot[x];
    if (s >= 0) {
      Permutation h = levels[k].trans_inv[s] * t;
      if (!h.is_identity() && !is_member(k + 1, h))
        add(k + 1, h);
      return;
    }
    levels[k].slot[x] = static_cast<int>(levels[k].trans.size());
    levels[k].trans.push_back(t);
    levels[k].trans_inv.push_back(t.inverse());
    for (std::size_t i = 0; i < levels[k].gens.size(); ++i)
      update(k, levels[k].gens[i] * t);
  }
};

struct PermGroup::Lazy {
  std::once_flag once;
  std::optional<Chain> chain;
};

PermGroup::PermGroup(std::size_t domain_size,
                     std::vector<Permutation> generators)
    : domain_size_(domain_size), generators_(std::move(generators)),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto &g : generators_)
    if (g.size() != domain_size_)
      throw Error(Errc::DomainMismatch,
                  "generator of degree " + std::to_string(g.size()) +
                      " in a group on " + std::to_string(domain_size_) +
                      " points");
}

const PermGroup::Chain &PermGroup::chain() const {
  std::call_once(lazy_->once,
                 [this] { lazy_->chain.emplace(domain_size_, generators_); });
  return *lazy_->chain;
}

Count PermGroup::order() const {
  Count order = 1;
  for (const auto &lv : chain().levels)
    order *= lv.trans.size();
  return order;
}

Partition PermGroup::orbits() const {
  std::vector<Element> parent(domain_size_);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : generators_)
    for (Element x = 0; x < domain_size_; ++x) {
      Element a = find(x), b = find(g[x]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  Partition blocks;
  std::vector<int> block_of(domain_size_, -1);
  for (Element x = 0; x < domain_size_; ++x) {
    const Element r = find(x);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(x);
  }
  return blocks;
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.size() != domain_size_)
    throw Error(Errc::DomainMismatch, "permutation degree does not match");
  return chain().is_member(0, p);
}

std::vector<Element> PermGroup::base() const {
  std::vector<Element> out;
  for (const auto &lv : chain().levels)
    out.push_back(lv.base);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto &lv : chain().levels)
    out.push_back(lv.trans.size());
  return out;
}

Count group_order(const PermGroup &P) { return P.order(); }
Partition orbits(const PermGroup &P) { return P.orbits(); }
bool contains(const PermGroup &P, const Permutation &p) {
  return P.contains(p);
}

} // namespace grpiso
