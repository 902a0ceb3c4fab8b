#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxcat/fincat.hpp"

namespace laxcat {

class FinPreord;
using PreordPtr = std::shared_ptr<const FinPreord>;

/// A finite preorder: named elements with a reflexive, transitive relation.
/// The relation is validated, not repaired; use preorder_closure to build one
/// from generating pairs.
class FinPreord {
 public:
  static PreordPtr validated(std::string name, std::vector<std::string> elements,
                             std::vector<char> leq, const Caps& caps = Caps{}) {
    auto p = std::shared_ptr<FinPreord>(new FinPreord());
    p->name_ = std::move(name);
    p->elems_ = std::move(elements);
    p->leq_ = std::move(leq);
    const int n = p->size();
    if (n > caps.max_objects)
      throw SizeCapExceeded("preorder '" + p->name_ + "' has " + std::to_string(n) +
                            " elements, cap is " + std::to_string(caps.max_objects));
    if (p->leq_.size() != static_cast<size_t>(n) * n)
      throw ValidationError("NotAPreorder", "relation of '" + p->name_ + "' has the wrong shape");
    for (const auto& e : p->elems_)
      if (!p->index_.emplace(e, static_cast<int>(p->index_.size())).second)
        throw ValidationError("DuplicateName", "element '" + e + "' declared twice");
    for (int i = 0; i < n; ++i)
      if (!p->leq(i, i))
        throw ValidationError("NotAPreorder", "'" + p->elems_[i] + "' is not below itself");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (p->leq(i, j) && p->leq(j, k) && !p->leq(i, k))
            throw ValidationError("NotAPreorder",
                                  "relation of '" + p->name_ + "' is not transitive at ('" +
                                      p->elems_[i] + "', '" + p->elems_[j] + "', '" + p->elems_[k] + "')");
    return p;
  }

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::string& element_name(int i) const { return elems_[i]; }
  const std::vector<std::string>& elements() const { return elems_; }
  std::optional<int> index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(int i, int j) const { return leq_[static_cast<size_t>(i) * elems_.size() + j]; }
  bool equivalent(int i, int j) const { return leq(i, j) && leq(j, i); }

  bool is_poset() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (equivalent(i, j)) return false;
    return true;
  }

  friend bool operator==(const FinPreord& x, const FinPreord& y) {
    return x.elems_ == y.elems_ && x.leq_ == y.leq_;
  }
  friend bool operator!=(const FinPreord& x, const FinPreord& y) { return !(x == y); }

 private:
  FinPreord() = default;
  std::string name_;
  std::vector<std::string> elems_;
  std::vector<char> leq_;
  std::map<std::string, int> index_;
};

/// Reflexive-transitive closure of the given pairs.
inline PreordPtr preorder_closure(std::string name, std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  const Caps& caps = Caps{}) {
  const int n = static_cast<int>(elements.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i)
    if (!idx.emplace(elements[i], i).second)
      throw ValidationError("DuplicateName", "element '" + elements[i] + "' declared twice");
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (const auto& [a, b] : pairs) {
    auto i = idx.find(a), j = idx.find(b);
    if (i == idx.end() || j == idx.end())
      throw ValidationError("UnknownElement", "pair ('" + a + "', '" + b + "') names an unknown element");
    leq[static_cast<size_t>(i->second) * n + j->second] = 1;
  }
  for (int k = 0; k < n; ++k)  // Warshall
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<size_t>(k) * n + j]) leq[static_cast<size_t>(i) * n + j] = 1;
  return FinPreord::validated(std::move(name), std::move(elements), std::move(leq), caps);
}

/// A monotone map between finite preorders.
class MonotoneMap {
 public:
  static MonotoneMap validated(PreordPtr src, PreordPtr tgt, std::vector<int> map,
                               std::string name = "") {
    MonotoneMap f(std::move(src), std::move(tgt), std::move(map), std::move(name));
    const FinPreord& X = *f.src_;
    const FinPreord& Y = *f.tgt_;
    if (static_cast<int>(f.map_.size()) != X.size())
      throw NotMonotone("map '" + f.name_ + "' does not cover its source");
    for (int x : f.map_)
      if (x < 0 || x >= Y.size())
        throw NotMonotone("map '" + f.name_ + "' leaves its target");
    for (int i = 0; i < X.size(); ++i)
      for (int j = 0; j < X.size(); ++j)
        if (X.leq(i, j) && !Y.leq(f.map_[i], f.map_[j]))
          throw NotMonotone("map '" + f.name_ + "' breaks the order at ('" + X.element_name(i) +
                            "', '" + X.element_name(j) + "')");
    return f;
  }

  const FinPreord& source() const { return *src_; }
  const FinPreord& target() const { return *tgt_; }
  const PreordPtr& source_ptr() const { return src_; }
  const PreordPtr& target_ptr() const { return tgt_; }
  const std::string& name() const { return name_; }
  int at(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  friend bool operator==(const MonotoneMap& f, const MonotoneMap& g) {
    return *f.src_ == *g.src_ && *f.tgt_ == *g.tgt_ && f.map_ == g.map_;
  }
  friend bool operator!=(const MonotoneMap& f, const MonotoneMap& g) { return !(f == g); }

 private:
  MonotoneMap(PreordPtr src, PreordPtr tgt, std::vector<int> map, std::string name)
      : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(map)), name_(std::move(name)) {}
  PreordPtr src_, tgt_;
  std::vector<int> map_;
  std::string name_;
};

inline MonotoneMap named_monotone(const PreordPtr& X, const PreordPtr& Y,
                                  const std::map<std::string, std::string>& assignments,
                                  std::string name = "") {
  std::vector<int> map(X->size(), -1);
  for (const auto& [from, to] : assignments) {
    auto i = X->index(from);
    auto j = Y->index(to);
    if (!i || !j) throw NotMonotone("map '" + name + "' names unknown elements");
    map[*i] = *j;
  }
  for (int i = 0; i < X->size(); ++i)
    if (map[i] == -1) throw NotMonotone("map '" + name + "' misses '" + X->element_name(i) + "'");
  return MonotoneMap::validated(X, Y, std::move(map), std::move(name));
}

inline MonotoneMap identity_monotone(const PreordPtr& X) {
  std::vector<int> map(X->size());
  for (int i = 0; i < X->size(); ++i) map[i] = i;
  return MonotoneMap::validated(X, X, std::move(map), "id_" + X->name());
}

/// g after f.
inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target() != g.source())
    throw ShapeMismatch("cannot compose '" + f.name() + "' and '" + g.name() + "'");
  std::vector<int> map(f.source().size());
  for (int i = 0; i < f.source().size(); ++i) map[i] = g.at(f.at(i));
  return MonotoneMap::validated(f.source_ptr(), g.target_ptr(), std::move(map),
                                g.name() + "*" + f.name());
}

inline std::vector<MonotoneMap> enumerate_monotone(const PreordPtr& X, const PreordPtr& Y,
                                                   const Caps& caps = Caps{}) {
  std::vector<MonotoneMap> out;
  std::vector<int> map(X->size(), 0);
  std::int64_t budget = caps.search_budget;
  auto ok_up_to = [&](int upto) {
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j)
        if (X->leq(i, j) && !Y->leq(map[i], map[j])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    detail::bump_budget(budget, "monotone map");
    if (i == X->size()) {
      out.push_back(MonotoneMap::validated(X, Y, map));
      return;
    }
    for (int y = 0; y < Y->size(); ++y) {
      map[i] = y;
      if (ok_up_to(i)) self(self, i + 1);
    }
  };
  if (Y->size() == 0 && X->size() > 0) return out;
  rec(rec, 0);
  return out;
}

/// The thin category on a preorder: one morphism le(x,y) per related pair.
inline CatPtr as_category(const FinPreord& X, const Caps& caps = Caps{}) {
  CatBuilder b(X.name());
  auto le = [&](int i, int j) {
    return "le(" + X.element_name(i) + "," + X.element_name(j) + ")";
  };
  for (int i = 0; i < X.size(); ++i) b.object(X.element_name(i));
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j) {
      if (!X.leq(i, j)) continue;
      if (i == j) b.identity(X.element_name(i), le(i, i));
      else b.morphism(le(i, j), X.element_name(i), X.element_name(j));
    }
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      for (int k = 0; k < X.size(); ++k)
        if (X.leq(i, j) && X.leq(j, k)) b.compose(le(i, j), le(j, k), le(i, k));
  return b.build(caps);
}

/// Inverse of as_category on thin categories; rejects anything with parallel
/// morphisms.
inline PreordPtr as_preord(const FinCat& C, const Caps& caps = Caps{}) {
  const int n = C.num_objects();
  std::vector<std::string> elems(n);
  for (ObjId a = 0; a < n; ++a) elems[a] = C.object_name(a);
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const auto& hom = C.hom(a, b);
      if (hom.size() > 1)
        throw NotThin("category '" + C.name() + "' has parallel morphisms '" +
                      C.mor(hom[0]).name + "' and '" + C.mor(hom[1]).name + "'");
      leq[static_cast<size_t>(a) * n + b] = !hom.empty();
    }
  return FinPreord::validated(C.name(), std::move(elems), std::move(leq), caps);
}

/// The functor between thin categories induced by a monotone map.
inline FinFunctor as_functor(const MonotoneMap& f, const Caps& caps = Caps{}) {
  CatPtr X = as_category(f.source(), caps);
  CatPtr Y = as_category(f.target(), caps);
  std::vector<ObjId> omap(f.source().size());
  std::vector<MorId> mmap(X->num_morphisms());
  for (int i = 0; i < f.source().size(); ++i) omap[i] = f.at(i);
  for (MorId m = 0; m < X->num_morphisms(); ++m) {
    ObjId a = X->src(m), b = X->dst(m);
    mmap[m] = Y->hom(f.at(a), f.at(b)).at(0);
  }
  return FinFunctor::validated(X, Y, std::move(omap), std::move(mmap), f.name());
}

struct OrderVerdict {
  bool value = false;
  std::optional<int> witness;  // offending target element
  explicit operator bool() const { return value; }
};

/// In the order-enriched world a monotone map is a lax epimorphism exactly
/// when every target element is equivalent to something in the image.
inline OrderVerdict is_lax_epi_preord(const MonotoneMap& f) {
  const FinPreord& Y = f.target();
  for (int b = 0; b < Y.size(); ++b) {
    bool hit = false;
    for (int a = 0; a < f.source().size() && !hit; ++a) hit = Y.equivalent(b, f.at(a));
    if (!hit) return {false, b};
  }
  return {true, std::nullopt};
}

/// Between posets equivalence collapses to equality, so lax epi = surjective.
/// Inputs that are not posets are rejected rather than silently reinterpreted.
inline OrderVerdict is_lax_epi_pos(const MonotoneMap& f) {
  if (!f.source().is_poset())
    throw NotAntisymmetric("source '" + f.source().name() + "' is not a poset");
  if (!f.target().is_poset())
    throw NotAntisymmetric("target '" + f.target().name() + "' is not a poset");
  std::vector<char> hit(f.target().size(), 0);
  for (int a = 0; a < f.source().size(); ++a) hit[f.at(a)] = 1;
  for (int b = 0; b < f.target().size(); ++b)
    if (!hit[b]) return {false, b};
  return {true, std::nullopt};
}

inline bool is_order_embedding(const MonotoneMap& f) {
  for (int i = 0; i < f.source().size(); ++i)
    for (int j = 0; j < f.source().size(); ++j)
      if (f.source().leq(i, j) != f.target().leq(f.at(i), f.at(j))) return false;
  return true;
}

/// Lax-strong monomorphisms of preorders: order-embeddings whose image is
/// closed under equivalence.
inline bool is_lax_strong_mono_preord(const MonotoneMap& f) {
  if (!is_order_embedding(f)) return false;
  const FinPreord& Y = f.target();
  for (int b = 0; b < Y.size(); ++b) {
    bool equiv_to_image = false, in_image = false;
    for (int a = 0; a < f.source().size(); ++a) {
      if (Y.equivalent(b, f.at(a))) equiv_to_image = true;
      if (f.at(a) == b) in_image = true;
    }
    if (equiv_to_image && !in_image) return false;
  }
  return true;
}

/// Coinserter of a parallel pair f, g: X -> Y: the same carrier with the
/// order extended by f(x) <= g(x) and closed up; `arrow` is the coprojection.
struct Coinserter {
  PreordPtr object;
  MonotoneMap arrow;
};

inline Coinserter make_coinserter(const MonotoneMap& f, const MonotoneMap& g,
                                  const Caps& caps = Caps{}) {
  if (f.source() != g.source() || f.target() != g.target())
    throw ShapeMismatch("coinserter needs a parallel pair");
  const FinPreord& Y = f.target();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < Y.size(); ++i)
    for (int j = 0; j < Y.size(); ++j)
      if (Y.leq(i, j)) pairs.emplace_back(Y.element_name(i), Y.element_name(j));
  for (int x = 0; x < f.source().size(); ++x)
    pairs.emplace_back(Y.element_name(f.at(x)), Y.element_name(g.at(x)));
  PreordPtr coins = preorder_closure("coins(" + Y.name() + ")", Y.elements(), pairs, caps);
  std::vector<int> id(Y.size());
  for (int i = 0; i < Y.size(); ++i) id[i] = i;
  MonotoneMap q = MonotoneMap::validated(f.target_ptr(), coins, std::move(id), "coproj");
  return {coins, q};
}

/// One-dimensional universal property against a probe Z: maps u: Y -> Z with
/// u∘f pointwise below u∘g are exactly the maps factoring through the
/// coinserter, and the factorization is unique (here: carrier-identical).
inline bool coinserter_universal_ok(const MonotoneMap& f, const MonotoneMap& g,
                                    const Coinserter& c, const PreordPtr& Z,
                                    const Caps& caps = Caps{}) {
  auto downstairs = enumerate_monotone(f.target_ptr(), Z, caps);
  auto upstairs = enumerate_monotone(c.object, Z, caps);
  std::vector<std::vector<int>> through;
  for (const auto& v : upstairs) through.push_back(compose(c.arrow, v).map());
  for (const auto& u : downstairs) {
    bool lax = true;
    for (int x = 0; x < f.source().size() && lax; ++x)
      lax = Z->leq(u.at(f.at(x)), u.at(g.at(x)));
    int count = static_cast<int>(std::count(through.begin(), through.end(), u.map()));
    if (lax != (count == 1)) return false;
  }
  return static_cast<int>(through.size()) ==
         static_cast<int>(std::count_if(downstairs.begin(), downstairs.end(), [&](const auto& u) {
           bool lax = true;
           for (int x = 0; x < f.source().size() && lax; ++x)
             lax = Z->leq(u.at(f.at(x)), u.at(g.at(x)));
           return lax;
         }));
}

/// The comma preorder of h: X -> C and k: Y -> C: pairs (x, y) with
/// h(x) <= k(y), ordered componentwise.
struct CommaSquare {
  PreordPtr object;
  MonotoneMap pi1, pi2;
};

inline CommaSquare comma_preord(const MonotoneMap& h, const MonotoneMap& k,
                                const Caps& caps = Caps{}) {
  if (h.target() != k.target()) throw ShapeMismatch("comma needs a common target");
  const FinPreord& X = h.source();
  const FinPreord& Y = k.source();
  const FinPreord& C = h.target();
  std::vector<std::pair<int, int>> pts;
  std::vector<std::string> names;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y)
      if (C.leq(h.at(x), k.at(y))) {
        pts.emplace_back(x, y);
        names.push_back("(" + X.element_name(x) + "," + Y.element_name(y) + ")");
      }
  const int n = static_cast<int>(pts.size());
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * n + j] =
          X.leq(pts[i].first, pts[j].first) && Y.leq(pts[i].second, pts[j].second);
  PreordPtr obj = FinPreord::validated("comma(" + h.name() + "," + k.name() + ")",
                                       std::move(names), std::move(leq), caps);
  std::vector<int> m1(n), m2(n);
  for (int i = 0; i < n; ++i) {
    m1[i] = pts[i].first;
    m2[i] = pts[i].second;
  }
  MonotoneMap pi1 = MonotoneMap::validated(obj, h.source_ptr(), std::move(m1), "pi1");
  MonotoneMap pi2 = MonotoneMap::validated(obj, k.source_ptr(), std::move(m2), "pi2");
  return {obj, pi1, pi2};
}

/// Pushout of X <-f- A -g-> Y in preorders: glue along the images, transport
/// both orders, close up.
struct PreordPushout {
  PreordPtr object;
  MonotoneMap left;   // X -> object
  MonotoneMap right;  // Y -> object
};

inline PreordPushout pushout_preord(const MonotoneMap& f, const MonotoneMap& g,
                                    const Caps& caps = Caps{}) {
  if (f.source() != g.source()) throw ShapeMismatch("pushout needs a common source");
  const FinPreord& A = f.source();
  const FinPreord& X = f.target();
  const FinPreord& Y = g.target();
  const int nx = X.size(), ny = Y.size();

  detail::DisjointSet ds(nx + ny);
  for (int a = 0; a < A.size(); ++a) ds.unite(f.at(a), nx + g.at(a));

  std::vector<int> cls(nx + ny, -1);
  std::vector<std::vector<std::string>> members;
  for (int v = 0; v < nx + ny; ++v) {
    int root = ds.find(v);
    if (cls[root] == -1) {
      cls[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    cls[v] = cls[root];
    members[cls[v]].push_back(v < nx ? "l." + X.element_name(v) : "r." + Y.element_name(v - nx));
  }
  std::vector<std::string> names(members.size());
  for (size_t c = 0; c < members.size(); ++c) {
    std::sort(members[c].begin(), members[c].end());
    std::string n;
    for (const auto& piece : members[c]) n += (n.empty() ? "" : "|") + piece;
    names[c] = n;
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j)
      if (X.leq(i, j)) pairs.emplace_back(names[cls[i]], names[cls[j]]);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j)
      if (Y.leq(i, j)) pairs.emplace_back(names[cls[nx + i]], names[cls[nx + j]]);
  PreordPtr obj = preorder_closure("pushout(" + X.name() + "," + Y.name() + ")", names, pairs, caps);

  std::vector<int> lm(nx), rm(ny);
  for (int i = 0; i < nx; ++i) lm[i] = cls[i];
  for (int i = 0; i < ny; ++i) rm[i] = cls[nx + i];
  MonotoneMap left = MonotoneMap::validated(f.target_ptr(), obj, std::move(lm), "left");
  MonotoneMap right = MonotoneMap::validated(g.target_ptr(), obj, std::move(rm), "right");
  return {obj, left, right};
}

}  // namespace laxcat
