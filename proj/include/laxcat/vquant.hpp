#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxcat/fincat.hpp"
#include "laxcat/orders.hpp"

namespace laxcat {

class FrameV;
using FramePtr = std::shared_ptr<const FrameV>;

/// A finite frame: a distributive bounded lattice, with the Heyting arrow
/// precomputed.  Distributivity of meets over arbitrary joins is checked
/// exhaustively over all subsets, so validation cost grows as 2^n; frames are
/// meant to stay small.
class FrameV {
 public:
  static FramePtr validated(std::string name, std::vector<std::string> elements,
                            std::vector<char> leq, const Caps& caps = Caps{}) {
    auto v = std::shared_ptr<FrameV>(new FrameV());
    v->name_ = std::move(name);
    v->elems_ = std::move(elements);
    v->leq_ = std::move(leq);
    const int n = v->size();
    if (n == 0) throw NotALattice("frame '" + v->name_ + "' has no elements");
    if (n > caps.max_objects)
      throw SizeCapExceeded("frame '" + v->name_ + "' has " + std::to_string(n) +
                            " elements, cap is " + std::to_string(caps.max_objects));
    if (v->leq_.size() != static_cast<size_t>(n) * n)
      throw NotALattice("order of '" + v->name_ + "' has the wrong shape");
    for (const auto& e : v->elems_)
      if (!v->index_.emplace(e, static_cast<int>(v->index_.size())).second)
        throw NotALattice("element '" + e + "' declared twice");
    for (int i = 0; i < n; ++i)
      if (!v->leq(i, i)) throw NotALattice("'" + v->elems_[i] + "' is not below itself");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (v->leq(i, j) && v->leq(j, i) && i != j)
          throw NotALattice("'" + v->elems_[i] + "' and '" + v->elems_[j] +
                            "' are equivalent but distinct");
        for (int k = 0; k < n; ++k)
          if (v->leq(i, j) && v->leq(j, k) && !v->leq(i, k))
            throw NotALattice("order of '" + v->name_ + "' is not transitive");
      }

    auto bound = [&](int a, int b, bool lower) -> int {
      // Greatest lower / least upper bound of {a, b}, or -1.
      std::vector<int> cands;
      for (int c = 0; c < n; ++c)
        if (lower ? (v->leq(c, a) && v->leq(c, b)) : (v->leq(a, c) && v->leq(b, c)))
          cands.push_back(c);
      for (int c : cands) {
        bool extreme = true;
        for (int d : cands)
          if (lower ? !v->leq(d, c) : !v->leq(c, d)) extreme = false;
        if (extreme) return c;
      }
      return -1;
    };
    v->meet_.assign(static_cast<size_t>(n) * n, -1);
    v->join_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int m = bound(a, b, true), j = bound(a, b, false);
        if (m == -1)
          throw NotALattice("'" + v->elems_[a] + "' and '" + v->elems_[b] + "' have no meet");
        if (j == -1)
          throw NotALattice("'" + v->elems_[a] + "' and '" + v->elems_[b] + "' have no join");
        v->meet_[static_cast<size_t>(a) * n + b] = m;
        v->join_[static_cast<size_t>(a) * n + b] = j;
      }
    v->bot_ = 0;
    v->top_ = 0;
    for (int a = 1; a < n; ++a) {
      v->bot_ = v->meet(v->bot_, a);
      v->top_ = v->join(v->top_, a);
    }

    // a AND join(S) = join over S of (a AND s), for every subset S.
    std::int64_t budget = caps.search_budget;
    for (int a = 0; a < n; ++a)
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        detail::bump_budget(budget, "distributivity");
        int js = v->bot_, jm = v->bot_;
        for (int s = 0; s < n; ++s)
          if (mask & (1ul << s)) {
            js = v->join(js, s);
            jm = v->join(jm, v->meet(a, s));
          }
        if (v->meet(a, js) != jm) {
          std::string set;
          for (int s = 0; s < n; ++s)
            if (mask & (1ul << s)) set += (set.empty() ? "" : ", ") + v->elems_[s];
          throw NotDistributive("in frame '" + v->name_ + "', '" + v->elems_[a] +
                                "' does not distribute over the join of {" + set + "}");
        }
      }

    v->arrow_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int r = v->bot_;
        for (int c = 0; c < n; ++c)
          if (v->leq(v->meet(c, a), b)) r = v->join(r, c);
        v->arrow_[static_cast<size_t>(a) * n + b] = r;
        for (int c = 0; c < n; ++c)
          if (v->leq(c, r) != v->leq(v->meet(c, a), b))
            throw InternalCheckFailed("residuation failed in a distributive lattice");
      }
    return v;
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

  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * elems_.size() + b]; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * elems_.size() + b]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * elems_.size() + b]; }
  int arrow(int a, int b) const { return arrow_[static_cast<size_t>(a) * elems_.size() + b]; }
  int bottom() const { return bot_; }
  int top() const { return top_; }

  friend bool operator==(const FrameV& x, const FrameV& y) {
    return x.elems_ == y.elems_ && x.leq_ == y.leq_;
  }
  friend bool operator!=(const FrameV& x, const FrameV& y) { return !(x == y); }

 private:
  FrameV() = default;
  std::string name_;
  std::vector<std::string> elems_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_, arrow_;
  std::map<std::string, int> index_;
  int bot_ = 0, top_ = 0;
};

namespace detail {

inline FramePtr frame_from_pairs(std::string name, std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const Caps& caps) {
  PreordPtr closed = preorder_closure(name, elements, pairs, caps);
  const int n = closed->size();
  std::vector<char> leq(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[static_cast<size_t>(i) * n + j] = closed->leq(i, j);
  return FrameV::validated(std::move(name), closed->elements(), std::move(leq), caps);
}

}  // namespace detail

/// 0 < m1 < ... < 1 (n = 3 names its middle element just "m").
inline FramePtr chain_frame(int n, const Caps& caps = Caps{}) {
  std::vector<std::string> elems;
  if (n == 1) {
    elems = {"*"};
  } else {
    elems.push_back("0");
    for (int i = 1; i + 1 < n; ++i)
      elems.push_back(n == 3 ? "m" : "m" + std::to_string(i));
    elems.push_back("1");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i + 1 < elems.size(); ++i) pairs.emplace_back(elems[i], elems[i + 1]);
  return detail::frame_from_pairs("chain" + std::to_string(n), std::move(elems), pairs, caps);
}

inline FramePtr boolean_frame(const Caps& caps = Caps{}) { return chain_frame(2, caps); }

/// The four-element diamond 0 < l, r < 1; the square of the Boolean frame.
inline FramePtr diamond_frame(const Caps& caps = Caps{}) {
  return detail::frame_from_pairs("diamond", {"0", "l", "r", "1"},
                                  {{"0", "l"}, {"0", "r"}, {"l", "1"}, {"r", "1"}}, caps);
}

/// Subsets of {1..n} ordered by inclusion.
inline FramePtr powerset_frame(int n, const Caps& caps = Caps{}) {
  const int N = 1 << n;
  std::vector<std::string> elems(N);
  for (int m = 0; m < N; ++m) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (m & (1 << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    elems[m] = s + "}";
  }
  std::vector<char> leq(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) leq[static_cast<size_t>(a) * N + b] = (a & b) == a;
  return FrameV::validated("powerset" + std::to_string(n), std::move(elems), std::move(leq),
                           caps);
}

class VCat;
using VCatPtr = std::shared_ptr<const VCat>;

/// A category enriched in a frame: hom values are frame elements, identities
/// are witnessed by top, composition by meets.
class VCat {
 public:
  static VCatPtr validated(FramePtr frame, std::string name, std::vector<std::string> objects,
                           std::vector<int> hom, const Caps& caps = Caps{}) {
    auto c = std::shared_ptr<VCat>(new VCat());
    c->frame_ = std::move(frame);
    c->name_ = std::move(name);
    c->objs_ = std::move(objects);
    c->hom_ = std::move(hom);
    const int n = c->size();
    const FrameV& V = *c->frame_;
    if (n > caps.max_objects)
      throw SizeCapExceeded("enriched category '" + c->name_ + "' has " + std::to_string(n) +
                            " objects, cap is " + std::to_string(caps.max_objects));
    if (c->hom_.size() != static_cast<size_t>(n) * n)
      throw NotEnriched("hom matrix of '" + c->name_ + "' has the wrong shape");
    for (const auto& o : c->objs_)
      if (!c->index_.emplace(o, static_cast<int>(c->index_.size())).second)
        throw NotEnriched("object '" + o + "' declared twice");
    for (int h : c->hom_)
      if (h < 0 || h >= V.size()) throw NotEnriched("hom value outside the frame");
    for (int x = 0; x < n; ++x)
      if (c->hom(x, x) != V.top())
        throw NotEnriched("identity law fails at '" + c->objs_[x] + "': hom is '" +
                          V.element_name(c->hom(x, x)) + "', not top");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!V.leq(V.meet(c->hom(x, y), c->hom(y, z)), c->hom(x, z)))
            throw NotEnriched("composition law fails at ('" + c->objs_[x] + "', '" +
                              c->objs_[y] + "', '" + c->objs_[z] + "')");
    return c;
  }

  const FrameV& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(objs_.size()); }
  const std::string& object_name(int i) const { return objs_[i]; }
  const std::vector<std::string>& objects() const { return objs_; }
  std::optional<int> index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int hom(int x, int y) const { return hom_[static_cast<size_t>(x) * objs_.size() + y]; }
  const std::vector<int>& hom_matrix() const { return hom_; }

  friend bool operator==(const VCat& a, const VCat& b) {
    return *a.frame_ == *b.frame_ && a.objs_ == b.objs_ && a.hom_ == b.hom_;
  }
  friend bool operator!=(const VCat& a, const VCat& b) { return !(a == b); }

 private:
  VCat() = default;
  FramePtr frame_;
  std::string name_;
  std::vector<std::string> objs_;
  std::vector<int> hom_;
  std::map<std::string, int> index_;
};

/// Builds an enriched category from sparse hom entries; unspecified homs
/// default to top on the diagonal and bottom off it.
class VCatBuilder {
 public:
  VCatBuilder(FramePtr frame, std::string name)
      : frame_(std::move(frame)), name_(std::move(name)) {}

  VCatBuilder& object(const std::string& n) {
    objs_.push_back(n);
    return *this;
  }
  VCatBuilder& hom(const std::string& x, const std::string& y, const std::string& v) {
    entries_.push_back({x, y, v});
    return *this;
  }

  VCatPtr build(const Caps& caps = Caps{}) const {
    const int n = static_cast<int>(objs_.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx.emplace(objs_[i], i);
    std::vector<int> hom(static_cast<size_t>(n) * n, frame_->bottom());
    for (int i = 0; i < n; ++i) hom[static_cast<size_t>(i) * n + i] = frame_->top();
    for (const auto& [x, y, v] : entries_) {
      auto i = idx.find(x), j = idx.find(y);
      auto e = frame_->index(v);
      if (i == idx.end() || j == idx.end() || !e)
        throw NotEnriched("hom entry (" + x + ", " + y + ", " + v + ") names unknown data");
      hom[static_cast<size_t>(i->second) * n + j->second] = *e;
    }
    return VCat::validated(frame_, name_, objs_, std::move(hom), caps);
  }

 private:
  struct Entry {
    std::string x, y, v;
  };
  FramePtr frame_;
  std::string name_;
  std::vector<std::string> objs_;
  std::vector<Entry> entries_;
};

/// The frame as a category enriched in itself: hom(a, b) = a -> b.
inline VCatPtr v_as_vcat(const FramePtr& V, const Caps& caps = Caps{}) {
  std::vector<int> hom(static_cast<size_t>(V->size()) * V->size());
  for (int a = 0; a < V->size(); ++a)
    for (int b = 0; b < V->size(); ++b)
      hom[static_cast<size_t>(a) * V->size() + b] = V->arrow(a, b);
  return VCat::validated(V, V->name() + "_self", V->elements(), std::move(hom), caps);
}

inline VCatPtr opposite_vcat(const VCatPtr& X, const Caps& caps = Caps{}) {
  const int n = X->size();
  std::vector<int> hom(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) hom[static_cast<size_t>(x) * n + y] = X->hom(y, x);
  return VCat::validated(X->frame_ptr(), X->name() + "_op", X->objects(), std::move(hom), caps);
}

inline VCatPtr full_sub_vcat(const VCatPtr& Y, const std::vector<std::string>& objects,
                             std::string name, const Caps& caps = Caps{}) {
  std::vector<int> keep;
  for (const auto& o : objects) {
    auto i = Y->index(o);
    if (!i) throw NotEnriched("sub-category object '" + o + "' is not in '" + Y->name() + "'");
    keep.push_back(*i);
  }
  const int n = static_cast<int>(keep.size());
  std::vector<int> hom(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hom[static_cast<size_t>(i) * n + j] = Y->hom(keep[i], keep[j]);
  return VCat::validated(Y->frame_ptr(), std::move(name), objects, std::move(hom), caps);
}

class VFunctor {
 public:
  static VFunctor validated(VCatPtr src, VCatPtr tgt, std::vector<int> map,
                            std::string name = "") {
    VFunctor j(std::move(src), std::move(tgt), std::move(map), std::move(name));
    const VCat& X = *j.src_;
    const VCat& Y = *j.tgt_;
    if (X.frame() != Y.frame())
      throw NotEnriched("functor '" + j.name_ + "' crosses between different frames");
    if (static_cast<int>(j.map_.size()) != X.size())
      throw NotEnriched("functor '" + j.name_ + "' does not cover its source");
    for (int x : j.map_)
      if (x < 0 || x >= Y.size()) throw NotEnriched("functor '" + j.name_ + "' leaves its target");
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        if (!X.frame().leq(X.hom(x, y), Y.hom(j.map_[x], j.map_[y])))
          throw NotEnriched("functor '" + j.name_ + "' shrinks the hom at ('" +
                            X.object_name(x) + "', '" + X.object_name(y) + "')");
    return j;
  }

  const VCat& source() const { return *src_; }
  const VCat& target() const { return *tgt_; }
  const VCatPtr& source_ptr() const { return src_; }
  const VCatPtr& target_ptr() const { return tgt_; }
  const std::string& name() const { return name_; }
  int at(int x) const { return map_[x]; }
  const std::vector<int>& map() const { return map_; }

  friend bool operator==(const VFunctor& f, const VFunctor& g) {
    return *f.src_ == *g.src_ && *f.tgt_ == *g.tgt_ && f.map_ == g.map_;
  }
  friend bool operator!=(const VFunctor& f, const VFunctor& g) { return !(f == g); }

 private:
  VFunctor(VCatPtr src, VCatPtr tgt, std::vector<int> map, std::string name)
      : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(map)), name_(std::move(name)) {}
  VCatPtr src_, tgt_;
  std::vector<int> map_;
  std::string name_;
};

inline VFunctor named_vfunctor(const VCatPtr& X, const VCatPtr& Y,
                               const std::map<std::string, std::string>& assignments,
                               std::string name = "") {
  std::vector<int> map(X->size(), -1);
  for (const auto& [from, to] : assignments) {
    auto i = X->index(from);
    auto j = Y->index(to);
    if (!i || !j) throw NotEnriched("functor '" + name + "' names unknown objects");
    map[*i] = *j;
  }
  for (int x = 0; x < X->size(); ++x)
    if (map[x] == -1) throw NotEnriched("functor '" + name + "' misses '" + X->object_name(x) + "'");
  return VFunctor::validated(X, Y, std::move(map), std::move(name));
}

inline VFunctor identity_vfunctor(const VCatPtr& X) {
  std::vector<int> map(X->size());
  for (int i = 0; i < X->size(); ++i) map[i] = i;
  return VFunctor::validated(X, X, std::move(map), "id_" + X->name());
}

/// g after f.
inline VFunctor compose(const VFunctor& f, const VFunctor& g) {
  if (f.target() != g.source())
    throw ShapeMismatch("cannot compose '" + f.name() + "' and '" + g.name() + "'");
  std::vector<int> map(f.source().size());
  for (int i = 0; i < f.source().size(); ++i) map[i] = g.at(f.at(i));
  return VFunctor::validated(f.source_ptr(), g.target_ptr(), std::move(map),
                             g.name() + "*" + f.name());
}

/// The inclusion of a full enriched subcategory.
inline VFunctor sub_inclusion(const VCatPtr& Y, const std::vector<std::string>& objects,
                              std::string name, const Caps& caps = Caps{}) {
  VCatPtr X = full_sub_vcat(Y, objects, name + "_dom", caps);
  std::vector<int> map;
  for (const auto& o : objects) map.push_back(*Y->index(o));
  return VFunctor::validated(X, Y, std::move(map), std::move(name));
}

inline VFunctor opposite(const VFunctor& j, const Caps& caps = Caps{}) {
  return VFunctor::validated(opposite_vcat(j.source_ptr(), caps),
                             opposite_vcat(j.target_ptr(), caps), j.map(), j.name() + "_op");
}

/// All maps f: ob Y -> V with Y(y,y') AND f(y) <= f(y'), lexicographically.
inline std::vector<std::vector<int>> enumerate_vfunctors_to_v(const VCat& Y,
                                                              const Caps& caps = Caps{}) {
  const FrameV& V = Y.frame();
  std::vector<std::vector<int>> out;
  std::vector<int> f(Y.size(), 0);
  std::int64_t budget = caps.search_budget;
  auto ok = [&]() {
    for (int y = 0; y < Y.size(); ++y)
      for (int z = 0; z < Y.size(); ++z)
        if (!V.leq(V.meet(Y.hom(y, z), f[y]), f[z])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == Y.size()) {
      detail::bump_budget(budget, "enriched functor");
      if (ok()) out.push_back(f);
      return;
    }
    for (int v = 0; v < V.size(); ++v) {
      f[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// General enriched functor enumeration between two categories over one frame.
inline std::vector<VFunctor> enumerate_vfunctors(const VCatPtr& X, const VCatPtr& Y,
                                                 const Caps& caps = Caps{}) {
  if (X->frame() != Y->frame())
    throw NotEnriched("cannot enumerate functors across different frames");
  std::vector<VFunctor> out;
  std::vector<int> map(X->size(), 0);
  std::int64_t budget = caps.search_budget;
  auto ok = [&]() {
    for (int x = 0; x < X->size(); ++x)
      for (int y = 0; y < X->size(); ++y)
        if (!X->frame().leq(X->hom(x, y), Y->hom(map[x], map[y]))) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == X->size()) {
      detail::bump_budget(budget, "enriched functor");
      if (ok()) out.push_back(VFunctor::validated(X, Y, map));
      return;
    }
    for (int y = 0; y < Y->size(); ++y) {
      map[i] = y;
      self(self, i + 1);
    }
  };
  if (Y->size() == 0 && X->size() > 0) return out;
  rec(rec, 0);
  return out;
}

/// Lax epi via restriction of enriched presheaves: for every pair f, g of
/// V-functors Y -> V, the meet of arrows over all of Y must equal the meet
/// over the image of j only.
struct VMeetVerdict {
  struct Witness {
    std::vector<int> f, g;
    int full = -1, sub = -1;
  };
  bool value = false;
  std::optional<Witness> witness;
  explicit operator bool() const { return value; }
};

inline VMeetVerdict is_vlax_epi_meet(const VFunctor& j, const Caps& caps = Caps{}) {
  const VCat& Y = j.target();
  const FrameV& V = Y.frame();
  auto fs = enumerate_vfunctors_to_v(Y, caps);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      int full = V.top();
      for (int y = 0; y < Y.size(); ++y) full = V.meet(full, V.arrow(f[y], g[y]));
      int sub = V.top();
      for (int x = 0; x < j.source().size(); ++x)
        sub = V.meet(sub, V.arrow(f[j.at(x)], g[j.at(x)]));
      if (full != sub) return {false, VMeetVerdict::Witness{f, g, full, sub}};
    }
  return {true, std::nullopt};
}

/// Lax epi via the pointwise density formula: the join over source objects of
/// Y(B, jx) AND Y(jx, b) must reproduce Y(B, b) on the nose.
struct VDensityVerdict {
  struct Witness {
    int B = -1, b = -1, sup = -1, hom = -1;
  };
  bool value = false;
  std::optional<Witness> witness;
  explicit operator bool() const { return value; }
};

inline VDensityVerdict is_vlax_epi_density(const VFunctor& j) {
  const VCat& Y = j.target();
  const FrameV& V = Y.frame();
  for (int B = 0; B < Y.size(); ++B)
    for (int b = 0; b < Y.size(); ++b) {
      int sup = V.bottom();
      for (int x = 0; x < j.source().size(); ++x)
        sup = V.join(sup, V.meet(Y.hom(B, j.at(x)), Y.hom(j.at(x), b)));
      if (sup != Y.hom(B, b)) return {false, VDensityVerdict::Witness{B, b, sup, Y.hom(B, b)}};
    }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// The Boolean frame collapses enriched categories to preorders.

inline PreordPtr vcat_as_preord(const VCat& X, const Caps& caps = Caps{}) {
  if (X.frame().size() != 2)
    throw ShapeMismatch("only categories over the two-element frame are preorders");
  const int n = X.size();
  std::vector<char> leq(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      leq[static_cast<size_t>(x) * n + y] = X.hom(x, y) == X.frame().top();
  return FinPreord::validated(X.name(), X.objects(), std::move(leq), caps);
}

inline VCatPtr preord_as_vcat(const FinPreord& X, const FramePtr& two,
                              const Caps& caps = Caps{}) {
  if (two->size() != 2) throw ShapeMismatch("preorders enrich over the two-element frame");
  const int n = X.size();
  std::vector<int> hom(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      hom[static_cast<size_t>(x) * n + y] = X.leq(x, y) ? two->top() : two->bottom();
  return VCat::validated(two, X.name(), X.elements(), std::move(hom), caps);
}

inline VFunctor monotone_as_vfunctor(const MonotoneMap& f, const FramePtr& two,
                                     const Caps& caps = Caps{}) {
  return VFunctor::validated(preord_as_vcat(f.source(), two, caps),
                             preord_as_vcat(f.target(), two, caps), f.map(), f.name());
}

}  // namespace laxcat
