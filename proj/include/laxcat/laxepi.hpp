#pragma once

#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "laxcat/fincat.hpp"

namespace laxcat {

/// An object of the comma category of g: b -> c over F: a triple (h, a, k)
/// with h: b -> F(a), k: F(a) -> c and k after h equal to g.  Ordered
/// lexicographically by (h, a, k); the least member of a connected component
/// is its canonical representative.
struct CommaTriple {
  MorId h = -1;
  ObjId a = -1;
  MorId k = -1;
  friend bool operator==(const CommaTriple& x, const CommaTriple& y) {
    return x.h == y.h && x.a == y.a && x.k == y.k;
  }
  friend bool operator<(const CommaTriple& x, const CommaTriple& y) {
    if (x.h != y.h) return x.h < y.h;
    if (x.a != y.a) return x.a < y.a;
    return x.k < y.k;
  }
};

/// A component of a comma category, identified by its index in canonical
/// order plus the canonical (least) representative triple.
struct ComponentId {
  int index = -1;
  CommaTriple representative;
  friend bool operator==(const ComponentId& x, const ComponentId& y) {
    return x.index == y.index && x.representative == y.representative;
  }
  friend bool operator!=(const ComponentId& x, const ComponentId& y) { return !(x == y); }
};

/// One step of a zig-zag: the edge (from, to, f) traversed forward or
/// backward.
struct ZigZagStep {
  int from = -1;
  int to = -1;
  MorId f = -1;
  bool forward = true;
};
using ZigZag = std::vector<ZigZagStep>;

/// The comma category g-over-F materialized: objects are the factorizations
/// of g through F-images, a morphism (h,a,k) -> (h',a',k') is any f: a -> a'
/// with F(f) after h equal to h' and k' after F(f) equal to k.  Identity
/// self-loops are left implicit; everything else is stored as an edge.
class CommaOverMorphism {
 public:
  CommaOverMorphism(FinFunctor F, MorId g) : F_(std::move(F)), g_(g) {
    const FinCat& A = F_.source();
    const FinCat& B = F_.target();
    ObjId b = B.src(g), c = B.dst(g);
    for (ObjId a = 0; a < A.num_objects(); ++a)
      for (MorId h : B.hom(b, F_.on_obj(a)))
        for (MorId k : B.hom(F_.on_obj(a), c))
          if (B.compose(h, k) == g_) objects_.push_back({h, a, k});
    std::sort(objects_.begin(), objects_.end());

    detail::DisjointSet ds(static_cast<int>(objects_.size()));
    for (size_t i = 0; i < objects_.size(); ++i)
      for (size_t j = 0; j < objects_.size(); ++j)
        for (MorId f : A.hom(objects_[i].a, objects_[j].a)) {
          if (A.is_identity(f)) continue;  // implicit self-loop
          if (B.compose(objects_[i].h, F_.on_mor(f)) == objects_[j].h &&
              B.compose(F_.on_mor(f), objects_[j].k) == objects_[i].k) {
            edges_.push_back({static_cast<int>(i), static_cast<int>(j), f});
            ds.unite(static_cast<int>(i), static_cast<int>(j));
          }
        }

    comp_.assign(objects_.size(), -1);
    for (size_t i = 0; i < objects_.size(); ++i) {
      int root = ds.find(static_cast<int>(i));
      if (comp_[root] == -1) {
        comp_[root] = n_components_++;
        reps_.push_back(objects_[i]);  // least index in the component, hence least triple
      }
      comp_[i] = comp_[root];
    }
  }

  const FinFunctor& functor() const { return F_; }
  MorId over() const { return g_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_components() const { return n_components_; }
  bool empty() const { return objects_.empty(); }
  bool connected() const { return n_components_ == 1; }
  const CommaTriple& object(int i) const { return objects_[i]; }
  const std::vector<CommaTriple>& objects() const { return objects_; }

  struct Edge {
    int from, to;
    MorId f;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> find_object(const CommaTriple& t) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), t);
    if (it == objects_.end() || !(*it == t)) return std::nullopt;
    return static_cast<int>(it - objects_.begin());
  }

  ComponentId component_at(int obj) const { return {comp_[obj], reps_[comp_[obj]]}; }

  ComponentId component_of(const CommaTriple& t) const {
    auto i = find_object(t);
    if (!i) throw InternalCheckFailed("triple is not an object of this comma category");
    return component_at(*i);
  }

  ComponentId component(int index) const { return {index, reps_[index]}; }

  /// All objects lying in the given component, ascending.
  std::vector<int> members(int component_index) const {
    std::vector<int> out;
    for (size_t i = 0; i < objects_.size(); ++i)
      if (comp_[i] == component_index) out.push_back(static_cast<int>(i));
    return out;
  }

  /// Shortest undirected path from x to y, or nullopt when they lie in
  /// different components.  Replayable: each step names the edge and its
  /// direction.
  std::optional<ZigZag> zigzag(int x, int y) const {
    if (comp_[x] != comp_[y]) return std::nullopt;
    std::vector<int> prev_edge(objects_.size(), -1), prev_node(objects_.size(), -1);
    std::vector<char> seen(objects_.size(), 0);
    std::queue<int> q;
    q.push(x);
    seen[x] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == y) break;
      for (size_t e = 0; e < edges_.size(); ++e) {
        int v = -1;
        if (edges_[e].from == u) v = edges_[e].to;
        else if (edges_[e].to == u) v = edges_[e].from;
        else continue;
        if (seen[v]) continue;
        seen[v] = 1;
        prev_edge[v] = static_cast<int>(e);
        prev_node[v] = u;
        q.push(v);
      }
    }
    ZigZag path;
    for (int v = y; v != x; v = prev_node[v]) {
      const Edge& e = edges_[prev_edge[v]];
      bool forward = e.to == v;
      path.push_back({forward ? e.from : e.to, v, e.f, forward});
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Re-plays a zig-zag against the stored structure.
  bool zigzag_valid(int x, int y, const ZigZag& path) const {
    int at = x;
    for (const auto& step : path) {
      if (step.from != at) return false;
      bool found = false;
      for (const auto& e : edges_) {
        int f = step.forward ? step.from : step.to;
        int t = step.forward ? step.to : step.from;
        if (e.from == f && e.to == t && e.f == step.f) {
          found = true;
          break;
        }
      }
      if (!found) return false;
      at = step.to;
    }
    return at == y;
  }

 private:
  FinFunctor F_;
  MorId g_;
  std::vector<CommaTriple> objects_;
  std::vector<Edge> edges_;
  std::vector<int> comp_;
  std::vector<CommaTriple> reps_;
  int n_components_ = 0;
};

/// Lazily materializes all comma categories over one functor, keyed by the
/// base morphism.  Shared by the split/fibration machinery, which revisits
/// the same commas many times.
class CommaFamily {
 public:
  explicit CommaFamily(FinFunctor F) : F_(std::move(F)) {}

  const FinFunctor& functor() const { return F_; }

  const CommaOverMorphism& at(MorId g) const {
    auto it = cache_.find(g);
    if (it == cache_.end())
      it = cache_.emplace(g, std::make_shared<CommaOverMorphism>(F_, g)).first;
    return *it->second;
  }

 private:
  FinFunctor F_;
  mutable std::map<MorId, std::shared_ptr<CommaOverMorphism>> cache_;
};

/// Component translated along precomposition: for t: d -> b and a component
/// C of g-over-F, the image of any representative (r, a, s) under
/// (r, a, s) |-> (r after t, a, s) lands in (g after t)-over-F; the component
/// hit does not depend on the representative (re-checked here with a second
/// member when one exists).
inline ComponentId precompose_component(const CommaOverMorphism& source, const ComponentId& C,
                                        MorId t, const CommaOverMorphism& target) {
  const FinCat& B = source.functor().target();
  if (B.compose(t, source.over()) != target.over())
    throw ShapeMismatch("precomposition target comma is over the wrong morphism");
  auto push = [&](const CommaTriple& r) {
    return target.component_of({B.compose(t, r.h), r.a, r.k});
  };
  ComponentId out = push(C.representative);
  auto members = source.members(C.index);
  if (members.size() > 1 && !(push(source.object(members[1])) == out))
    throw InternalCheckFailed("precomposition image depends on the representative");
  return out;
}

/// Component translated along postcomposition by u: c -> d, via
/// (r, a, s) |-> (r, a, u after s).
inline ComponentId postcompose_component(const CommaOverMorphism& source, const ComponentId& C,
                                         MorId u, const CommaOverMorphism& target) {
  const FinCat& B = source.functor().target();
  if (B.compose(source.over(), u) != target.over())
    throw ShapeMismatch("postcomposition target comma is over the wrong morphism");
  auto push = [&](const CommaTriple& r) {
    return target.component_of({r.h, r.a, B.compose(r.k, u)});
  };
  ComponentId out = push(C.representative);
  auto members = source.members(C.index);
  if (members.size() > 1 && !(push(source.object(members[1])) == out))
    throw InternalCheckFailed("postcomposition image depends on the representative");
  return out;
}

/// Why a functor fails to be a lax epimorphism: the base morphism whose comma
/// category is empty, or a pair of canonical representatives of two distinct
/// components when it is disconnected.
struct LaxEpiWitness {
  MorId g = -1;
  bool empty = false;
  std::optional<std::pair<CommaTriple, CommaTriple>> split_pair;
};

struct LaxEpiVerdict {
  bool value = false;
  std::optional<LaxEpiWitness> witness;
  explicit operator bool() const { return value; }
};

/// F is a lax epimorphism iff for every morphism g of the target the comma
/// category g-over-F is nonempty and connected.
inline LaxEpiVerdict is_lax_epi(const FinFunctor& F) {
  CommaFamily commas(F);
  const FinCat& B = F.target();
  for (MorId g = 0; g < B.num_morphisms(); ++g) {
    const CommaOverMorphism& comma = commas.at(g);
    if (comma.empty()) return {false, LaxEpiWitness{g, true, std::nullopt}};
    if (!comma.connected())
      return {false, LaxEpiWitness{g, false,
                                   std::make_pair(comma.component(0).representative,
                                                  comma.component(1).representative)}};
  }
  return {true, std::nullopt};
}

}  // namespace laxcat
