#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxcat/caps.hpp"
#include "laxcat/errors.hpp"

namespace laxcat {

using ObjId = int;
using MorId = int;

struct MorData {
  std::string name;
  ObjId src = -1;
  ObjId dst = -1;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// A finite category given by explicit tables.
///
/// Objects and morphisms are dense integer ids; names are carried for I/O and
/// diagnostics only.  The composition table is total on composable pairs and
/// is stored in diagrammatic order: compose(f, g) is "g after f", i.e. the
/// composite of f: a -> b followed by g: b -> c.  Instances are immutable and
/// only ever produced fully validated (identity laws, totality, and
/// associativity are all checked exhaustively at build time).
class FinCat {
 public:
  const std::string& name() const { return name_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(mors_.size()); }

  const std::string& object_name(ObjId a) const { return objects_[a]; }
  const MorData& mor(MorId f) const { return mors_[f]; }
  ObjId src(MorId f) const { return mors_[f].src; }
  ObjId dst(MorId f) const { return mors_[f].dst; }
  MorId identity(ObjId a) const { return identity_[a]; }
  bool is_identity(MorId f) const { return identity_[mors_[f].src] == f && mors_[f].src == mors_[f].dst; }

  bool composable(MorId f, MorId g) const { return mors_[f].dst == mors_[g].src; }

  /// g after f.  Precondition: composable(f, g).
  MorId compose(MorId f, MorId g) const { return table_[static_cast<size_t>(f) * mors_.size() + g]; }

  /// All morphisms a -> b, ascending by id.
  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return hom_[static_cast<size_t>(a) * objects_.size() + b]; }

  std::optional<ObjId> object_index(const std::string& n) const {
    auto it = obj_index_.find(n);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<MorId> mor_index(const std::string& n) const {
    auto it = mor_index_.find(n);
    if (it == mor_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Two-sided inverse of f, if f is an isomorphism.
  std::optional<MorId> inverse(MorId f) const {
    for (MorId g : hom(dst(f), src(f)))
      if (compose(f, g) == identity(src(f)) && compose(g, f) == identity(dst(f))) return g;
    return std::nullopt;
  }
  bool is_iso(MorId f) const { return inverse(f).has_value(); }

  bool objects_isomorphic(ObjId a, ObjId b) const {
    for (MorId f : hom(a, b))
      if (is_iso(f)) return true;
    return false;
  }

  /// Structural equality: names, tables, everything.
  friend bool operator==(const FinCat& x, const FinCat& y) {
    return x.objects_ == y.objects_ && x.mor_names_equal(y) && x.identity_ == y.identity_ &&
           x.table_ == y.table_;
  }
  friend bool operator!=(const FinCat& x, const FinCat& y) { return !(x == y); }

 private:
  friend class CatBuilder;
  FinCat() = default;

  bool mor_names_equal(const FinCat& o) const {
    if (mors_.size() != o.mors_.size()) return false;
    for (size_t i = 0; i < mors_.size(); ++i)
      if (mors_[i].name != o.mors_[i].name || mors_[i].src != o.mors_[i].src ||
          mors_[i].dst != o.mors_[i].dst)
        return false;
    return true;
  }

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<MorData> mors_;
  std::vector<MorId> identity_;   // per object
  std::vector<MorId> table_;      // m*m, -1 where not composable
  std::vector<std::vector<MorId>> hom_;  // n*n buckets
  std::map<std::string, ObjId> obj_index_;
  std::map<std::string, MorId> mor_index_;
};

/// Incremental construction of a FinCat.  build() validates everything and
/// returns an immutable category; compositions with an identity on either
/// side may be omitted (they are forced by the laws and filled in), all other
/// composable pairs must be given explicitly.
class CatBuilder {
 public:
  explicit CatBuilder(std::string name = "") : name_(std::move(name)) {}

  CatBuilder& object(const std::string& n) {
    objects_.push_back(n);
    return *this;
  }

  /// Declares n as the identity of obj (and adds it as a morphism obj -> obj).
  CatBuilder& identity(const std::string& obj, const std::string& n) {
    mors_.push_back({n, obj, obj});
    identities_.emplace_back(obj, n);
    return *this;
  }

  CatBuilder& morphism(const std::string& n, const std::string& src, const std::string& dst) {
    mors_.push_back({n, src, dst});
    return *this;
  }

  /// Records gf = g after f.
  CatBuilder& compose(const std::string& f, const std::string& g, const std::string& gf) {
    entries_.push_back({f, g, gf});
    return *this;
  }

  CatPtr build(const Caps& caps = Caps{}) const;

 private:
  struct RawMor {
    std::string name, src, dst;
  };
  struct RawEntry {
    std::string f, g, gf;
  };
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<RawMor> mors_;
  std::vector<std::pair<std::string, std::string>> identities_;
  std::vector<RawEntry> entries_;
};

inline CatPtr CatBuilder::build(const Caps& caps) const {
  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->name_ = name_;
  if (static_cast<int>(objects_.size()) > caps.max_objects)
    throw SizeCapExceeded("category '" + name_ + "' has " + std::to_string(objects_.size()) +
                          " objects, cap is " + std::to_string(caps.max_objects));
  if (static_cast<int>(mors_.size()) > caps.max_morphisms)
    throw SizeCapExceeded("category '" + name_ + "' has " + std::to_string(mors_.size()) +
                          " morphisms, cap is " + std::to_string(caps.max_morphisms));

  for (const auto& n : objects_) {
    if (!cat->obj_index_.emplace(n, static_cast<ObjId>(cat->objects_.size())).second)
      throw ValidationError("DuplicateName", "object '" + n + "' declared twice");
    cat->objects_.push_back(n);
  }
  for (const auto& m : mors_) {
    auto s = cat->object_index(m.src), d = cat->object_index(m.dst);
    if (!s) throw ValidationError("UnknownObject", "morphism '" + m.name + "' has unknown source '" + m.src + "'");
    if (!d) throw ValidationError("UnknownObject", "morphism '" + m.name + "' has unknown target '" + m.dst + "'");
    if (!cat->mor_index_.emplace(m.name, static_cast<MorId>(cat->mors_.size())).second)
      throw ValidationError("DuplicateName", "morphism '" + m.name + "' declared twice");
    cat->mors_.push_back({m.name, *s, *d});
  }

  const int n = cat->num_objects();
  const int m = cat->num_morphisms();
  cat->identity_.assign(n, -1);
  for (const auto& [obj, mor] : identities_) {
    ObjId a = *cat->object_index(obj);
    MorId f = *cat->mor_index(mor);
    if (cat->identity_[a] != -1) throw BadIdentity("object '" + obj + "' has two identities");
    if (cat->mors_[f].src != a || cat->mors_[f].dst != a)
      throw BadIdentity("identity '" + mor + "' of '" + obj + "' is not an endomorphism of it");
    cat->identity_[a] = f;
  }
  for (ObjId a = 0; a < n; ++a)
    if (cat->identity_[a] == -1) throw BadIdentity("object '" + cat->objects_[a] + "' has no identity");

  cat->table_.assign(static_cast<size_t>(m) * m, -1);
  auto& tab = cat->table_;
  auto at = [m](MorId f, MorId g) { return static_cast<size_t>(f) * m + g; };
  for (const auto& e : entries_) {
    auto f = cat->mor_index(e.f), g = cat->mor_index(e.g), gf = cat->mor_index(e.gf);
    if (!f || !g || !gf)
      throw ValidationError("UnknownMorphism", "compose entry (" + e.f + ", " + e.g + ", " + e.gf + ") names an unknown morphism");
    if (!cat->composable(*f, *g))
      throw ValidationError("NotComposable", "compose entry given for non-composable pair (" + e.f + ", " + e.g + ")");
    if (tab[at(*f, *g)] != -1 && tab[at(*f, *g)] != *gf)
      throw ValidationError("AmbiguousComposite", "two different composites declared for (" + e.f + ", " + e.g + ")");
    if (cat->mors_[*gf].src != cat->mors_[*f].src || cat->mors_[*gf].dst != cat->mors_[*g].dst)
      throw ValidationError("IllTypedComposite",
                            "composite of (" + e.f + ", " + e.g + ") declared as '" + e.gf + "' which has the wrong endpoints");
    tab[at(*f, *g)] = *gf;
  }

  // Identity compositions are forced; fill them in if absent, reject if wrong.
  for (MorId f = 0; f < m; ++f) {
    MorId li = cat->identity_[cat->mors_[f].src];
    MorId ri = cat->identity_[cat->mors_[f].dst];
    for (auto [x, y, forced] : {std::tuple{li, f, f}, std::tuple{f, ri, f}}) {
      MorId& cell = tab[at(x, y)];
      if (cell == -1) cell = forced;
      else if (cell != forced)
        throw BadIdentity("composing '" + cat->mors_[f].name + "' with an identity must give it back");
    }
  }

  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g)
      if (cat->composable(f, g) && tab[at(f, g)] == -1)
        throw MissingComposite("no composite declared for ('" + cat->mors_[f].name + "', '" +
                               cat->mors_[g].name + "') in category '" + name_ + "'");

  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g) {
      if (!cat->composable(f, g)) continue;
      for (MorId h = 0; h < m; ++h) {
        if (!cat->composable(g, h)) continue;
        if (tab[at(tab[at(f, g)], h)] != tab[at(f, tab[at(g, h)])])
          throw NonAssociative("(" + cat->mors_[f].name + ", " + cat->mors_[g].name + ", " +
                               cat->mors_[h].name + ") violates associativity in category '" + name_ + "'");
      }
    }

  cat->hom_.assign(static_cast<size_t>(n) * n, {});
  for (MorId f = 0; f < m; ++f)
    cat->hom_[static_cast<size_t>(cat->mors_[f].src) * n + cat->mors_[f].dst].push_back(f);
  return cat;
}

/// A functor between finite categories, stored as total maps on ids.
/// Only ever produced validated: endpoints, identities and all composites are
/// checked against the source's tables.
class FinFunctor {
 public:
  static FinFunctor validated(CatPtr src, CatPtr tgt, std::vector<ObjId> omap,
                              std::vector<MorId> mmap, std::string name = "") {
    FinFunctor F;
    F.src_ = std::move(src);
    F.tgt_ = std::move(tgt);
    F.omap_ = std::move(omap);
    F.mmap_ = std::move(mmap);
    F.name_ = std::move(name);
    const FinCat& A = *F.src_;
    const FinCat& B = *F.tgt_;
    if (static_cast<int>(F.omap_.size()) != A.num_objects() ||
        static_cast<int>(F.mmap_.size()) != A.num_morphisms())
      throw NotAFunctor("functor '" + F.name_ + "' does not cover its source");
    for (ObjId a = 0; a < A.num_objects(); ++a)
      if (F.omap_[a] < 0 || F.omap_[a] >= B.num_objects())
        throw NotAFunctor("functor '" + F.name_ + "' sends object '" + A.object_name(a) + "' outside its target");
    for (MorId f = 0; f < A.num_morphisms(); ++f) {
      MorId Ff = F.mmap_[f];
      if (Ff < 0 || Ff >= B.num_morphisms())
        throw NotAFunctor("functor '" + F.name_ + "' sends morphism '" + A.mor(f).name + "' outside its target");
      if (B.src(Ff) != F.omap_[A.src(f)] || B.dst(Ff) != F.omap_[A.dst(f)])
        throw NotAFunctor("functor '" + F.name_ + "' breaks endpoints at morphism '" + A.mor(f).name + "'");
    }
    for (ObjId a = 0; a < A.num_objects(); ++a)
      if (F.mmap_[A.identity(a)] != B.identity(F.omap_[a]))
        throw NotAFunctor("functor '" + F.name_ + "' does not preserve the identity of '" + A.object_name(a) + "'");
    for (MorId f = 0; f < A.num_morphisms(); ++f)
      for (MorId g = 0; g < A.num_morphisms(); ++g)
        if (A.composable(f, g) &&
            F.mmap_[A.compose(f, g)] != B.compose(F.mmap_[f], F.mmap_[g]))
          throw NotAFunctor("functor '" + F.name_ + "' does not preserve the composite of ('" +
                            A.mor(f).name + "', '" + A.mor(g).name + "')");
    return F;
  }

  const FinCat& source() const { return *src_; }
  const FinCat& target() const { return *tgt_; }
  const CatPtr& source_ptr() const { return src_; }
  const CatPtr& target_ptr() const { return tgt_; }
  const std::string& name() const { return name_; }
  ObjId on_obj(ObjId a) const { return omap_[a]; }
  MorId on_mor(MorId f) const { return mmap_[f]; }
  const std::vector<ObjId>& object_map() const { return omap_; }
  const std::vector<MorId>& morphism_map() const { return mmap_; }

  /// Structural equality; names of the functors themselves are ignored.
  friend bool operator==(const FinFunctor& F, const FinFunctor& G) {
    return *F.src_ == *G.src_ && *F.tgt_ == *G.tgt_ && F.omap_ == G.omap_ && F.mmap_ == G.mmap_;
  }
  friend bool operator!=(const FinFunctor& F, const FinFunctor& G) { return !(F == G); }

 private:
  FinFunctor() = default;
  CatPtr src_, tgt_;
  std::vector<ObjId> omap_;
  std::vector<MorId> mmap_;
  std::string name_;
};

inline FinFunctor identity_functor(const CatPtr& A) {
  std::vector<ObjId> o(A->num_objects());
  std::vector<MorId> m(A->num_morphisms());
  for (size_t i = 0; i < o.size(); ++i) o[i] = static_cast<ObjId>(i);
  for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<MorId>(i);
  return FinFunctor::validated(A, A, std::move(o), std::move(m), "id_" + A->name());
}

/// g after f, diagrammatic like FinCat::compose.
inline FinFunctor compose(const FinFunctor& f, const FinFunctor& g) {
  if (f.target() != g.source())
    throw ShapeMismatch("cannot compose functors '" + f.name() + "' and '" + g.name() +
                        "': target and source differ");
  std::vector<ObjId> o(f.source().num_objects());
  std::vector<MorId> m(f.source().num_morphisms());
  for (size_t a = 0; a < o.size(); ++a) o[a] = g.on_obj(f.on_obj(static_cast<ObjId>(a)));
  for (size_t x = 0; x < m.size(); ++x) m[x] = g.on_mor(f.on_mor(static_cast<MorId>(x)));
  return FinFunctor::validated(f.source_ptr(), g.target_ptr(), std::move(o), std::move(m),
                               g.name() + "*" + f.name());
}

inline bool is_fully_faithful(const FinFunctor& F) {
  const FinCat& A = F.source();
  const FinCat& B = F.target();
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (ObjId b = 0; b < A.num_objects(); ++b) {
      const auto& ha = A.hom(a, b);
      const auto& hb = B.hom(F.on_obj(a), F.on_obj(b));
      if (ha.size() != hb.size()) return false;
      std::vector<MorId> image;
      image.reserve(ha.size());
      for (MorId f : ha) image.push_back(F.on_mor(f));
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      if (image != hb) return false;  // hom buckets are sorted by construction
    }
  return true;
}

inline bool is_essentially_surjective(const FinFunctor& F) {
  const FinCat& B = F.target();
  for (ObjId b = 0; b < B.num_objects(); ++b) {
    bool hit = false;
    for (ObjId a = 0; a < F.source().num_objects() && !hit; ++a)
      hit = B.objects_isomorphic(F.on_obj(a), b);
    if (!hit) return false;
  }
  return true;
}

inline bool is_equivalence(const FinFunctor& F) {
  return is_fully_faithful(F) && is_essentially_surjective(F);
}

/// Isomorphism of categories: literal bijections on objects and morphisms.
inline bool is_isomorphism_functor(const FinFunctor& F) {
  const FinCat& A = F.source();
  const FinCat& B = F.target();
  if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms()) return false;
  std::vector<char> oh(B.num_objects(), 0), mh(B.num_morphisms(), 0);
  for (ObjId a = 0; a < A.num_objects(); ++a) oh[F.on_obj(a)] = 1;
  for (MorId f = 0; f < A.num_morphisms(); ++f) mh[F.on_mor(f)] = 1;
  return std::all_of(oh.begin(), oh.end(), [](char c) { return c; }) &&
         std::all_of(mh.begin(), mh.end(), [](char c) { return c; });
}

/// A natural transformation, stored as one target-morphism per source object.
class NatTrans {
 public:
  static NatTrans validated(FinFunctor from, FinFunctor to, std::vector<MorId> comp,
                            std::string name = "") {
    if (from.source() != to.source() || from.target() != to.target())
      throw ShapeMismatch("transformation '" + name + "' needs parallel functors");
    const FinCat& A = from.source();
    const FinCat& B = from.target();
    if (static_cast<int>(comp.size()) != A.num_objects())
      throw NotNatural("transformation '" + name + "' must have one component per object");
    for (ObjId a = 0; a < A.num_objects(); ++a) {
      MorId c = comp[a];
      if (c < 0 || c >= B.num_morphisms() || B.src(c) != from.on_obj(a) || B.dst(c) != to.on_obj(a))
        throw NotNatural("component of '" + name + "' at '" + A.object_name(a) + "' has the wrong endpoints");
    }
    for (MorId f = 0; f < A.num_morphisms(); ++f) {
      // Square at f: a -> b requires comp[b] after F(f) == G(f) after comp[a].
      ObjId a = A.src(f), b = A.dst(f);
      if (B.compose(from.on_mor(f), comp[b]) != B.compose(comp[a], to.on_mor(f)))
        throw NotNatural("transformation '" + name + "' fails naturality at morphism '" + A.mor(f).name + "'");
    }
    return NatTrans(std::move(from), std::move(to), std::move(comp), std::move(name));
  }

  const FinFunctor& from() const { return from_; }
  const FinFunctor& to() const { return to_; }
  MorId at(ObjId a) const { return comp_[a]; }
  const std::vector<MorId>& components() const { return comp_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const NatTrans& x, const NatTrans& y) {
    return x.from_ == y.from_ && x.to_ == y.to_ && x.comp_ == y.comp_;
  }
  friend bool operator!=(const NatTrans& x, const NatTrans& y) { return !(x == y); }

 private:
  NatTrans(FinFunctor from, FinFunctor to, std::vector<MorId> comp, std::string name)
      : from_(std::move(from)), to_(std::move(to)), comp_(std::move(comp)), name_(std::move(name)) {}
  FinFunctor from_, to_;
  std::vector<MorId> comp_;
  std::string name_;
};

inline NatTrans identity_nat(const FinFunctor& F) {
  std::vector<MorId> comp(F.source().num_objects());
  for (ObjId a = 0; a < F.source().num_objects(); ++a)
    comp[a] = F.target().identity(F.on_obj(a));
  return NatTrans::validated(F, F, std::move(comp), "id");
}

/// beta after alpha (vertical composite), diagrammatic like compose().
inline NatTrans vcompose(const NatTrans& alpha, const NatTrans& beta) {
  if (alpha.to() != beta.from())
    throw ShapeMismatch("vertical composite needs matching middle functor");
  const FinCat& B = alpha.from().target();
  std::vector<MorId> comp(alpha.components().size());
  for (size_t a = 0; a < comp.size(); ++a)
    comp[a] = B.compose(alpha.at(static_cast<ObjId>(a)), beta.at(static_cast<ObjId>(a)));
  return NatTrans::validated(alpha.from(), beta.to(), std::move(comp));
}

/// H * alpha: components H(alpha_a), a transformation H∘F => H∘G.
inline NatTrans whisker_left(const FinFunctor& H, const NatTrans& alpha) {
  std::vector<MorId> comp(alpha.components().size());
  for (size_t a = 0; a < comp.size(); ++a) comp[a] = H.on_mor(alpha.at(static_cast<ObjId>(a)));
  return NatTrans::validated(compose(alpha.from(), H), compose(alpha.to(), H), std::move(comp));
}

/// alpha * H: components alpha_{H(x)}, a transformation F∘H => G∘H.
inline NatTrans whisker_right(const NatTrans& alpha, const FinFunctor& H) {
  std::vector<MorId> comp(H.source().num_objects());
  for (ObjId x = 0; x < H.source().num_objects(); ++x) comp[x] = alpha.at(H.on_obj(x));
  return NatTrans::validated(compose(H, alpha.from()), compose(H, alpha.to()), std::move(comp));
}

/// Builds a functor from name-level assignments.  Identities may be omitted
/// from `mors` (they are forced by the object map); everything else must be
/// present.  Validation is the same as FinFunctor::validated.
inline FinFunctor named_functor(const CatPtr& A, const CatPtr& B,
                                const std::map<std::string, std::string>& objs,
                                const std::map<std::string, std::string>& mors,
                                std::string name = "") {
  auto obj = [&](const std::string& n) {
    auto i = B->object_index(n);
    if (!i) throw NotAFunctor("functor '" + name + "' maps to unknown object '" + n + "'");
    return *i;
  };
  auto mor = [&](const std::string& n) {
    auto i = B->mor_index(n);
    if (!i) throw NotAFunctor("functor '" + name + "' maps to unknown morphism '" + n + "'");
    return *i;
  };
  std::vector<ObjId> omap(A->num_objects(), -1);
  std::vector<MorId> mmap(A->num_morphisms(), -1);
  for (const auto& [from, to] : objs) {
    auto a = A->object_index(from);
    if (!a) throw NotAFunctor("functor '" + name + "' assigns unknown object '" + from + "'");
    omap[*a] = obj(to);
  }
  for (ObjId a = 0; a < A->num_objects(); ++a)
    if (omap[a] == -1) throw NotAFunctor("functor '" + name + "' misses object '" + A->object_name(a) + "'");
  for (const auto& [from, to] : mors) {
    auto f = A->mor_index(from);
    if (!f) throw NotAFunctor("functor '" + name + "' assigns unknown morphism '" + from + "'");
    mmap[*f] = mor(to);
  }
  for (MorId f = 0; f < A->num_morphisms(); ++f)
    if (mmap[f] == -1) {
      if (!A->is_identity(f))
        throw NotAFunctor("functor '" + name + "' misses morphism '" + A->mor(f).name + "'");
      mmap[f] = B->identity(omap[A->src(f)]);
    }
  return FinFunctor::validated(A, B, std::move(omap), std::move(mmap), std::move(name));
}

/// Natural transformation from name-level components, one per source object.
inline NatTrans named_nat(const FinFunctor& from, const FinFunctor& to,
                          const std::map<std::string, std::string>& components,
                          std::string name = "") {
  const FinCat& A = from.source();
  const FinCat& B = from.target();
  std::vector<MorId> comp(A.num_objects(), -1);
  for (const auto& [at, c] : components) {
    auto a = A.object_index(at);
    if (!a) throw NotNatural("transformation '" + name + "' has a component at unknown object '" + at + "'");
    auto f = B.mor_index(c);
    if (!f) throw NotNatural("transformation '" + name + "' uses unknown morphism '" + c + "'");
    comp[*a] = *f;
  }
  for (ObjId a = 0; a < A.num_objects(); ++a)
    if (comp[a] == -1)
      throw NotNatural("transformation '" + name + "' misses object '" + A.object_name(a) + "'");
  return NatTrans::validated(from, to, std::move(comp), std::move(name));
}

inline CatPtr opposite(const FinCat& C, const Caps& caps = Caps{}) {
  CatBuilder b(C.name() + "_op");
  for (ObjId a = 0; a < C.num_objects(); ++a) b.object(C.object_name(a));
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    if (C.is_identity(f)) b.identity(C.object_name(C.src(f)), C.mor(f).name);
    else b.morphism(C.mor(f).name, C.object_name(C.dst(f)), C.object_name(C.src(f)));
  }
  for (MorId f = 0; f < C.num_morphisms(); ++f)
    for (MorId g = 0; g < C.num_morphisms(); ++g)
      if (C.composable(g, f))
        b.compose(C.mor(f).name, C.mor(g).name, C.mor(C.compose(g, f)).name);
  return b.build(caps);
}

namespace detail {

inline void bump_budget(std::int64_t& budget, const char* what) {
  if (--budget < 0) throw SizeCapExceeded(std::string(what) + " enumeration exceeded the search budget");
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

/// All functors A -> B in lexicographic order of (object map, morphism map).
inline std::vector<FinFunctor> enumerate_functors(const CatPtr& A, const CatPtr& B,
                                                  const Caps& caps = Caps{}) {
  std::vector<FinFunctor> out;
  const int n = A->num_objects(), m = A->num_morphisms();
  std::vector<ObjId> omap(n, 0);
  std::vector<MorId> mmap(m, -1);
  std::int64_t budget = caps.search_budget;

  // Morphisms in id order; identities are forced once objects are chosen.
  // A candidate is kept when every composite whose three participants are all
  // assigned so far is preserved, so the leaf assignments are exactly the
  // functors.
  auto mor_ok = [&](MorId f, MorId img) {
    if (B->src(img) != omap[A->src(f)] || B->dst(img) != omap[A->dst(f)]) return false;
    mmap[f] = img;
    bool ok = true;
    for (MorId u = 0; u < m && ok; ++u) {
      if (mmap[u] == -1) continue;
      for (MorId v = 0; v < m && ok; ++v) {
        if (mmap[v] == -1 || !A->composable(u, v)) continue;
        MorId c = A->compose(u, v);
        if (mmap[c] != -1 && mmap[c] != B->compose(mmap[u], mmap[v])) ok = false;
      }
    }
    mmap[f] = -1;
    return ok;
  };

  auto assign_mors = [&](auto&& self, MorId f) -> void {
    detail::bump_budget(budget, "functor");
    if (f == m) {
      out.push_back(FinFunctor::validated(A, B, omap, mmap));
      return;
    }
    if (A->is_identity(f)) {
      MorId img = B->identity(omap[A->src(f)]);
      if (mor_ok(f, img)) {
        mmap[f] = img;
        self(self, f + 1);
        mmap[f] = -1;
      }
      return;
    }
    for (MorId img : B->hom(omap[A->src(f)], omap[A->dst(f)]))
      if (mor_ok(f, img)) {
        mmap[f] = img;
        self(self, f + 1);
        mmap[f] = -1;
      }
  };
  auto assign_objs = [&](auto&& self, ObjId a) -> void {
    detail::bump_budget(budget, "functor");
    if (a == n) {
      assign_mors(assign_mors, 0);
      return;
    }
    for (ObjId b = 0; b < B->num_objects(); ++b) {
      omap[a] = b;
      self(self, a + 1);
    }
  };
  if (B->num_objects() == 0 && n > 0) return out;
  assign_objs(assign_objs, 0);
  return out;
}

/// All natural transformations F => G in lexicographic component order.
inline std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& F, const FinFunctor& G,
                                                 const Caps& caps = Caps{}) {
  if (F.source() != G.source() || F.target() != G.target())
    throw ShapeMismatch("can only enumerate transformations between parallel functors");
  const FinCat& A = F.source();
  const FinCat& B = F.target();
  const int n = A.num_objects();
  std::vector<MorId> comp(n, -1);
  std::vector<NatTrans> out;
  std::int64_t budget = caps.search_budget;

  auto square_ok = [&](ObjId a) {
    for (MorId f = 0; f < A.num_morphisms(); ++f) {
      ObjId s = A.src(f), d = A.dst(f);
      if ((s != a && d != a) || comp[s] == -1 || comp[d] == -1) continue;
      if (B.compose(F.on_mor(f), comp[d]) != B.compose(comp[s], G.on_mor(f))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, ObjId a) -> void {
    detail::bump_budget(budget, "transformation");
    if (a == n) {
      out.push_back(NatTrans::validated(F, G, comp));
      return;
    }
    for (MorId c : B.hom(F.on_obj(a), G.on_obj(a))) {
      comp[a] = c;
      if (square_ok(a)) self(self, a + 1);
      comp[a] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

/// The inserter of a parallel pair F, G: A -> B.
///
/// Objects are pairs (a, m) with m: F(a) -> G(a); a morphism (a, m) -> (a', m')
/// is f: a -> a' with m' after F(f) equal to G(f) after m.  `projection` is
/// the evident functor to A and `cell` the canonical transformation
/// F∘projection => G∘projection with component m at (a, m).
struct Inserter {
  CatPtr category;
  FinFunctor projection;
  NatTrans cell;
};

inline Inserter make_inserter(const FinFunctor& F, const FinFunctor& G, const Caps& caps = Caps{}) {
  if (F.source() != G.source() || F.target() != G.target())
    throw ShapeMismatch("inserter needs a parallel pair");
  const FinCat& A = F.source();
  const FinCat& B = F.target();

  struct Obj {
    ObjId a;
    MorId mid;
  };
  std::vector<Obj> objs;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId mid : B.hom(F.on_obj(a), G.on_obj(a))) objs.push_back({a, mid});

  auto obj_name = [&](const Obj& o) {
    return "(" + A.object_name(o.a) + "|" + B.mor(o.mid).name + ")";
  };

  struct Mor {
    MorId f;
    int from, to;
  };
  std::vector<Mor> mors;
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      for (MorId f : A.hom(objs[i].a, objs[j].a))
        if (B.compose(F.on_mor(f), objs[j].mid) == B.compose(objs[i].mid, G.on_mor(f)))
          mors.push_back({f, static_cast<int>(i), static_cast<int>(j)});

  auto mor_name = [&](const Mor& x) {
    return A.mor(x.f).name + "|" + std::to_string(x.from) + ">" + std::to_string(x.to);
  };
  auto find_mor = [&](MorId f, int from, int to) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].f == f && mors[i].from == from && mors[i].to == to) return static_cast<int>(i);
    return -1;
  };

  CatBuilder b("Ins(" + F.name() + "," + G.name() + ")");
  for (const auto& o : objs) b.object(obj_name(o));
  for (const auto& x : mors) {
    if (x.from == x.to && A.is_identity(x.f)) b.identity(obj_name(objs[x.from]), mor_name(x));
    else b.morphism(mor_name(x), obj_name(objs[x.from]), obj_name(objs[x.to]));
  }
  for (const auto& x : mors)
    for (const auto& y : mors)
      if (x.to == y.from) {
        int c = find_mor(A.compose(x.f, y.f), x.from, y.to);
        if (c < 0) throw InternalCheckFailed("inserter is not closed under composition");
        b.compose(mor_name(x), mor_name(y), mor_name(mors[c]));
      }
  CatPtr ins = b.build(caps);

  std::vector<ObjId> po(objs.size());
  std::vector<MorId> pm(mors.size());
  for (size_t i = 0; i < objs.size(); ++i) po[i] = objs[i].a;
  for (size_t i = 0; i < mors.size(); ++i) pm[i] = mors[i].f;
  FinFunctor U = FinFunctor::validated(ins, F.source_ptr(), std::move(po), std::move(pm),
                                       "proj_" + ins->name());

  std::vector<MorId> comp(objs.size());
  for (size_t i = 0; i < objs.size(); ++i) comp[i] = objs[i].mid;
  NatTrans cell = NatTrans::validated(compose(U, F), compose(U, G), std::move(comp), "cell");
  return {ins, U, cell};
}

/// One-dimensional universal property of the inserter, checked by enumeration
/// against a probe category X: functors X -> Ins correspond bijectively to
/// pairs (H: X -> A, phi: F∘H => G∘H) via H = proj∘K, phi = cell * K.
inline bool inserter_universal_ok(const FinFunctor& F, const FinFunctor& G, const Inserter& ins,
                                  const CatPtr& X, const Caps& caps = Caps{}) {
  auto ks = enumerate_functors(X, ins.category, caps);
  std::vector<std::pair<FinFunctor, NatTrans>> seen;
  for (const auto& K : ks) {
    FinFunctor H = compose(K, ins.projection);
    NatTrans phi = whisker_right(ins.cell, K);
    for (const auto& [h0, p0] : seen)
      if (h0 == H && p0 == phi) return false;  // not injective
    seen.emplace_back(std::move(H), std::move(phi));
  }
  for (const auto& H : enumerate_functors(X, F.source_ptr(), caps))
    for (const auto& phi : enumerate_nat_trans(compose(H, F), compose(H, G), caps)) {
      bool found = false;
      for (const auto& [h0, p0] : seen)
        if (h0 == H && p0 == phi) {
          found = true;
          break;
        }
      if (!found) return false;  // not surjective
    }
  return true;
}

}  // namespace laxcat
