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

class FinGroup;
using GroupPtr = std::shared_ptr<const FinGroup>;

/// A finite group by multiplication table.  mult(x, y) is "x then y", matching
/// the diagrammatic composition used everywhere else in the library.
class FinGroup {
 public:
  static GroupPtr validated(std::string name, std::vector<std::string> elements,
                            std::vector<int> table, const Caps& caps = Caps{}) {
    auto g = std::shared_ptr<FinGroup>(new FinGroup());
    g->name_ = std::move(name);
    g->elems_ = std::move(elements);
    g->table_ = std::move(table);
    const int n = g->order();
    if (n == 0) throw NotAGroup("group '" + g->name_ + "' has no elements");
    if (n > caps.max_morphisms)
      throw SizeCapExceeded("group '" + g->name_ + "' has order " + std::to_string(n) +
                            ", cap is " + std::to_string(caps.max_morphisms));
    if (g->table_.size() != static_cast<size_t>(n) * n)
      throw NotAGroup("table of '" + g->name_ + "' has the wrong shape");
    for (const auto& e : g->elems_)
      if (!g->index_.emplace(e, static_cast<int>(g->index_.size())).second)
        throw NotAGroup("element '" + e + "' declared twice");
    for (int v : g->table_)
      if (v < 0 || v >= n) throw NotAGroup("table of '" + g->name_ + "' leaves the group");
    g->e_ = -1;
    for (int c = 0; c < n; ++c) {
      bool unit = true;
      for (int x = 0; x < n && unit; ++x)
        unit = g->mult(c, x) == x && g->mult(x, c) == x;
      if (unit) g->e_ = c;
    }
    if (g->e_ == -1) throw NotAGroup("group '" + g->name_ + "' has no identity");
    g->inv_.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (g->mult(x, y) == g->e_ && g->mult(y, x) == g->e_) g->inv_[x] = y;
    for (int x = 0; x < n; ++x)
      if (g->inv_[x] == -1)
        throw NotAGroup("element '" + g->elems_[x] + "' of '" + g->name_ + "' has no inverse");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (g->mult(g->mult(x, y), z) != g->mult(x, g->mult(y, z)))
            throw NotAGroup("multiplication of '" + g->name_ + "' is not associative at ('" +
                            g->elems_[x] + "', '" + g->elems_[y] + "', '" + g->elems_[z] + "')");
    return g;
  }

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::string& element_name(int i) const { return elems_[i]; }
  const std::vector<std::string>& elements() const { return elems_; }
  std::optional<int> index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int mult(int x, int y) const { return table_[static_cast<size_t>(x) * elems_.size() + y]; }
  int identity_element() const { return e_; }
  int inverse(int x) const { return inv_[x]; }

  bool is_abelian() const {
    for (int x = 0; x < order(); ++x)
      for (int y = x + 1; y < order(); ++y)
        if (mult(x, y) != mult(y, x)) return false;
    return true;
  }

  friend bool operator==(const FinGroup& a, const FinGroup& b) {
    return a.elems_ == b.elems_ && a.table_ == b.table_;
  }
  friend bool operator!=(const FinGroup& a, const FinGroup& b) { return !(a == b); }

 private:
  FinGroup() = default;
  std::string name_;
  std::vector<std::string> elems_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::map<std::string, int> index_;
  int e_ = -1;
};

inline GroupPtr cyclic_group(int n, const Caps& caps = Caps{}) {
  std::vector<std::string> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = "g" + std::to_string(i);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return FinGroup::validated("C" + std::to_string(n), std::move(elems), std::move(table), caps);
}

/// Order 2n, elements r0..r{n-1} and s0..s{n-1} with sk = s * r^k, where
/// s * r * s = r^-1.
inline GroupPtr dihedral_group(int n, const Caps& caps = Caps{}) {
  const int N = 2 * n;
  std::vector<std::string> elems(N);
  for (int i = 0; i < n; ++i) elems[i] = "r" + std::to_string(i);
  for (int i = 0; i < n; ++i) elems[n + i] = "s" + std::to_string(i);
  auto pack = [&](int flip, int k) { return flip * n + k; };
  std::vector<int> table(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      int f1 = x / n, k1 = x % n, f2 = y / n, k2 = y % n;
      int k = f2 ? (k2 - k1 + n) % n : (k1 + k2) % n;
      table[static_cast<size_t>(x) * N + y] = pack(f1 ^ f2, k);
    }
  return FinGroup::validated("D" + std::to_string(n), std::move(elems), std::move(table), caps);
}

inline GroupPtr klein_group(const Caps& caps = Caps{}) {
  // C2 x C2 with the traditional names.
  std::vector<int> table = {0, 1, 2, 3,
                            1, 0, 3, 2,
                            2, 3, 0, 1,
                            3, 2, 1, 0};
  return FinGroup::validated("V4", {"e", "a", "b", "ab"}, std::move(table), caps);
}

/// Permutations written in cycle notation on 1..n; mult is "apply left, then
/// right".  Kept small: the library only ever needs n <= 3.
inline GroupPtr symmetric_group(int n, const Caps& caps = Caps{}) {
  if (n < 1 || n > 3) throw NotAGroup("symmetric_group supports 1 <= n <= 3");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto cycle_name = [&](const std::vector<int>& q) {
    std::string out;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i] || q[i] == i) continue;
      out += "(";
      for (int j = i; !seen[j]; j = q[j]) {
        seen[j] = 1;
        out += std::to_string(j + 1);
      }
      out += ")";
    }
    return out.empty() ? std::string("e") : out;
  };
  const int N = static_cast<int>(perms.size());
  std::vector<std::string> elems(N);
  for (int i = 0; i < N; ++i) elems[i] = cycle_name(perms[i]);
  std::vector<int> table(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = perms[y][perms[x][i]];
      table[static_cast<size_t>(x) * N + y] =
          static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return FinGroup::validated("S" + std::to_string(n), std::move(elems), std::move(table), caps);
}

inline GroupPtr quaternion_group(const Caps& caps = Caps{}) {
  // Elements (sign, axis) with axes 1, i, j, k.
  std::vector<std::string> elems = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto pack = [](int sign, int axis) { return 2 * axis + sign; };
  // axis_mult[a][b] = (sign, axis) of a * b.
  static const int axis_table[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}}};
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = x % 2, ax = x / 2, sy = y % 2, ay = y / 2;
      int sign = (sx + sy + axis_table[ax][ay][0]) % 2;
      table[static_cast<size_t>(x) * 8 + y] = pack(sign, axis_table[ax][ay][1]);
    }
  return FinGroup::validated("Q8", std::move(elems), std::move(table), caps);
}

inline GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H, const Caps& caps = Caps{}) {
  const int n = G->order(), m = H->order();
  std::vector<std::string> elems(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      elems[static_cast<size_t>(i) * m + j] =
          "(" + G->element_name(i) + "," + H->element_name(j) + ")";
  std::vector<int> table(elems.size() * elems.size());
  for (int x = 0; x < n * m; ++x)
    for (int y = 0; y < n * m; ++y) {
      int gx = x / m, hx = x % m, gy = y / m, hy = y % m;
      table[static_cast<size_t>(x) * elems.size() + y] =
          G->mult(gx, gy) * m + H->mult(hx, hy);
    }
  return FinGroup::validated(G->name() + "x" + H->name(), std::move(elems), std::move(table), caps);
}

class GroupHom {
 public:
  static GroupHom validated(GroupPtr src, GroupPtr tgt, std::vector<int> map,
                            std::string name = "") {
    GroupHom f(std::move(src), std::move(tgt), std::move(map), std::move(name));
    const FinGroup& G = *f.src_;
    const FinGroup& H = *f.tgt_;
    if (static_cast<int>(f.map_.size()) != G.order())
      throw NotAHomomorphism("map '" + f.name_ + "' does not cover its source");
    for (int x : f.map_)
      if (x < 0 || x >= H.order())
        throw NotAHomomorphism("map '" + f.name_ + "' leaves its target");
    for (int x = 0; x < G.order(); ++x)
      for (int y = 0; y < G.order(); ++y)
        if (f.map_[G.mult(x, y)] != H.mult(f.map_[x], f.map_[y]))
          throw NotAHomomorphism("map '" + f.name_ + "' breaks multiplication at ('" +
                                 G.element_name(x) + "', '" + G.element_name(y) + "')");
    return f;
  }

  const FinGroup& source() const { return *src_; }
  const FinGroup& target() const { return *tgt_; }
  const GroupPtr& source_ptr() const { return src_; }
  const GroupPtr& target_ptr() const { return tgt_; }
  const std::string& name() const { return name_; }
  int at(int x) const { return map_[x]; }
  const std::vector<int>& map() const { return map_; }

  friend bool operator==(const GroupHom& f, const GroupHom& g) {
    return *f.src_ == *g.src_ && *f.tgt_ == *g.tgt_ && f.map_ == g.map_;
  }
  friend bool operator!=(const GroupHom& f, const GroupHom& g) { return !(f == g); }

 private:
  GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> map, std::string name)
      : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(map)), name_(std::move(name)) {}
  GroupPtr src_, tgt_;
  std::vector<int> map_;
  std::string name_;
};

inline GroupHom named_hom(const GroupPtr& G, const GroupPtr& H,
                          const std::map<std::string, std::string>& assignments,
                          std::string name = "") {
  std::vector<int> map(G->order(), -1);
  for (const auto& [from, to] : assignments) {
    auto i = G->index(from);
    auto j = H->index(to);
    if (!i || !j) throw NotAHomomorphism("map '" + name + "' names unknown elements");
    map[*i] = *j;
  }
  for (int x = 0; x < G->order(); ++x)
    if (map[x] == -1)
      throw NotAHomomorphism("map '" + name + "' misses '" + G->element_name(x) + "'");
  return GroupHom::validated(G, H, std::move(map), std::move(name));
}

inline GroupHom identity_hom(const GroupPtr& G) {
  std::vector<int> map(G->order());
  for (int i = 0; i < G->order(); ++i) map[i] = i;
  return GroupHom::validated(G, G, std::move(map), "id_" + G->name());
}

inline GroupHom trivial_hom(const GroupPtr& G, const GroupPtr& H) {
  return GroupHom::validated(G, H, std::vector<int>(G->order(), H->identity_element()),
                             "trivial");
}

/// g after f.
inline GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (f.target() != g.source())
    throw ShapeMismatch("cannot compose '" + f.name() + "' and '" + g.name() + "'");
  std::vector<int> map(f.source().order());
  for (int x = 0; x < f.source().order(); ++x) map[x] = g.at(f.at(x));
  return GroupHom::validated(f.source_ptr(), g.target_ptr(), std::move(map),
                             g.name() + "*" + f.name());
}

inline bool is_surjective_hom(const GroupHom& f) {
  std::vector<char> hit(f.target().order(), 0);
  for (int x = 0; x < f.source().order(); ++x) hit[f.at(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool is_injective_hom(const GroupHom& f) {
  for (int x = 0; x < f.source().order(); ++x)
    if (f.at(x) == f.target().identity_element() && x != f.source().identity_element())
      return false;
  return true;
}

namespace detail {

/// A short generating sequence found greedily, plus each element's expression
/// as (previous element, generator used); -1 marks the identity.
struct GenWords {
  std::vector<int> gens;
  std::vector<std::pair<int, int>> word;  // element -> (parent element, gen index)
};

inline GenWords generating_words(const FinGroup& G) {
  GenWords out;
  out.word.assign(G.order(), {-1, -1});
  std::vector<char> reached(G.order(), 0);
  reached[G.identity_element()] = 1;
  int count = 1;
  while (count < G.order()) {
    int fresh = -1;
    for (int x = 0; x < G.order() && fresh == -1; ++x)
      if (!reached[x]) fresh = x;
    out.gens.push_back(fresh);
    // Close under right multiplication by all generators found so far.
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < G.order(); ++x) {
        if (!reached[x]) continue;
        for (size_t gi = 0; gi < out.gens.size(); ++gi) {
          int y = G.mult(x, out.gens[gi]);
          if (!reached[y]) {
            reached[y] = 1;
            out.word[y] = {x, static_cast<int>(gi)};
            ++count;
            grew = true;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// All homomorphisms G -> H, by generator images, in lexicographic order of
/// the full element map.
inline std::vector<GroupHom> enumerate_homs(const GroupPtr& G, const GroupPtr& H,
                                            const Caps& caps = Caps{}) {
  const detail::GenWords gw = detail::generating_words(*G);
  const int k = static_cast<int>(gw.gens.size());
  std::vector<GroupHom> out;
  std::vector<int> img(k, 0);
  std::int64_t budget = caps.search_budget;
  auto attempt = [&]() {
    detail::bump_budget(budget, "homomorphism");
    std::vector<int> map(G->order(), -1);
    map[G->identity_element()] = H->identity_element();
    // Elements are reachable in word order; parents always resolve first.
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < G->order(); ++x) {
        if (map[x] != -1) continue;
        auto [parent, gi] = gw.word[x];
        if (map[parent] != -1) {
          map[x] = H->mult(map[parent], img[gi]);
          progress = true;
        }
      }
    }
    for (int x : map)
      if (x == -1) throw InternalCheckFailed("generator words failed to cover the group");
    for (int x = 0; x < G->order(); ++x)
      for (int y = 0; y < G->order(); ++y)
        if (map[G->mult(x, y)] != H->mult(map[x], map[y])) return;
    out.push_back(GroupHom::validated(G, H, std::move(map)));
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      attempt();
      return;
    }
    for (int y = 0; y < H->order(); ++y) {
      img[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map() < b.map(); });
  return out;
}

/// Surjection-followed-by-injection factorization through the image subgroup.
struct HomFactorization {
  GroupPtr mid;
  GroupHom onto;  // source -> mid
  GroupHom into;  // mid -> target
};

inline HomFactorization image_factorization(const GroupHom& f) {
  const FinGroup& H = f.target();
  std::vector<int> image;
  for (int x = 0; x < f.source().order(); ++x) image.push_back(f.at(x));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> pos(H.order(), -1);
  std::vector<std::string> elems;
  for (size_t i = 0; i < image.size(); ++i) {
    pos[image[i]] = static_cast<int>(i);
    elems.push_back(H.element_name(image[i]));
  }
  const int n = static_cast<int>(image.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = pos[H.mult(image[i], image[j])];
      if (prod == -1) throw InternalCheckFailed("image of a homomorphism must be closed");
      table[static_cast<size_t>(i) * n + j] = prod;
    }
  GroupPtr mid = FinGroup::validated("im(" + f.name() + ")", std::move(elems), std::move(table));
  std::vector<int> onto_map(f.source().order()), into_map(n);
  for (int x = 0; x < f.source().order(); ++x) onto_map[x] = pos[f.at(x)];
  for (int i = 0; i < n; ++i) into_map[i] = image[i];
  GroupHom onto = GroupHom::validated(f.source_ptr(), mid, std::move(onto_map), "corestrict");
  GroupHom into = GroupHom::validated(mid, f.target_ptr(), std::move(into_map), "include");
  return {mid, onto, into};
}

/// A 2-cell f => g between parallel homomorphisms: an element a of the target
/// with f(x) * a = a * g(x) for every x, i.e. a conjugates g into f.
class GrpTwoCell {
 public:
  static GrpTwoCell validated(GroupHom from, GroupHom to, int element) {
    if (from.source() != to.source() || from.target() != to.target())
      throw ShapeMismatch("a 2-cell needs parallel homomorphisms");
    const FinGroup& H = from.target();
    if (element < 0 || element >= H.order())
      throw NotIntertwining("2-cell element out of range");
    for (int x = 0; x < from.source().order(); ++x)
      if (H.mult(from.at(x), element) != H.mult(element, to.at(x)))
        throw NotIntertwining("element '" + H.element_name(element) +
                              "' fails to intertwine at '" + from.source().element_name(x) + "'");
    return GrpTwoCell(std::move(from), std::move(to), element);
  }

  const GroupHom& from() const { return from_; }
  const GroupHom& to() const { return to_; }
  int element() const { return element_; }

 private:
  GrpTwoCell(GroupHom from, GroupHom to, int element)
      : from_(std::move(from)), to_(std::move(to)), element_(element) {}
  GroupHom from_, to_;
  int element_;
};

inline GrpTwoCell identity_two_cell(const GroupHom& f) {
  return GrpTwoCell::validated(f, f, f.target().identity_element());
}

inline GrpTwoCell vcompose(const GrpTwoCell& a, const GrpTwoCell& b) {
  if (a.to() != b.from()) throw ShapeMismatch("2-cells do not meet for vertical composition");
  return GrpTwoCell::validated(a.from(), b.to(), a.from().target().mult(a.element(), b.element()));
}

/// Horizontal composition of a: f => g (G -> H) with b: u => v (H -> K).
/// The two candidate elements u(a) * b and b * v(a) coincide; this is the
/// interchange law in miniature.
inline GrpTwoCell hcompose(const GrpTwoCell& a, const GrpTwoCell& b) {
  if (a.from().target() != b.from().source())
    throw ShapeMismatch("2-cells do not meet for horizontal composition");
  const FinGroup& K = b.from().target();
  int left = K.mult(b.from().at(a.element()), b.element());
  int right = K.mult(b.element(), b.to().at(a.element()));
  if (left != right) throw InternalCheckFailed("interchange failed in hcompose");
  return GrpTwoCell::validated(compose(a.from(), b.from()), compose(a.to(), b.to()), left);
}

/// In the 2-category of groups (with conjugation 2-cells) the lax
/// epimorphisms are exactly the surjections.
struct GrpVerdict {
  bool value = false;
  std::optional<int> witness;  // element of the target never hit
  explicit operator bool() const { return value; }
};

inline GrpVerdict is_lax_epi_grp(const GroupHom& f) {
  std::vector<char> hit(f.target().order(), 0);
  for (int x = 0; x < f.source().order(); ++x) hit[f.at(x)] = 1;
  for (int y = 0; y < f.target().order(); ++y)
    if (!hit[y]) return {false, y};
  return {true, std::nullopt};
}

/// The raw precomposition condition at one probe: if gamma intertwines
/// u after f => v after f, it must already intertwine u => v.
inline bool laxepi_condition_probe(const GroupHom& f, const GroupHom& u, const GroupHom& v,
                                   int gamma) {
  if (f.target() != u.source() || u.source() != v.source() || u.target() != v.target())
    throw ShapeMismatch("probe shapes do not line up");
  const FinGroup& K = u.target();
  for (int x = 0; x < f.source().order(); ++x)
    if (K.mult(u.at(f.at(x)), gamma) != K.mult(gamma, v.at(f.at(x))))
      return true;  // hypothesis fails, condition holds vacuously
  for (int y = 0; y < f.target().order(); ++y)
    if (K.mult(u.at(y), gamma) != K.mult(gamma, v.at(y))) return false;
  return true;
}

struct GrpRefutation {
  GroupHom u, v;
  int gamma;
};

/// Search the probe groups for a failure of the precomposition condition.
/// Surjective homomorphisms admit none; non-surjective ones are refuted as
/// soon as the probe family is rich enough (the target itself usually is).
inline std::optional<GrpRefutation> grp_lax_epi_refutation(
    const GroupHom& f, const std::vector<GroupPtr>& probes, const Caps& caps = Caps{}) {
  for (const GroupPtr& K : probes) {
    auto homs = enumerate_homs(f.target_ptr(), K, caps);
    for (const GroupHom& u : homs)
      for (const GroupHom& v : homs)
        for (int gamma = 0; gamma < K->order(); ++gamma)
          if (!laxepi_condition_probe(f, u, v, gamma)) return GrpRefutation{u, v, gamma};
  }
  return std::nullopt;
}

/// The one-object category on a group; morphism names are the element names.
inline CatPtr as_category(const FinGroup& G, const Caps& caps = Caps{}) {
  CatBuilder b(G.name());
  b.object("*");
  b.identity("*", G.element_name(G.identity_element()));
  for (int x = 0; x < G.order(); ++x)
    if (x != G.identity_element()) b.morphism(G.element_name(x), "*", "*");
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      b.compose(G.element_name(x), G.element_name(y), G.element_name(G.mult(x, y)));
  return b.build(caps);
}

inline FinFunctor as_functor(const GroupHom& f, const Caps& caps = Caps{}) {
  CatPtr C = as_category(f.source(), caps);
  CatPtr D = as_category(f.target(), caps);
  std::vector<ObjId> omap = {0};
  std::vector<MorId> mmap(C->num_morphisms());
  for (MorId m = 0; m < C->num_morphisms(); ++m) {
    int x = *f.source().index(C->mor(m).name);
    mmap[m] = *D->mor_index(f.target().element_name(f.at(x)));
  }
  return FinFunctor::validated(C, D, std::move(omap), std::move(mmap), f.name());
}

}  // namespace laxcat
