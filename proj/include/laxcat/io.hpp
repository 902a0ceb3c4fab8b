#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "laxcat/factorize.hpp"
#include "laxcat/fincat.hpp"
#include "laxcat/grp2.hpp"
#include "laxcat/orders.hpp"
#include "laxcat/vquant.hpp"

// Self-contained JSON documents for every structure the library handles.
// Nothing is inferred on input: identities, composition tables, order
// relations and multiplication tables are all spelled out, so a document is
// re-checked in full by the owning validator every time it is parsed.
// Serialization is deterministic (ids ascending, two-space indent), which
// makes round trips byte-identical.

namespace laxcat::io {

using json = nlohmann::ordered_json;

/// A commutative square plus the document name it travels under.
struct SquareData {
  std::string name;
  Square square;
};

using Payload = std::variant<CatPtr, FinFunctor, NatTrans, PreordPtr, MonotoneMap, GroupPtr,
                             GroupHom, FramePtr, VCatPtr, VFunctor, SquareData>;

struct Document {
  Payload payload;

  const char* kind() const {
    static constexpr const char* tags[] = {"category", "functor",  "nat_trans", "preord",
                                           "monotone", "group",    "hom",       "frame",
                                           "vcat",     "vfunctor", "square"};
    return tags[payload.index()];
  }

  std::string name() const {
    return std::visit(
        [](const auto& p) -> std::string {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, SquareData>) return p.name;
          else if constexpr (std::is_same_v<T, CatPtr> || std::is_same_v<T, PreordPtr> ||
                             std::is_same_v<T, GroupPtr> || std::is_same_v<T, FramePtr> ||
                             std::is_same_v<T, VCatPtr>) return p->name();
          else return p.name();
        },
        payload);
  }
};

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + ": missing field '" + key + "'");
  return *it;
}

inline std::string str_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (const json& v : j) {
    if (!v.is_string()) throw SchemaError(path + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

/// Resolves a name against a list of declared names, with a field-path
/// diagnostic on failure.
inline int resolve(const std::vector<std::string>& names, const std::string& n,
                   const std::string& path) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw SchemaError(path + ": '" + n + "' is not declared");
}

/// Reads {"x": "y", ...} as a positional map over `src` with values resolved
/// against `tgt`.  Every source name must appear exactly once.
inline std::vector<int> name_map(const json& j, const std::vector<std::string>& src,
                                 const std::vector<std::string>& tgt, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  std::vector<int> out(src.size(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    size_t i = 0;
    while (i < src.size() && src[i] != it.key()) ++i;
    if (i == src.size()) throw SchemaError(path + ": '" + it.key() + "' is not declared");
    if (out[i] != -1) throw SchemaError(path + ": duplicate entry for '" + it.key() + "'");
    if (!it.value().is_string())
      throw SchemaError(path + "." + it.key() + ": expected a string");
    out[i] = resolve(tgt, it.value().get<std::string>(), path + "." + it.key());
  }
  for (size_t i = 0; i < src.size(); ++i)
    if (out[i] == -1) throw SchemaError(path + ": missing entry for '" + src[i] + "'");
  return out;
}

// Categories.

inline json cat_payload(const FinCat& C) {
  json j;
  j["name"] = C.name();
  json objs = json::array();
  for (ObjId a = 0; a < C.num_objects(); ++a) objs.push_back(C.object_name(a));
  j["objects"] = std::move(objs);
  json mors = json::array();
  for (MorId f = 0; f < C.num_morphisms(); ++f)
    mors.push_back({{"id", C.mor(f).name},
                    {"src", C.object_name(C.src(f))},
                    {"dst", C.object_name(C.dst(f))}});
  j["morphisms"] = std::move(mors);
  json ids = json::object();
  for (ObjId a = 0; a < C.num_objects(); ++a)
    ids[C.object_name(a)] = C.mor(C.identity(a)).name;
  j["identities"] = std::move(ids);
  json comp = json::array();
  for (MorId f = 0; f < C.num_morphisms(); ++f)
    for (MorId g = 0; g < C.num_morphisms(); ++g) {
      if (!C.composable(f, g) || C.is_identity(f) || C.is_identity(g)) continue;
      comp.push_back({C.mor(f).name, C.mor(g).name, C.mor(C.compose(f, g)).name});
    }
  j["compose"] = std::move(comp);
  return j;
}

inline CatPtr cat_from(const json& j, const std::string& path, const Caps& caps) {
  CatBuilder b(str_field(j, "name", path));
  for (const std::string& n : string_list(field(j, "objects", path), path + ".objects"))
    b.object(n);

  const json& ids = field(j, "identities", path);
  if (!ids.is_object()) throw SchemaError(path + ".identities: expected an object");
  const json& mors = field(j, "morphisms", path);
  if (!mors.is_array()) throw SchemaError(path + ".morphisms: expected an array");
  std::vector<std::string> seen_identities;
  int k = 0;
  for (const json& m : mors) {
    std::string mp = path + ".morphisms[" + std::to_string(k++) + "]";
    std::string id = str_field(m, "id", mp);
    std::string src = str_field(m, "src", mp);
    std::string dst = str_field(m, "dst", mp);
    auto it = ids.find(src);
    if (src == dst && it != ids.end() && it->is_string() && it->get<std::string>() == id) {
      b.identity(src, id);
      seen_identities.push_back(src);
    } else {
      b.morphism(id, src, dst);
    }
  }
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    if (!it.value().is_string())
      throw SchemaError(path + ".identities." + it.key() + ": expected a string");
    bool seen = false;
    for (const std::string& s : seen_identities) seen = seen || s == it.key();
    if (!seen)
      throw SchemaError(path + ".identities." + it.key() + ": '" +
                        it.value().get<std::string>() + "' is not a listed morphism " +
                        it.key() + " -> " + it.key());
  }

  const json& comp = field(j, "compose", path);
  if (!comp.is_array()) throw SchemaError(path + ".compose: expected an array");
  k = 0;
  for (const json& e : comp) {
    std::string ep = path + ".compose[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw SchemaError(ep + ": expected [f, g, h] with h = g-after-f, got " + e.dump());
    b.compose(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>());
  }
  return b.build(caps);
}

// Functors.  The map block is reused by nat_trans and square documents.

inline json functor_maps(const FinFunctor& F) {
  json j;
  j["name"] = F.name();
  const FinCat& A = F.source();
  const FinCat& B = F.target();
  json objs = json::object();
  for (ObjId a = 0; a < A.num_objects(); ++a)
    objs[A.object_name(a)] = B.object_name(F.on_obj(a));
  j["objects"] = std::move(objs);
  json mors = json::object();
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    mors[A.mor(f).name] = B.mor(F.on_mor(f)).name;
  j["morphisms"] = std::move(mors);
  return j;
}

inline FinFunctor functor_from(const json& j, CatPtr src, CatPtr tgt, const std::string& path) {
  std::vector<std::string> src_objs, src_mors, tgt_objs, tgt_mors;
  for (ObjId a = 0; a < src->num_objects(); ++a) src_objs.push_back(src->object_name(a));
  for (MorId f = 0; f < src->num_morphisms(); ++f) src_mors.push_back(src->mor(f).name);
  for (ObjId a = 0; a < tgt->num_objects(); ++a) tgt_objs.push_back(tgt->object_name(a));
  for (MorId f = 0; f < tgt->num_morphisms(); ++f) tgt_mors.push_back(tgt->mor(f).name);
  std::vector<int> omap =
      name_map(field(j, "objects", path), src_objs, tgt_objs, path + ".objects");
  std::vector<int> mmap =
      name_map(field(j, "morphisms", path), src_mors, tgt_mors, path + ".morphisms");
  return FinFunctor::validated(std::move(src), std::move(tgt), std::move(omap), std::move(mmap),
                               str_field(j, "name", path));
}

// Preorders and frames share one relational layout.

inline json order_payload(const std::string& name, const std::vector<std::string>& elems,
                          auto&& leq) {
  json j;
  j["name"] = name;
  j["elements"] = elems;
  json rel = json::array();
  const int n = static_cast<int>(elems.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) rel.push_back({elems[a], elems[b]});
  j["leq"] = std::move(rel);
  return j;
}

struct RawOrder {
  std::string name;
  std::vector<std::string> elements;
  std::vector<char> leq;
};

inline RawOrder order_from(const json& j, const std::string& path) {
  RawOrder r;
  r.name = str_field(j, "name", path);
  r.elements = string_list(field(j, "elements", path), path + ".elements");
  const int n = static_cast<int>(r.elements.size());
  r.leq.assign(static_cast<size_t>(n) * n, 0);
  const json& rel = field(j, "leq", path);
  if (!rel.is_array()) throw SchemaError(path + ".leq: expected an array of pairs");
  int k = 0;
  for (const json& e : rel) {
    std::string ep = path + ".leq[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw SchemaError(ep + ": expected [lower, upper], got " + e.dump());
    int a = resolve(r.elements, e[0].get<std::string>(), ep);
    int b = resolve(r.elements, e[1].get<std::string>(), ep);
    r.leq[static_cast<size_t>(a) * n + b] = 1;
  }
  return r;
}

// Groups.

inline json group_payload(const FinGroup& G) {
  json j;
  j["name"] = G.name();
  j["elements"] = G.elements();
  json table = json::array();
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      table.push_back(
          {G.element_name(x), G.element_name(y), G.element_name(G.mult(x, y))});
  j["table"] = std::move(table);
  return j;
}

inline GroupPtr group_from(const json& j, const std::string& path, const Caps& caps) {
  std::string name = str_field(j, "name", path);
  auto elems = string_list(field(j, "elements", path), path + ".elements");
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  const json& rows = field(j, "table", path);
  if (!rows.is_array()) throw SchemaError(path + ".table: expected an array of triples");
  int k = 0;
  for (const json& e : rows) {
    std::string ep = path + ".table[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw SchemaError(ep + ": expected [x, y, xy], got " + e.dump());
    int x = resolve(elems, e[0].get<std::string>(), ep);
    int y = resolve(elems, e[1].get<std::string>(), ep);
    table[static_cast<size_t>(x) * n + y] = resolve(elems, e[2].get<std::string>(), ep);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (table[static_cast<size_t>(x) * n + y] == -1)
        throw SchemaError(path + ".table: no product listed for ('" + elems[x] + "', '" +
                          elems[y] + "')");
  return FinGroup::validated(std::move(name), std::move(elems), std::move(table), caps);
}

// Enriched categories.

inline json vcat_body(const VCat& X) {
  json j;
  j["name"] = X.name();
  j["objects"] = X.objects();
  const FrameV& V = X.frame();
  json hom = json::array();
  for (int a = 0; a < X.size(); ++a)
    for (int b = 0; b < X.size(); ++b)
      hom.push_back({X.object_name(a), X.object_name(b), V.element_name(X.hom(a, b))});
  j["hom"] = std::move(hom);
  return j;
}

inline VCatPtr vcat_from(const json& j, FramePtr frame, const std::string& path,
                         const Caps& caps) {
  std::string name = str_field(j, "name", path);
  auto objs = string_list(field(j, "objects", path), path + ".objects");
  const int n = static_cast<int>(objs.size());
  std::vector<int> hom(static_cast<size_t>(n) * n, -1);
  const json& rows = field(j, "hom", path);
  if (!rows.is_array()) throw SchemaError(path + ".hom: expected an array of triples");
  int k = 0;
  for (const json& e : rows) {
    std::string ep = path + ".hom[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw SchemaError(ep + ": expected [x, y, hom], got " + e.dump());
    int a = resolve(objs, e[0].get<std::string>(), ep);
    int b = resolve(objs, e[1].get<std::string>(), ep);
    hom[static_cast<size_t>(a) * n + b] =
        resolve(frame->elements(), e[2].get<std::string>(), ep);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (hom[static_cast<size_t>(a) * n + b] == -1)
        throw SchemaError(path + ".hom: no value listed for ('" + objs[a] + "', '" + objs[b] +
                          "')");
  return VCat::validated(std::move(frame), std::move(name), std::move(objs), std::move(hom),
                         caps);
}

}  // namespace detail

inline json to_json(const Document& doc) {
  json j;
  j["kind"] = doc.kind();
  j["name"] = doc.name();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        using detail::cat_payload;
        using detail::functor_maps;
        if constexpr (std::is_same_v<T, CatPtr>) {
          json c = cat_payload(*p);
          c.erase("name");
          j.update(c);
        } else if constexpr (std::is_same_v<T, FinFunctor>) {
          j["source"] = cat_payload(p.source());
          j["target"] = cat_payload(p.target());
          json m = functor_maps(p);
          j["objects"] = std::move(m["objects"]);
          j["morphisms"] = std::move(m["morphisms"]);
        } else if constexpr (std::is_same_v<T, NatTrans>) {
          const FinCat& A = p.from().source();
          const FinCat& B = p.from().target();
          j["source"] = cat_payload(A);
          j["target"] = cat_payload(B);
          j["from"] = functor_maps(p.from());
          j["to"] = functor_maps(p.to());
          json comps = json::object();
          for (ObjId a = 0; a < A.num_objects(); ++a)
            comps[A.object_name(a)] = B.mor(p.at(a)).name;
          j["components"] = std::move(comps);
        } else if constexpr (std::is_same_v<T, PreordPtr>) {
          json o = detail::order_payload(p->name(), p->elements(),
                                         [&](int a, int b) { return p->leq(a, b); });
          o.erase("name");
          j.update(o);
        } else if constexpr (std::is_same_v<T, MonotoneMap>) {
          const FinPreord& X = p.source();
          j["source"] = detail::order_payload(X.name(), X.elements(),
                                              [&](int a, int b) { return X.leq(a, b); });
          const FinPreord& Y = p.target();
          j["target"] = detail::order_payload(Y.name(), Y.elements(),
                                              [&](int a, int b) { return Y.leq(a, b); });
          json m = json::object();
          for (int x = 0; x < X.size(); ++x)
            m[X.element_name(x)] = Y.element_name(p.at(x));
          j["map"] = std::move(m);
        } else if constexpr (std::is_same_v<T, GroupPtr>) {
          json g = detail::group_payload(*p);
          g.erase("name");
          j.update(g);
        } else if constexpr (std::is_same_v<T, GroupHom>) {
          j["source"] = detail::group_payload(p.source());
          j["target"] = detail::group_payload(p.target());
          json m = json::object();
          for (int x = 0; x < p.source().order(); ++x)
            m[p.source().element_name(x)] = p.target().element_name(p.at(x));
          j["map"] = std::move(m);
        } else if constexpr (std::is_same_v<T, FramePtr>) {
          json o = detail::order_payload(p->name(), p->elements(),
                                         [&](int a, int b) { return p->leq(a, b); });
          o.erase("name");
          j.update(o);
        } else if constexpr (std::is_same_v<T, VCatPtr>) {
          const FrameV& V = p->frame();
          j["frame"] = detail::order_payload(V.name(), V.elements(),
                                             [&](int a, int b) { return V.leq(a, b); });
          json b = detail::vcat_body(*p);
          b.erase("name");
          j.update(b);
        } else if constexpr (std::is_same_v<T, VFunctor>) {
          const FrameV& V = p.source().frame();
          j["frame"] = detail::order_payload(V.name(), V.elements(),
                                             [&](int a, int b) { return V.leq(a, b); });
          j["source"] = detail::vcat_body(p.source());
          j["target"] = detail::vcat_body(p.target());
          json m = json::object();
          for (int x = 0; x < p.source().size(); ++x)
            m[p.source().object_name(x)] = p.target().object_name(p.at(x));
          j["map"] = std::move(m);
        } else if constexpr (std::is_same_v<T, SquareData>) {
          j["a"] = cat_payload(p.square.top.source());
          j["b"] = cat_payload(p.square.top.target());
          j["c"] = cat_payload(p.square.bottom.source());
          j["d"] = cat_payload(p.square.bottom.target());
          j["top"] = functor_maps(p.square.top);
          j["left"] = functor_maps(p.square.left);
          j["right"] = functor_maps(p.square.right);
          j["bottom"] = functor_maps(p.square.bottom);
        }
      },
      doc.payload);
  return j;
}

inline std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

inline Document from_json(const json& j, const Caps& caps = Caps{}) {
  using namespace detail;
  std::string kind = str_field(j, "kind", "document");
  std::string name = str_field(j, "name", "document");

  if (kind == "category") return {cat_from(j, "document", caps)};

  if (kind == "functor") {
    CatPtr src = cat_from(field(j, "source", "document"), "document.source", caps);
    CatPtr tgt = cat_from(field(j, "target", "document"), "document.target", caps);
    return {functor_from(j, std::move(src), std::move(tgt), "document")};
  }

  if (kind == "nat_trans") {
    CatPtr src = cat_from(field(j, "source", "document"), "document.source", caps);
    CatPtr tgt = cat_from(field(j, "target", "document"), "document.target", caps);
    FinFunctor from = functor_from(field(j, "from", "document"), src, tgt, "document.from");
    FinFunctor to = functor_from(field(j, "to", "document"), src, tgt, "document.to");
    std::vector<std::string> objs, mors;
    for (ObjId a = 0; a < src->num_objects(); ++a) objs.push_back(src->object_name(a));
    for (MorId f = 0; f < tgt->num_morphisms(); ++f) mors.push_back(tgt->mor(f).name);
    std::vector<int> comps =
        name_map(field(j, "components", "document"), objs, mors, "document.components");
    return {NatTrans::validated(std::move(from), std::move(to), std::move(comps), name)};
  }

  if (kind == "preord") {
    RawOrder r = order_from(j, "document");
    return {FinPreord::validated(std::move(r.name), std::move(r.elements), std::move(r.leq),
                                 caps)};
  }

  if (kind == "monotone") {
    RawOrder rs = order_from(field(j, "source", "document"), "document.source");
    RawOrder rt = order_from(field(j, "target", "document"), "document.target");
    PreordPtr src = FinPreord::validated(rs.name, rs.elements, rs.leq, caps);
    PreordPtr tgt = FinPreord::validated(rt.name, rt.elements, rt.leq, caps);
    std::vector<int> map =
        name_map(field(j, "map", "document"), rs.elements, rt.elements, "document.map");
    return {MonotoneMap::validated(std::move(src), std::move(tgt), std::move(map), name)};
  }

  if (kind == "group") return {group_from(j, "document", caps)};

  if (kind == "hom") {
    GroupPtr src = group_from(field(j, "source", "document"), "document.source", caps);
    GroupPtr tgt = group_from(field(j, "target", "document"), "document.target", caps);
    std::vector<int> map =
        name_map(field(j, "map", "document"), src->elements(), tgt->elements(), "document.map");
    return {GroupHom::validated(std::move(src), std::move(tgt), std::move(map), name)};
  }

  if (kind == "frame") {
    RawOrder r = order_from(j, "document");
    return {
        FrameV::validated(std::move(r.name), std::move(r.elements), std::move(r.leq), caps)};
  }

  if (kind == "vcat") {
    RawOrder rf = order_from(field(j, "frame", "document"), "document.frame");
    FramePtr frame = FrameV::validated(rf.name, rf.elements, rf.leq, caps);
    return {vcat_from(j, std::move(frame), "document", caps)};
  }

  if (kind == "vfunctor") {
    RawOrder rf = order_from(field(j, "frame", "document"), "document.frame");
    FramePtr frame = FrameV::validated(rf.name, rf.elements, rf.leq, caps);
    VCatPtr src = vcat_from(field(j, "source", "document"), frame, "document.source", caps);
    VCatPtr tgt = vcat_from(field(j, "target", "document"), frame, "document.target", caps);
    std::vector<int> map =
        name_map(field(j, "map", "document"), src->objects(), tgt->objects(), "document.map");
    return {VFunctor::validated(std::move(src), std::move(tgt), std::move(map), name)};
  }

  if (kind == "square") {
    CatPtr a = cat_from(field(j, "a", "document"), "document.a", caps);
    CatPtr b = cat_from(field(j, "b", "document"), "document.b", caps);
    CatPtr c = cat_from(field(j, "c", "document"), "document.c", caps);
    CatPtr d = cat_from(field(j, "d", "document"), "document.d", caps);
    Square sq{functor_from(field(j, "top", "document"), a, b, "document.top"),
              functor_from(field(j, "left", "document"), a, c, "document.left"),
              functor_from(field(j, "right", "document"), b, d, "document.right"),
              functor_from(field(j, "bottom", "document"), c, d, "document.bottom")};
    check_square_commutes(sq);
    return {SquareData{std::move(name), std::move(sq)}};
  }

  throw SchemaError("document.kind: unknown kind '" + kind + "'");
}

inline Document parse(const std::string& text, const Caps& caps = Caps{}) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return from_json(j, caps);
}

inline Document load(const std::string& path, const Caps& caps = Caps{}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), caps);
}

inline void save(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << serialize(doc);
}

}  // namespace laxcat::io
