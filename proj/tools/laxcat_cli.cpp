// Command line surface over the library.  One command per invocation; every
// command reads self-contained JSON documents, prints a one-line verdict (or
// a JSON report with --json) and exits 0 for true/success, 1 for a false
// verdict with witness, 2 for unusable input.

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laxcat/corpus.hpp"
#include "laxcat/dot.hpp"
#include "laxcat/io.hpp"

using namespace laxcat;
using io::json;

namespace {

std::string now_iso() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

/// Collects the human lines and the JSON report side by side; exactly one of
/// the two is printed.
struct Output {
  bool as_json = false;
  json report;
  std::vector<std::string> lines;

  void begin(const std::string& command) {
    report["command"] = command;
    report["timestamp"] = now_iso();
  }
  void line(std::string s) { lines.push_back(std::move(s)); }
  void flush() {
    if (as_json) {
      std::cout << report.dump(2) << "\n";
    } else {
      for (const std::string& l : lines) std::cout << l << "\n";
    }
  }
};

std::string stem_of(const std::string& file) {
  std::string s = std::filesystem::path(file).filename().string();
  if (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0) s.resize(s.size() - 5);
  return s;
}

json comma_triple_json(const FinFunctor& F, const CommaTriple& t) {
  return json{{"in", F.target().mor(t.h).name},
              {"object", F.source().object_name(t.a)},
              {"out", F.target().mor(t.k).name}};
}

int run_laxepi(const std::string& file, int probe_order, Output& out, const Caps& caps) {
  io::Document doc = io::load(file, caps);
  out.begin("laxepi");
  out.report["input"] = file;
  out.report["document"] = doc.name();
  out.report["document_kind"] = doc.kind();
  bool value = false;

  if (const auto* F = std::get_if<FinFunctor>(&doc.payload)) {
    LaxEpiVerdict v = is_lax_epi(*F);
    value = v.value;
    if (v.value) {
      out.line(doc.name() + ": lax epimorphism");
    } else {
      const FinCat& B = F->target();
      json w;
      w["g"] = B.mor(v.witness->g).name;
      w["reason"] = v.witness->empty ? "empty" : "disconnected";
      if (v.witness->split_pair)
        w["separated"] = json::array({comma_triple_json(*F, v.witness->split_pair->first),
                                      comma_triple_json(*F, v.witness->split_pair->second)});
      out.report["witness"] = std::move(w);
      out.line(doc.name() + ": not a lax epimorphism (comma over '" + B.mor(v.witness->g).name +
               "' is " + (v.witness->empty ? "empty" : "disconnected") + ")");
    }
  } else if (const auto* f = std::get_if<MonotoneMap>(&doc.payload)) {
    OrderVerdict v = is_lax_epi_preord(*f);
    value = v.value;
    if (v.value) {
      out.line(doc.name() + ": lax epimorphism of preorders");
    } else {
      std::string e = f->target().element_name(*v.witness);
      out.report["witness"] = json{{"element", e}};
      out.line(doc.name() + ": not a lax epimorphism ('" + e +
               "' is not equivalent to any image point)");
    }
  } else if (const auto* h = std::get_if<GroupHom>(&doc.payload)) {
    GrpVerdict v = is_lax_epi_grp(*h);
    value = v.value;
    if (v.value) {
      out.line(doc.name() + ": lax epimorphism of groups (surjective)");
    } else {
      json w;
      w["element"] = h->target().element_name(*v.witness);
      std::vector<GroupPtr> probes = {h->target_ptr()};
      for (const GroupPtr& g : corpus::probe_groups())
        if (g->order() <= probe_order) probes.push_back(g);
      if (auto r = grp_lax_epi_refutation(*h, probes, caps)) {
        json ref;
        ref["through"] = r->u.target().name();
        json um = json::object(), vm = json::object();
        for (int x = 0; x < h->target().order(); ++x) {
          um[h->target().element_name(x)] = r->u.target().element_name(r->u.at(x));
          vm[h->target().element_name(x)] = r->v.target().element_name(r->v.at(x));
        }
        ref["u"] = std::move(um);
        ref["v"] = std::move(vm);
        ref["gamma"] = r->u.target().element_name(r->gamma);
        w["refutation"] = std::move(ref);
      }
      out.report["witness"] = std::move(w);
      out.line(doc.name() + ": not a lax epimorphism ('" +
               h->target().element_name(*v.witness) + "' is never hit)");
    }
  } else if (const auto* j = std::get_if<VFunctor>(&doc.payload)) {
    VMeetVerdict meet = is_vlax_epi_meet(*j, caps);
    VDensityVerdict dens = is_vlax_epi_density(*j);
    if (meet.value != dens.value)
      throw InternalCheckFailed("meet and density criteria disagree");
    value = dens.value;
    out.report["meet_criterion"] = meet.value;
    out.report["density_criterion"] = dens.value;
    if (value) {
      out.line(doc.name() + ": enriched lax epimorphism (both criteria)");
    } else {
      const VCat& Y = j->target();
      const FrameV& V = Y.frame();
      json w;
      w["B"] = Y.object_name(dens.witness->B);
      w["b"] = Y.object_name(dens.witness->b);
      w["through_image"] = V.element_name(dens.witness->sup);
      w["hom"] = V.element_name(dens.witness->hom);
      out.report["witness"] = std::move(w);
      out.line(doc.name() + ": not an enriched lax epimorphism (hom(" +
               Y.object_name(dens.witness->B) + ", " + Y.object_name(dens.witness->b) +
               ") = " + V.element_name(dens.witness->hom) + " but only " +
               V.element_name(dens.witness->sup) + " factors through the image)");
    }
  } else {
    throw SchemaError("laxepi cannot judge a '" + std::string(doc.kind()) + "' document");
  }
  out.report["verdict"] = value;
  return value ? 0 : 1;
}

int run_dsb(const std::string& file, Output& out, const Caps& caps) {
  io::Document doc = io::load(file, caps);
  out.begin("dsb");
  out.report["input"] = file;
  out.report["document"] = doc.name();
  const auto* F = std::get_if<FinFunctor>(&doc.payload);
  if (!F) throw SchemaError("dsb expects a functor document, got '" +
                            std::string(doc.kind()) + "'");
  DsbVerdict v = is_dsb(*F);
  out.report["verdict"] = v.value;
  if (v.value) {
    FunctorProperties p = derived_properties(*F);
    out.report["derived"] = json{{"faithful", p.faithful},
                                 {"conservative", p.conservative},
                                 {"reflects_identities", p.reflects_identities}};
    out.line(doc.name() + ": discrete splitting bifibration");
  } else {
    out.report["witness"] =
        json{{"over", F->target().mor(v.witness->diagram.g).name},
             {"lifts", v.witness->lifts.size()}};
    out.line(doc.name() + ": not a discrete splitting bifibration (diagram over '" +
             F->target().mor(v.witness->diagram.g).name + "' has " +
             std::to_string(v.witness->lifts.size()) + " lifts)");
  }
  return v.value ? 0 : 1;
}

int run_factorize(const std::string& file, const std::string& out_dir, Output& out,
                  const Caps& caps) {
  io::Document doc = io::load(file, caps);
  out.begin("factorize");
  out.report["input"] = file;
  const auto* F = std::get_if<FinFunctor>(&doc.payload);
  if (!F) throw SchemaError("factorize expects a functor document, got '" +
                            std::string(doc.kind()) + "'");
  Factorization fac = factorize(*F, caps);
  std::filesystem::path dir(out_dir);
  std::string stem = stem_of(file);
  std::string mid_file = (dir / (stem + ".mid.json")).string();
  std::string left_file = (dir / (stem + ".left.json")).string();
  std::string right_file = (dir / (stem + ".right.json")).string();
  io::save({fac.mid}, mid_file);
  io::save({fac.left}, left_file);
  io::save({fac.right}, right_file);
  out.report["mid"] = mid_file;
  out.report["left"] = left_file;
  out.report["right"] = right_file;
  out.report["right_is_iso"] = is_isomorphism_functor(fac.right);
  out.line(doc.name() + ": lax epi followed by bifibration through '" + fac.mid->name() + "'");
  out.line("wrote " + mid_file + ", " + left_file + ", " + right_file);
  return 0;
}

int run_fillin(const std::string& file, const std::string& out_dir, Output& out,
               const Caps& caps) {
  io::Document doc = io::load(file, caps);
  out.begin("fillin");
  out.report["input"] = file;
  const auto* sq = std::get_if<io::SquareData>(&doc.payload);
  if (!sq) throw SchemaError("fillin expects a square document, got '" +
                             std::string(doc.kind()) + "'");
  FinFunctor t = diagonal_fill_in(sq->square, caps);
  std::string t_file =
      (std::filesystem::path(out_dir) / (stem_of(file) + ".diagonal.json")).string();
  io::save({t}, t_file);
  out.report["diagonal"] = t_file;
  json maps = json::object();
  for (ObjId b = 0; b < t.source().num_objects(); ++b)
    maps[t.source().object_name(b)] = t.target().object_name(t.on_obj(b));
  out.report["objects"] = std::move(maps);
  out.line(sq->name + ": unique diagonal found");
  out.line("wrote " + t_file);
  return 0;
}

int run_inserter(const std::string& f_file, const std::string& g_file, const std::string& prefix,
                 Output& out, const Caps& caps) {
  io::Document fd = io::load(f_file, caps);
  io::Document gd = io::load(g_file, caps);
  out.begin("inserter");
  out.report["input"] = json::array({f_file, g_file});
  const auto* F = std::get_if<FinFunctor>(&fd.payload);
  const auto* G = std::get_if<FinFunctor>(&gd.payload);
  if (!F || !G) throw SchemaError("inserter expects two functor documents");
  Inserter ins = make_inserter(*F, *G, caps);
  std::string cat_file = prefix + ".category.json";
  std::string proj_file = prefix + ".projection.json";
  std::string cell_file = prefix + ".cell.json";
  io::save({ins.category}, cat_file);
  io::save({ins.projection}, proj_file);
  io::save({ins.cell}, cell_file);
  out.report["category"] = cat_file;
  out.report["projection"] = proj_file;
  out.report["cell"] = cell_file;
  out.report["objects"] = ins.category->num_objects();
  out.report["morphisms"] = ins.category->num_morphisms();
  bool dsb = is_dsb(ins.projection).value;
  out.report["projection_is_dsb"] = dsb;
  if (!dsb) throw InternalCheckFailed("inserter projection failed the bifibration check");
  out.line("inserter of '" + F->name() + "' and '" + G->name() + "': " +
           std::to_string(ins.category->num_objects()) + " objects, " +
           std::to_string(ins.category->num_morphisms()) + " morphisms");
  out.line("wrote " + cat_file + ", " + proj_file + ", " + cell_file);
  return 0;
}

int run_coinserter(const std::string& f_file, const std::string& g_file,
                   const std::string& prefix, bool verify_universal, Output& out,
                   const Caps& caps) {
  io::Document fd = io::load(f_file, caps);
  io::Document gd = io::load(g_file, caps);
  out.begin("coinserter");
  out.report["input"] = json::array({f_file, g_file});
  const auto* f = std::get_if<MonotoneMap>(&fd.payload);
  const auto* g = std::get_if<MonotoneMap>(&gd.payload);
  if (!f || !g) throw SchemaError("coinserter expects two monotone documents");
  Coinserter c = make_coinserter(*f, *g, caps);
  std::string obj_file = prefix + ".preord.json";
  std::string arr_file = prefix + ".coprojection.json";
  io::save({c.object}, obj_file);
  io::save({c.arrow}, arr_file);
  out.report["preord"] = obj_file;
  out.report["coprojection"] = arr_file;
  out.line("coinserter of '" + f->name() + "' and '" + g->name() + "': '" + c.object->name() +
           "' with " + std::to_string(c.object->size()) + " elements");
  if (verify_universal) {
    bool ok = true;
    json probes = json::array();
    for (const PreordPtr& Z : {corpus::pre_point(), corpus::pre_arrow_pair(),
                               corpus::pre_iso_pair(), corpus::pre_vee(), corpus::pre_chain3()}) {
      bool here = coinserter_universal_ok(*f, *g, c, Z, caps);
      probes.push_back({{"probe", Z->name()}, {"ok", here}});
      ok = ok && here;
    }
    out.report["universal"] = ok;
    out.report["probes"] = std::move(probes);
    out.line(ok ? "universal property verified against the probe preorders"
                : "universal property FAILED");
    if (!ok) {
      out.report["verdict"] = false;
      return 1;
    }
  }
  out.line("wrote " + obj_file + ", " + arr_file);
  return 0;
}

int run_vlaxepi(const std::string& file, Output& out, const Caps& caps) {
  io::Document doc = io::load(file, caps);
  if (!std::holds_alternative<VFunctor>(doc.payload))
    throw SchemaError("vlaxepi expects a vfunctor document, got '" + std::string(doc.kind()) +
                      "'");
  int rc = run_laxepi(file, 8, out, caps);
  out.report["command"] = "vlaxepi";
  return rc;
}

int run_dot(const std::string& file, const std::string& out_file, const std::string& comma_over,
            Output& out, const Caps& caps) {
  io::Document doc = io::load(file, caps);
  out.begin("dot");
  out.report["input"] = file;
  std::string text;
  if (const auto* C = std::get_if<CatPtr>(&doc.payload)) {
    text = dot_category(**C);
  } else if (const auto* p = std::get_if<PreordPtr>(&doc.payload)) {
    text = dot_category(*as_category(**p, caps));
  } else if (const auto* g = std::get_if<GroupPtr>(&doc.payload)) {
    text = dot_category(*as_category(**g, caps));
  } else if (const auto* F = std::get_if<FinFunctor>(&doc.payload)) {
    if (comma_over.empty())
      throw SchemaError("dot on a functor needs --comma <target morphism>");
    auto g = F->target().mor_index(comma_over);
    if (!g) throw SchemaError("--comma: '" + comma_over + "' is not a morphism of '" +
                              F->target().name() + "'");
    text = dot_comma(CommaOverMorphism(*F, *g));
  } else {
    throw SchemaError("dot expects a category, preord, group or functor document, got '" +
                      std::string(doc.kind()) + "'");
  }
  if (out_file.empty()) {
    if (!out.as_json) std::cout << text;
    out.report["output"] = "-";
  } else {
    std::ofstream o(out_file, std::ios::binary);
    if (!o) throw ParseError("cannot write '" + out_file + "'");
    o << text;
    out.report["output"] = out_file;
    out.line("wrote " + out_file);
  }
  out.report["bytes"] = text.size();
  return 0;
}

int run_validate(const std::vector<std::string>& files, Output& out, const Caps& caps) {
  out.begin("validate");
  json docs = json::array();
  for (const std::string& file : files) {
    io::Document doc = io::load(file, caps);
    docs.push_back({{"file", file}, {"kind", doc.kind()}, {"name", doc.name()}});
    out.line("ok: " + std::string(doc.kind()) + " '" + doc.name() + "' (" + file + ")");
  }
  out.report["documents"] = std::move(docs);
  out.report["verdict"] = true;
  return 0;
}

int run_selftest(Output& out, const Caps& caps) {
  out.begin("selftest");
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"ok", ok}});
    all = all && ok;
    out.line(std::string(ok ? "ok:   " : "FAIL: ") + name);
  };

  {
    FinFunctor P = corpus::pair_into_arrow();
    FinFunctor E = corpus::point_into_iso();
    LaxEpiVerdict vp = is_lax_epi(P);
    check("pair inclusion refuted at its extra arrow",
          !vp.value && P.target().mor(vp.witness->g).name == "aA");
    check("one-point equivalence is a lax epimorphism", is_lax_epi(E).value);
    check("equivalence is not a bifibration, inclusion is",
          !is_dsb(E).value && is_dsb(P).value);
    check("orthogonality holds exactly across the two classes",
          verify_orthogonal(E, P, caps) && !verify_orthogonal(E, E, caps) &&
              !verify_orthogonal(P, P, caps));
  }
  {
    bool ok = true;
    for (const FinFunctor& F :
         {corpus::pair_into_arrow(), corpus::point_into_iso(), corpus::arrow_embed_J(),
          corpus::collapse_to_a()}) {
      Factorization fac = factorize(F, caps);
      ok = ok && compose(fac.left, fac.right) == F &&
           is_lax_epi(F).value == is_isomorphism_functor(fac.right);
    }
    check("factorization recomposes and mirrors the verdict", ok);
  }
  {
    Square sq = corpus::fillin_square().square;
    FinFunctor t = diagonal_fill_in(sq, caps);
    check("shipped square has its diagonal",
          compose(sq.top, t) == sq.left && compose(t, sq.bottom) == sq.right);
  }
  {
    Inserter ins = make_inserter(corpus::arrow_embed_J(), corpus::arrow_embed_K(), caps);
    check("inserter projection is a bifibration", is_dsb(ins.projection).value);
    check("pair inclusion is that inserter's projection",
          match_inserter_projection(corpus::pair_into_arrow(), corpus::arrow_embed_J(),
                                    corpus::arrow_embed_K(), caps)
              .has_value());
  }
  {
    MonotoneMap f = corpus::pair_into_arrow_pre();
    check("order shadow diverges from the categorical verdict",
          is_lax_epi_preord(f).value && !is_lax_epi(as_functor(f)).value);
    CommaSquare comma = comma_preord(f, f, caps);
    Coinserter c = make_coinserter(comma.pi1, comma.pi2, caps);
    check("coinserter of the comma projections recovers the chain",
          *c.object == *corpus::pre_arrow_pair() &&
              coinserter_universal_ok(comma.pi1, comma.pi2, c, corpus::pre_vee(), caps));
  }
  {
    std::vector<GroupPtr> probes = corpus::probe_groups();
    GroupHom inc = corpus::z2_into_s3();
    GroupHom sgn = corpus::s3_sign();
    check("subgroup inclusion is refuted, the sign map is not",
          grp_lax_epi_refutation(inc, probes, caps).has_value() &&
              !grp_lax_epi_refutation(sgn, probes, caps).has_value());
    check("one-object bridge agrees with surjectivity",
          is_lax_epi(as_functor(inc)).value == is_surjective_hom(inc) &&
              is_lax_epi(as_functor(sgn)).value == is_surjective_hom(sgn));
  }
  {
    bool ok = true;
    for (const VCatPtr& y : {corpus::vcat_asym_pair(), corpus::vcat_sym_pair(),
                             corpus::vcat_iso_pair(), corpus::vcat_chain3()})
      for (unsigned mask = 0; mask < (1u << y->size()); ++mask) {
        std::vector<std::string> objs;
        for (int i = 0; i < y->size(); ++i)
          if (mask & (1u << i)) objs.push_back(y->object_name(i));
        VFunctor j = sub_inclusion(y, objs, "sub");
        ok = ok && is_vlax_epi_meet(j, caps).value == is_vlax_epi_density(j).value;
      }
    check("enriched meet and density criteria agree", ok);
  }
  {
    bool ok = true;
    for (const auto& entry : corpus::corpus_documents()) {
      std::string text = io::serialize(entry.doc);
      ok = ok && io::serialize(io::parse(text, caps)) == text;
    }
    check("every shipped document round-trips", ok);
  }

  out.report["checks"] = std::move(checks);
  out.report["verdict"] = all;
  out.line(all ? "selftest passed" : "selftest FAILED");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lax epimorphisms between finite categories, preorders, groups and"
               " frame-enriched categories: verdicts, factorizations and pictures."};
  app.require_subcommand(1);

  Output out;
  Caps caps;
  int probe_order = 8;
  app.add_flag("--json", out.as_json, "print a JSON report instead of text");
  app.add_option("--max-objects", caps.max_objects, "object cap for parsed documents");
  app.add_option("--max-morphisms", caps.max_morphisms, "morphism cap for parsed documents");

  std::vector<std::string> validate_files;
  std::string laxepi_file, dsb_file, fact_file, fill_file, vlax_file, dot_file;
  std::string ins_f, ins_g, coins_f, coins_g;
  std::string out_dir = ".";
  std::string ins_prefix = "inserter", coins_prefix = "coinserter";
  std::string dot_out, dot_comma_over;
  bool verify_universal = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and re-check documents");
  validate->add_option("files", validate_files, "documents to validate")->required();

  CLI::App* laxepi = app.add_subcommand(
      "laxepi", "decide the lax epimorphism property of a functor, monotone map,"
                " group homomorphism or enriched functor");
  laxepi->add_option("file", laxepi_file, "document to judge")->required();
  laxepi->add_option("--probe-order", probe_order,
                     "largest probe group order for the refutation search");

  CLI::App* dsb =
      app.add_subcommand("dsb", "decide the discrete splitting bifibration property");
  dsb->add_option("file", dsb_file, "functor document")->required();

  CLI::App* fact = app.add_subcommand(
      "factorize", "split a functor into a lax epimorphism followed by a bifibration");
  fact->add_option("file", fact_file, "functor document")->required();
  fact->add_option("--out-dir", out_dir, "directory for the three output documents");

  CLI::App* fill =
      app.add_subcommand("fillin", "construct the unique diagonal of a square document");
  fill->add_option("file", fill_file, "square document")->required();
  fill->add_option("--out-dir", out_dir, "directory for the diagonal document");

  CLI::App* ins = app.add_subcommand("inserter", "build the inserter of a parallel pair");
  ins->add_option("f", ins_f, "first functor document")->required();
  ins->add_option("g", ins_g, "second functor document")->required();
  ins->add_option("--out", ins_prefix, "prefix for the output documents");

  CLI::App* coins =
      app.add_subcommand("coinserter", "build the coinserter of a parallel pair of monotone maps");
  coins->add_option("f", coins_f, "first monotone document")->required();
  coins->add_option("g", coins_g, "second monotone document")->required();
  coins->add_option("--out", coins_prefix, "prefix for the output documents");
  coins->add_flag("--verify-universal", verify_universal,
                  "check the universal property against the builtin probe preorders");

  CLI::App* vlax = app.add_subcommand(
      "vlaxepi", "decide the enriched lax epimorphism property by both criteria");
  vlax->add_option("file", vlax_file, "vfunctor document")->required();

  CLI::App* dot = app.add_subcommand("dot", "draw a document as a Graphviz digraph");
  dot->add_option("file", dot_file, "category, preord, group or functor document")->required();
  dot->add_option("-o,--out", dot_out, "write the graph here instead of stdout");
  dot->add_option("--comma", dot_comma_over,
                  "for a functor document: draw the comma category over this target morphism,"
                  " one color per connected component");

  CLI::App* self = app.add_subcommand("selftest", "run the built-in invariant suite");

  for (CLI::App* sub : {validate, laxepi, dsb, fact, fill, ins, coins, vlax, dot, self})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    int rc = 2;
    if (*validate) rc = run_validate(validate_files, out, caps);
    else if (*laxepi) rc = run_laxepi(laxepi_file, probe_order, out, caps);
    else if (*dsb) rc = run_dsb(dsb_file, out, caps);
    else if (*fact) rc = run_factorize(fact_file, out_dir, out, caps);
    else if (*fill) rc = run_fillin(fill_file, out_dir, out, caps);
    else if (*ins) rc = run_inserter(ins_f, ins_g, ins_prefix, out, caps);
    else if (*coins) rc = run_coinserter(coins_f, coins_g, coins_prefix, verify_universal, out, caps);
    else if (*vlax) rc = run_vlaxepi(vlax_file, out, caps);
    else if (*dot) rc = run_dot(dot_file, dot_out, dot_comma_over, out, caps);
    else if (*self) rc = run_selftest(out, caps);
    out.flush();
    return rc;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
