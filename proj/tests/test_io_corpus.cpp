#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "laxcat/corpus.hpp"
#include "laxcat/dot.hpp"
#include "laxcat/io.hpp"
#include "laxcat/laxepi.hpp"

using namespace laxcat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool payload_equal(const io::Payload& x, const io::Payload& y) {
  if (x.index() != y.index()) return false;
  switch (x.index()) {
    case 0: return *std::get<CatPtr>(x) == *std::get<CatPtr>(y);
    case 1: return std::get<FinFunctor>(x) == std::get<FinFunctor>(y);
    case 2: return std::get<NatTrans>(x) == std::get<NatTrans>(y);
    case 3: return *std::get<PreordPtr>(x) == *std::get<PreordPtr>(y);
    case 4: return std::get<MonotoneMap>(x) == std::get<MonotoneMap>(y);
    case 5: return *std::get<GroupPtr>(x) == *std::get<GroupPtr>(y);
    case 6: return std::get<GroupHom>(x) == std::get<GroupHom>(y);
    case 7: return *std::get<FramePtr>(x) == *std::get<FramePtr>(y);
    case 8: return *std::get<VCatPtr>(x) == *std::get<VCatPtr>(y);
    case 9: return std::get<VFunctor>(x) == std::get<VFunctor>(y);
    case 10: {
      const auto& a = std::get<io::SquareData>(x).square;
      const auto& b = std::get<io::SquareData>(y).square;
      return a.top == b.top && a.left == b.left && a.right == b.right && a.bottom == b.bottom;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("every shipped document survives a round trip") {
  for (const auto& entry : corpus::corpus_documents()) {
    INFO(entry.file);
    std::string text = io::serialize(entry.doc);
    io::Document back = io::parse(text);
    CHECK(back.kind() == std::string(entry.doc.kind()));
    CHECK(back.name() == entry.doc.name());
    CHECK(payload_equal(back.payload, entry.doc.payload));
    CHECK(io::serialize(back) == text);
  }
}

TEST_CASE("the checked-in corpus matches the builders byte for byte") {
  int files = 0;
  for (const auto& entry : corpus::corpus_documents()) {
    INFO(entry.file);
    CHECK(slurp(std::string(CORPUS_DIR) + "/" + entry.file) == io::serialize(entry.doc));
    ++files;
  }
  CHECK(files >= 60);
  for (const auto& r : corpus::corpus_rejects()) {
    INFO(r.file);
    CHECK(slurp(std::string(CORPUS_DIR) + "/rejects/" + r.file) == r.doc.dump(2) + "\n");
  }
}

TEST_CASE("the counterexample file carries its verdict") {
  io::Document doc = io::load(std::string(CORPUS_DIR) + "/coinserter_counterexample.json");
  REQUIRE(doc.kind() == std::string("functor"));
  const auto& P = std::get<FinFunctor>(doc.payload);
  LaxEpiVerdict v = is_lax_epi(P);
  REQUIRE_FALSE(v.value);
  REQUIRE(P.target().mor(v.witness->g).name == "aA");
}

TEST_CASE("the square file admits its diagonal") {
  io::Document doc = io::load(std::string(CORPUS_DIR) + "/fillin_square.json");
  REQUIRE(doc.kind() == std::string("square"));
  const Square& sq = std::get<io::SquareData>(doc.payload).square;
  FinFunctor t = diagonal_fill_in(sq);
  CHECK(compose(sq.top, t) == sq.left);
  CHECK(compose(t, sq.bottom) == sq.right);
}

TEST_CASE("each reject fails for its own reason") {
  auto parse_reject = [](const std::string& file) {
    for (const auto& r : corpus::corpus_rejects())
      if (r.file == file) return io::parse(r.doc.dump());
    throw std::runtime_error("no reject named " + file);
  };
  CHECK_THROWS_AS(parse_reject("nat_mixed_components.json"), NotNatural);
  CHECK_THROWS_AS(parse_reject("m3_frame.json"), NotDistributive);
  CHECK_THROWS_AS(parse_reject("compose_entry_missing.json"), MissingComposite);
  CHECK_THROWS_AS(parse_reject("preord_not_transitive.json"), ValidationError);
  CHECK_THROWS_AS(parse_reject("latin_not_group.json"), NotAGroup);
  CHECK_THROWS_AS(parse_reject("map_not_monotone.json"), NotMonotone);
  CHECK_THROWS_AS(parse_reject("hom_not_multiplicative.json"), NotAHomomorphism);
  CHECK_THROWS_AS(parse_reject("vcat_bad_unit.json"), NotEnriched);
  CHECK_THROWS_AS(parse_reject("unknown_kind.json"), SchemaError);
  CHECK_THROWS_WITH(parse_reject("compose_pair_malformed.json"),
                    Catch::Matchers::ContainsSubstring("gFA") &&
                        Catch::Matchers::ContainsSubstring("KaA"));
  CHECK_THROWS_AS(parse_reject("compose_pair_malformed.json"), SchemaError);

  SECTION("the disk copies fail the same way") {
    for (const auto& r : corpus::corpus_rejects()) {
      INFO(r.file);
      CHECK_THROWS_AS(io::load(std::string(CORPUS_DIR) + "/rejects/" + r.file), Error);
    }
  }
}

TEST_CASE("diagnostics name the offending field") {
  CHECK_THROWS_AS(io::parse("{ \"kind\": "), ParseError);
  CHECK_THROWS_AS(io::parse("[1, 2]"), SchemaError);
  CHECK_THROWS_WITH(io::parse(R"({"kind": "category", "name": "x"})"),
                    Catch::Matchers::ContainsSubstring("objects"));

  io::json j = io::to_json({corpus::pair_into_arrow()});
  SECTION("functor object map must cover the source") {
    j["objects"].erase("FA");
    CHECK_THROWS_WITH(io::parse(j.dump()),
                      Catch::Matchers::ContainsSubstring("missing entry for 'FA'"));
  }
  SECTION("map values must be declared downstairs") {
    j["objects"]["FA"] = "ZZ";
    CHECK_THROWS_WITH(io::parse(j.dump()), Catch::Matchers::ContainsSubstring("'ZZ'"));
  }
  SECTION("duplicate keys are caught by the json layer, stray keys by ours") {
    j["morphisms"]["extra"] = "idFA";
    CHECK_THROWS_WITH(io::parse(j.dump()), Catch::Matchers::ContainsSubstring("'extra'"));
  }
  SECTION("unreadable paths") {
    CHECK_THROWS_AS(io::load("/nonexistent/nowhere.json"), ParseError);
  }
}

TEST_CASE("dot output is deterministic and suppresses identities") {
  CatPtr iso = corpus::walking_iso();
  std::string d = dot_category(*iso);
  CHECK(d == dot_category(*iso));
  CHECK(d.find("digraph") == 0);
  CHECK(d.find("\"a\" -> \"b\" [label=\"f\"]") != std::string::npos);
  CHECK(d.find("\"b\" -> \"a\" [label=\"fi\"]") != std::string::npos);
  CHECK(d.find("ida") == std::string::npos);
  CHECK(d.find("idb") == std::string::npos);
}

TEST_CASE("comma pictures color the components") {
  FinFunctor P = corpus::pair_into_arrow();
  MorId aA = P.target().mor_index("aA").value();
  CommaOverMorphism comma(P, aA);
  REQUIRE(comma.num_objects() == 2);
  REQUIRE(comma.num_components() == 2);
  std::string d = dot_comma(comma);
  CHECK(d.find("fillcolor=lightblue") != std::string::npos);
  CHECK(d.find("fillcolor=lightyellow") != std::string::npos);
  CHECK(d.find("(idFA, FA, aA)") != std::string::npos);
  CHECK(d.find("(aA, GA, idGA)") != std::string::npos);

  // A connected comma paints everything the same color.
  FinFunctor E = corpus::point_into_iso();
  MorId ida = E.target().mor_index("ida").value();
  std::string con = dot_comma(CommaOverMorphism(E, ida));
  CHECK(con.find("lightyellow") == std::string::npos);
}
