#include <confgroup/commands.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace confgroup;
using namespace confgroup::cli;

namespace {

std::string data(const std::string& rel) { return std::string(CONFGROUP_DATA_DIR) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(CONFGROUP_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Io, LoadsBundledGroups) {
  EXPECT_EQ(load_group(data("groups/z6.json")).order(), 6u);
  EXPECT_EQ(load_group(data("groups/s3_perm.json")).order(), 6u);
  EXPECT_EQ(load_group(data("groups/s3_table.json")).order(), 6u);
  EXPECT_EQ(load_group(data("groups/s4_perm.json")).order(), 24u);
  EXPECT_EQ(load_group(data("groups/free2.json")).kind(), Group::Kind::free);
  EXPECT_EQ(load_group(data("groups/dinf.json")).kind(), Group::Kind::dihedral_infinite);
  EXPECT_EQ(load_group(data("groups/z_x_z2.json")).kind(), Group::Kind::product_zn_f);
}

TEST(Io, RejectsBrokenDocuments) {
  try {
    load_group(data("groups/bad_table.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::input);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
  EXPECT_THROW(load_group(temp_file("unknown_kind.json", R"({"kind": "lattice"})")), Error);
  EXPECT_THROW(load_group(data("groups/missing.json")), Error);
  const Group z4 = load_group(data("groups/z4.json"));
  EXPECT_THROW(partition_from_json(Json::parse(R"({"kind":"explicit-finite","blocks":[["0","1"],["1","2","3"]]})"), z4),
               Error);
}

TEST(Io, PartitionKinds) {
  const Group f2 = load_group(data("groups/free2.json"));
  const auto ffl = load_partition(data("partitions/free_first_letter.json"), f2);
  EXPECT_EQ(ffl.block_count(), 5u);
  const auto rival = load_partition(data("partitions/free2_rival.json"), f2);
  EXPECT_EQ(rival.kind(), Partition::Kind::ball_explicit);
  EXPECT_EQ(rival.classify(f2.parse("f1 f2")), 1u);
  EXPECT_THROW(load_partition(data("partitions/dinf_five_block.json"), f2), Error);
}

TEST(Io, CertificateRoundTrip) {
  const Group g = corpus::symmetric(3), h = corpus::cyclic(6);
  const auto cert = configuration_contained(g, h, 2, 3);
  const auto doc = certificate_json(cert, g, h);
  const auto back = certificate_from_json(doc, g, h);
  EXPECT_EQ(back.verdict, cert.verdict);
  EXPECT_EQ(back.witness, cert.witness);
  EXPECT_EQ(back.witness_configurations, cert.witness_configurations);
  EXPECT_EQ(certificate_json(back, g, h).dump(), doc.dump());
}

TEST(Commands, ConExactSets) {
  const GlobalOptions o;
  auto r = run_con(ConArgs{data("groups/z2.json"), data("partitions/z2_singletons.json"), {"1"}, {}, 2}, o);
  EXPECT_EQ(r.doc["configurations"], Json::parse("[[1,2],[2,1]]"));
  EXPECT_EQ(r.doc["exactness"], "exact");
  r = run_con(ConArgs{data("groups/z4.json"), data("partitions/z4_zero_rest.json"), {"1"}, {}, 2}, o);
  EXPECT_EQ(r.doc["configurations"], Json::parse("[[1,2],[2,1],[2,2]]"));
}

TEST(Commands, ConOnInfiniteEngineNeedsRadius) {
  const GlobalOptions o;
  const ConArgs a{data("groups/dinf.json"), data("partitions/dinf_five_block.json"), {}, {}, 2};
  const auto r = guarded(run_con, a, o);
  EXPECT_EQ(r.status, exit_input);
  EXPECT_EQ(r.doc["error"]["kind"], "input");
  ConArgs b = a;
  b.radius = 8;
  const auto ok = guarded(run_con, b, o);
  EXPECT_EQ(ok.status, exit_ok);
  EXPECT_EQ(ok.doc["saturated"], true);
}

TEST(Commands, ContainAndVerify) {
  GlobalOptions o;
  ContainArgs a{data("groups/s3_table.json"), data("groups/z6.json"), 2, 3, ""};
  const auto r = run_contain(a, o);
  EXPECT_EQ(r.doc["verdict"], "not-contained");
  EXPECT_EQ(r.verdict, false);
  const auto path = temp_file("s3_z6_cert.json", r.doc.dump(2));
  a.verify = path;
  const auto v = run_contain(a, o);
  EXPECT_EQ(v.doc["valid"], true);
  // Tampered witness labels no longer reproduce the recorded set.
  Json bad = r.doc;
  bad["witness"]["configurations"] = Json::parse("[[1,1,1]]");
  a.verify = temp_file("s3_z6_bad.json", bad.dump());
  EXPECT_EQ(run_contain(a, o).doc["valid"], false);
}

TEST(Commands, BudgetMapsToExitTwo) {
  GlobalOptions o;
  o.budget = 10;
  const auto r = guarded(run_contain, ContainArgs{data("groups/s4_perm.json"), data("groups/s4_perm.json"), 2, 3, ""}, o);
  EXPECT_EQ(r.status, exit_budget);
  EXPECT_EQ(r.doc["error"]["kind"], "budget");
}

TEST(Commands, StrongDefaultsToIsomorphismImage) {
  StrongArgs a{data("groups/s3_table.json"), data("groups/s3_perm.json"), {}, {}, 3, ""};
  const auto r = run_strong(a, GlobalOptions{});
  EXPECT_EQ(r.doc["verdict"], "contained-within-bounds");
  EXPECT_EQ(r.doc["generators_h_source"], "isomorphism");
}

TEST(Commands, GoldenDefaultsPassAndCorruptionFails) {
  GoldenArgs a;
  a.family = "free";
  a.radius = 5;
  a.max_len = 4;
  EXPECT_EQ(run_golden(a, GlobalOptions{}).doc["passed"], true);
  a.corrupt = true;
  EXPECT_EQ(run_golden(a, GlobalOptions{}).doc["passed"], false);
  GoldenArgs rival;
  rival.family = "free";
  rival.checks = {"implication"};
  rival.max_len = 3;
  rival.radius = 4;
  rival.rival_partition = data("partitions/free2_rival.json");
  EXPECT_EQ(run_golden(rival, GlobalOptions{}).doc["passed"], false);
}

TEST(Commands, WordsDerivedLawLocalhom) {
  const GlobalOptions o;
  auto w = run_words(WordsArgs{"eval", {"+1 -2"}, data("groups/free2.json"), {}, {}}, o);
  EXPECT_EQ(w.doc["value"], "f1 f2^-1");
  auto c = run_words(WordsArgs{"commutator", {"+1", "+2"}, "", {}, {}}, o);
  EXPECT_EQ(c.doc["result"]["pair"], "-1 -2 +1 +2");
  DerivedArgs d;
  d.op = "inn";
  d.group = data("groups/d4_perm.json");
  EXPECT_EQ(run_derived(d, o).doc["inn_order"], 4);
  LawArgs l;
  l.group = data("groups/s3_perm.json");
  EXPECT_EQ(run_law(l, o).doc["holds"], false);
  LocalhomArgs e;
  e.op = "epi";
  e.group_g = data("groups/z2.json");
  e.group_h = data("groups/z4.json");
  e.gens_g = {"1"};
  e.gens_h = {"1"};
  e.max_len = 4;
  EXPECT_EQ(run_localhom(e, o).doc["witness"]["pair"], "+1 +1");
}

TEST(Commands, DocumentsIndependentOfThreads) {
  GlobalOptions one, eight;
  eight.threads = 8;
  const ContainArgs a{data("groups/z4.json"), data("groups/v4.json"), 2, 4, ""};
  EXPECT_EQ(run_contain(a, one).doc.dump(), run_contain(a, eight).doc.dump());
  const ContainArgs b{data("groups/s3_perm.json"), data("groups/s3_table.json"), 2, 2, ""};
  EXPECT_EQ(run_contain(b, one).doc.dump(), run_contain(b, eight).doc.dump());
}
