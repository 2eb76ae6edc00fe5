// confgroup: configuration sets of finitely generated groups from the command line.

#include <confgroup/commands.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace confgroup;
using namespace confgroup::cli;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[8192];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::input, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration sets of finitely generated groups"};
  app.require_subcommand(1);
  GlobalOptions global;
  std::string out_path;
  std::string manifest_path;
  bool assert_verdict = false;
  app.add_option("--threads", global.threads, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "seed for sampled checks");
  app.add_option("--budget", global.budget, "candidate budget for searches and enumerations");
  app.add_option("--out", out_path, "write the result document here instead of stdout");
  app.add_option("--manifest", manifest_path, "write a run manifest (inputs, digests, parameters, timing)");
  app.add_flag("--assert", assert_verdict, "exit with status 3 when the verdict is negative");

  ConArgs con;
  auto* c_con = app.add_subcommand("con", "configuration set of (gens, partition)");
  c_con->add_option("--group", con.group)->required();
  c_con->add_option("--partition", con.partition)->required();
  c_con->add_option("--gen", con.gens, "generator (repeatable, in order); default: standard generators");
  c_con->add_option("--radius", con.radius, "ball radius for infinite engines");
  c_con->add_option("--window", con.window, "stability window");

  ContainArgs contain;
  std::string verify_path;
  auto* c_contain = app.add_subcommand("contain", "bounded check of Con(G) <= Con(H)");
  c_contain->add_option("--G", contain.group_g)->required();
  c_contain->add_option("--H", contain.group_h)->required();
  c_contain->add_option("--max-n", contain.max_n);
  c_contain->add_option("--max-m", contain.max_m);
  c_contain->add_option("--verify", contain.verify, "re-check this certificate instead of searching");

  ContainArgs equiv;
  auto* c_equiv = app.add_subcommand("equiv", "bounded check of Con(G) = Con(H)");
  c_equiv->add_option("--G", equiv.group_g)->required();
  c_equiv->add_option("--H", equiv.group_h)->required();
  c_equiv->add_option("--max-n", equiv.max_n);
  c_equiv->add_option("--max-m", equiv.max_m);

  StrongArgs strong;
  auto* c_strong = app.add_subcommand("strong", "strong containment with fixed generating tuples");
  c_strong->add_option("--G", strong.group_g)->required();
  c_strong->add_option("--H", strong.group_h)->required();
  c_strong->add_option("--gen-g", strong.gens_g, "generator of G (repeatable)");
  c_strong->add_option("--gen-h", strong.gens_h, "generator of H (repeatable); default: image under an isomorphism");
  c_strong->add_option("--max-m", strong.max_m);
  c_strong->add_option("--verify", strong.verify, "re-check this certificate instead of searching");

  GoldenArgs golden;
  std::string checks;
  auto* c_golden = app.add_subcommand("golden", "verify a golden configuration pair family");
  c_golden->add_option("--family", golden.family, "free, dinf or znf")->required();
  c_golden->add_option("--rank", golden.rank);
  c_golden->add_option("--finite", golden.finite, "group file of the finite factor (znf)");
  c_golden->add_option("--checks", checks, "comma list: translation, absorption, coverage, implication, configurations");
  c_golden->add_option("--max-len", golden.max_len);
  c_golden->add_option("--radius", golden.radius);
  c_golden->add_option("--window", golden.window);
  c_golden->add_flag("--corrupt", golden.corrupt, "swap blocks 2 and 3 (negative control)");
  c_golden->add_option("--rival-group", golden.rival_group);
  c_golden->add_option("--rival-partition", golden.rival_partition);
  c_golden->add_option("--rival-gen", golden.rival_gens);
  c_golden->add_option("--rival-identity-label", golden.rival_identity_label);

  WordsArgs words;
  auto* c_words = app.add_subcommand("words", "representative-pair calculus");
  c_words->add_option("op", words.op, "eval, concat, inverse, commutator, reduce, is-reduced, first-derivation")->required();
  c_words->add_option("pairs", words.pairs, "signed index lists, e.g. \"+1 -2\"");
  c_words->add_option("--group", words.group);
  c_words->add_option("--gen", words.gens);
  c_words->add_option("--n", words.n, "generator slots (default: from --group or the pairs)");

  DerivedArgs derived;
  auto* c_derived = app.add_subcommand("derived", "derivation forms, derived series, inner automorphisms");
  c_derived->add_option("op", derived.op, "gen, series or inn")->required();
  c_derived->add_option("--n", derived.n);
  c_derived->add_option("--k", derived.k);
  c_derived->add_option("--count", derived.budget, "number of pairs to emit");
  c_derived->add_option("--start", derived.start);
  c_derived->add_option("--group", derived.group);
  c_derived->add_option("--gen", derived.gens);

  LawArgs law;
  auto* c_law = app.add_subcommand("law", "check a group law");
  c_law->add_option("--group", law.group)->required();
  c_law->add_option("--law", law.law, "abelian, metabelian, exponent:k or a signed index word");
  c_law->add_option("--vars", law.vars);
  c_law->add_option("--mode", law.mode, "all, ball or sample");
  c_law->add_option("--radius", law.radius);
  c_law->add_option("--samples", law.samples);

  LocalhomArgs lh;
  auto* c_lh = app.add_subcommand("localhom", "tau relation, local homomorphisms, epimorphisms, separation");
  c_lh->add_option("op", lh.op, "pairsets, tau, check, epi or separate")->required();
  c_lh->add_option("--G", lh.group_g);
  c_lh->add_option("--H", lh.group_h);
  c_lh->add_option("--gen-g", lh.gens_g);
  c_lh->add_option("--gen-h", lh.gens_h);
  c_lh->add_option("--max-len", lh.max_len);
  c_lh->add_option("--n", lh.n);
  c_lh->add_option("--n0", lh.n0);
  c_lh->add_option("--base", lh.base, "all, ball:r or elements separated by ';'");
  c_lh->add_option("--p1", lh.p1);
  c_lh->add_option("--p2", lh.p2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_input;
  }

  const auto started = std::chrono::steady_clock::now();
  CommandResult result;
  std::string name;
  if (*c_con) {
    name = "con";
    result = guarded(run_con, con, global);
  } else if (*c_contain) {
    name = "contain";
    result = guarded(run_contain, contain, global);
  } else if (*c_equiv) {
    name = "equiv";
    result = guarded(run_equiv, equiv, global);
  } else if (*c_strong) {
    name = "strong";
    result = guarded(run_strong, strong, global);
  } else if (*c_golden) {
    name = "golden";
    golden.checks = cli::detail::split(checks, ',');
    result = guarded(run_golden, golden, global);
  } else if (*c_words) {
    name = "words";
    result = guarded(run_words, words, global);
  } else if (*c_derived) {
    name = "derived";
    result = guarded(run_derived, derived, global);
  } else if (*c_law) {
    name = "law";
    result = guarded(run_law, law, global);
  } else if (*c_lh) {
    name = "localhom";
    result = guarded(run_localhom, lh, global);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  int status = result.status;
  try {
    write_text(out_path, result.doc.dump(2) + "\n");
    if (!manifest_path.empty()) {
      Json m;
      m["subcommand"] = name;
      m["arguments"] = std::vector<std::string>(argv + 1, argv + argc);
      Json inputs = Json::array();
      for (const auto& p : result.inputs) inputs.push_back({{"path", p}, {"sha256", sha256_file(p)}});
      m["inputs"] = std::move(inputs);
      m["threads"] = global.threads;
      m["seed"] = global.seed;
      m["budget"] = global.budget;
      m["toolkit_version"] = kToolkitVersion;
      m["exit_status"] = status;
      m["wall_seconds"] = seconds;
      write_text(manifest_path, m.dump(2) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_input;
  }
  if (status == exit_ok && assert_verdict && result.verdict && !*result.verdict) status = exit_assert;
  return status;
}
