// Command-line surface for the 2-determinantal toolkit: KW classification,
// canonical block matrices, blowup relations and their Groebner certificates,
// elimination kernels, initial complexes, degeneration posets, flat families,
// and multiplicity cross-checks. Standard output carries data; diagnostics go
// to standard error. Exit codes: 0 ok, 2 failed certificate, 3 bad input,
// 4 cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twodet/twodet.hpp"

namespace {

using namespace twodet;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::cap_exceeded: return 4;
    case Errc::certificate: return 2;
    case Errc::non_split:
    case Errc::not_maximal_codim:
    case Errc::cone:
    case Errc::input: return 3;
    case Errc::internal: return 70;
  }
  return 70;
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(path);
    require(f.good(), Errc::input, "cannot open output file " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
};

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), Errc::input, "cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& ex) {
    fail(Errc::input, std::string("bad json in ") + path + ": " + ex.what());
  }
  return j;
}

Field field_from_env_or(const std::string& flag) {
  if (!flag.empty()) return Field::parse(flag);
  if (const char* env = std::getenv("TWODET_FIELD")) return Field::parse(env);
  return kDefaultOracleField;
}

std::optional<int> cap_from_env_or(int flag) {
  if (flag >= 0) return flag;
  if (const char* env = std::getenv("TWODET_DEGREE_CAP")) return std::atoi(env);
  return std::nullopt;
}

std::vector<Scalar> parse_scalar_list(Field f, const std::string& csv) {
  std::vector<Scalar> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(f, item));
  return out;
}

Partition parse_partition(const std::string& csv) {
  Partition out;
  if (csv.empty() || csv == "-") return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twodet;
  CLI::App app{"exact toolkit for 2-determinantal ideals and their blowup algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string field_flag, out_path;
  bool quiet = false, verbose = false;
  int cap_flag = -1;
  uint64_t seed = 1;
  app.add_option("--field", field_flag, "coefficient field: rational | fp:P");
  app.add_option("--output,-o", out_path, "write the report here instead of stdout");
  app.add_option("--degree-cap", cap_flag, "degree cap for basis computations");
  app.add_option("--seed", seed, "seed for randomized verifications");
  app.add_flag("--quiet", quiet, "suppress progress notes on stderr");
  app.add_flag("--verbose", verbose, "extra progress notes on stderr");

  // classify <matrix.json>
  std::string classify_path;
  auto* cmd_classify = app.add_subcommand("classify", "KW type of a matrix of linear forms");
  cmd_classify->add_option("matrix", classify_path, "matrix json file")->required();

  // normal-form <blocks.json>
  std::string blocks_path;
  auto* cmd_nf = app.add_subcommand("normal-form", "canonical matrix of a block list");
  cmd_nf->add_option("blocks", blocks_path, "block list json file")->required();

  // relations --d --e [--family]
  int rd = 0, re = 0;
  std::string family_flag;
  auto* cmd_rel = app.add_subcommand("relations", "relation families with leading monomials");
  cmd_rel->add_option("--d", rd)->required();
  cmd_rel->add_option("--e", re)->required();
  cmd_rel->add_option("--family", family_flag, "UEN | LEN | PLU | LAP");

  // gb-verify --d --e [--fiber|--rees] [--oracle] [--log]
  int gd = 0, ge = 0;
  bool g_fiber = false, g_rees = false, g_oracle = false, g_log = false;
  auto* cmd_gb = app.add_subcommand("gb-verify", "Groebner certificates for the blowup ideals");
  cmd_gb->add_option("--d", gd)->required();
  cmd_gb->add_option("--e", ge)->required();
  cmd_gb->add_flag("--fiber", g_fiber);
  cmd_gb->add_flag("--rees", g_rees);
  cmd_gb->add_flag("--oracle", g_oracle, "also compare with the elimination kernel");
  cmd_gb->add_flag("--log", g_log, "include the full S-pair log");

  // kernel --d --e [--fiber|--rees]
  int kd = 0, ke = 0;
  bool k_fiber = false, k_rees = false;
  auto* cmd_kernel = app.add_subcommand("kernel", "elimination kernel generators");
  cmd_kernel->add_option("--d", kd)->required();
  cmd_kernel->add_option("--e", ke)->required();
  cmd_kernel->add_flag("--fiber", k_fiber);
  cmd_kernel->add_flag("--rees", k_rees);

  // complex --which F|R --d --e <facets|fvector|cm|betti|count>
  std::string c_which, c_what = "count";
  int cd = 0, ce = 0;
  auto* cmd_complex = app.add_subcommand("complex", "initial complex census and homology");
  cmd_complex->add_option("--which", c_which, "F | R")->required();
  cmd_complex->add_option("--d", cd)->required();
  cmd_complex->add_option("--e", ce)->required();
  cmd_complex->add_option("what", c_what, "facets | fvector | cm | betti | count");

  // poset --c --d [--dot out.dot]
  int pc = 0, pd = 0;
  std::string dot_path;
  auto* cmd_poset = app.add_subcommand("poset", "degeneration poset of KW strata");
  cmd_poset->add_option("--c", pc)->required();
  cmd_poset->add_option("--d", pd)->required();
  cmd_poset->add_option("--dot", dot_path, "also write a DOT file here");

  // family --move peel|merge --lambda ... --mu ... --eigenvalues ...
  std::string f_move, f_lambda, f_mu, f_eigen, f_samples = "0,1,2", f_eps = "1";
  int f_j = 1, f_h = 1, f_k = 2, f_bound = 6;
  auto* cmd_family = app.add_subcommand("family", "parametric degeneration with flatness report");
  cmd_family->add_option("--move", f_move, "peel | merge")->required();
  cmd_family->add_option("--lambda", f_lambda, "scroll partition, comma separated");
  cmd_family->add_option("--mu", f_mu, "Jordan partition, comma separated");
  cmd_family->add_option("--eigenvalues", f_eigen, "Jordan eigenvalues, comma separated");
  cmd_family->add_option("--j", f_j, "scroll part to peel (1-based)");
  cmd_family->add_option("--jh", f_h, "first Jordan part to merge");
  cmd_family->add_option("--jk", f_k, "second Jordan part to merge");
  cmd_family->add_option("--eps", f_eps, "peel parameter");
  cmd_family->add_option("--samples", f_samples, "parameter samples, comma separated");
  cmd_family->add_option("--bound", f_bound, "Hilbert function degree bound");

  // invariants --c --d [--csv]
  int ic = 0, id = 0;
  bool inv_csv = false;
  auto* cmd_inv = app.add_subcommand("invariants", "multiplicity / dimension cross-check");
  cmd_inv->add_option("--c", ic)->required();
  cmd_inv->add_option("--d", id)->required();
  cmd_inv->add_flag("--csv", inv_csv, "emit the summary table as CSV");

  CLI11_PARSE(app, argc, argv);

  Output out{out_path};
  try {
    Field field = field_from_env_or(field_flag);
    std::optional<int> cap = cap_from_env_or(cap_flag);

    if (*cmd_classify) {
      LinearMatrix2 m = matrix_from_json(read_json_file(classify_path), field);
      try {
        KWType t = classify(m, seed);
        json j = kwtype_to_json(t);
        j["schema"] = 1;
        out.write(j.dump(2));
      } catch (const Error& e) {
        out.write(error_json(e).dump(2));
        return exit_code_for(e);
      }
      return 0;
    }

    if (*cmd_nf) {
      std::vector<Block> blocks = blocks_from_json(read_json_file(blocks_path), field);
      BlockMatrix bm = build_matrix(blocks, field);
      out.write(matrix_to_json(bm.matrix).dump(2));
      return 0;
    }

    if (*cmd_rel) {
      BlowupPresentation p(rd, re, field);
      std::optional<RelFamily> only;
      if (!family_flag.empty()) {
        if (family_flag == "UEN") only = RelFamily::UEN;
        else if (family_flag == "LEN") only = RelFamily::LEN;
        else if (family_flag == "PLU") only = RelFamily::PLU;
        else if (family_flag == "LAP") only = RelFamily::LAP;
        else fail(Errc::input, "unknown family " + family_flag);
      }
      RelationSet rels = all_relations(p, only);
      json list = json::array();
      for (size_t i = 0; i < rels.ids.size(); ++i) {
        Polynomial lm = Polynomial::term(p.ring(), rels.lms[i], Scalar::one(field));
        list.push_back(json{{"id", rels.ids[i].str()},
                            {"polynomial", rels.polys[i].str()},
                            {"leading_monomial", lm.str()}});
      }
      out.write(json{{"schema", 1},
                     {"d", rd},
                     {"e", re},
                     {"count", rels.ids.size()},
                     {"relations", list}}
                    .dump(2));
      return 0;
    }

    if (*cmd_gb) {
      require(g_fiber != g_rees, Errc::input, "choose exactly one of --fiber / --rees");
      BlowupPresentation p(gd, ge, field);
      if (verbose)
        std::cerr << "verifying the " << (g_fiber ? "fiber" : "Rees") << " family at (d,e)=("
                  << gd << "," << ge << ") over " << field.str() << "\n";
      TheoremCertificate cert =
          g_fiber ? verify_fiber_theorem(p, g_oracle) : verify_rees_theorem(p, g_oracle);
      out.write(certificate_json(cert, p, g_log).dump(2));
      if (!cert.ok()) {
        std::cerr << "certificate failed\n";
        return 2;
      }
      return 0;
    }

    if (*cmd_kernel) {
      require(k_fiber != k_rees, Errc::input, "choose exactly one of --fiber / --rees");
      BlowupPresentation p(kd, ke, field);
      auto [kernel, gb] =
          k_fiber ? fiber_kernel_oracle(p, cap.has_value(), cap)
                  : rees_kernel_oracle(p, cap.has_value(), cap);
      json gens = json::array();
      for (auto& g : kernel.gens) gens.push_back(g.str());
      out.write(json{{"schema", 1},
                     {"d", kd},
                     {"e", ke},
                     {"side", k_fiber ? "fiber" : "rees"},
                     {"field", field.str()},
                     {"generator_count", kernel.gens.size()},
                     {"generators", gens}}
                    .dump(2));
      return 0;
    }

    if (*cmd_complex) {
      require(c_which == "F" || c_which == "R", Errc::input, "--which must be F or R");
      SimplicialComplex K = c_which == "F" ? build_delta_F(cd, ce) : build_delta_R(cd, ce);
      if (c_what == "count") {
        json j{{"schema", 1},
               {"which", c_which},
               {"d", cd},
               {"e", ce},
               {"facet_count", K.facets.size()},
               {"pure", K.pure()},
               {"facet_size", K.facets.empty() ? 0 : K.facets.front().size()}};
        bool formula_applies =
            c_which == "F" || (cd == 1 && ce >= 4);
        if (formula_applies)
          j["formula"] = count_formula(c_which == "F" ? WhichComplex::F : WhichComplex::R, cd, ce);
        out.write(j.dump(2));
        return 0;
      }
      if (c_what == "facets") {
        if (c_which == "F") facets_cross_checked(K);  // engine agreement
        out.write(complex_to_json(K).dump(2));
        return 0;
      }
      if (c_what == "fvector") {
        std::vector<long> f = f_vector(K);
        HilbertData hd = sr_hilbert(K);
        std::string csv = "dimension,count\n";
        for (size_t i = 0; i < f.size(); ++i)
          csv += std::to_string(static_cast<int>(i) - 1) + "," + std::to_string(f[i]) + "\n";
        csv += "# krull_dim=" + std::to_string(hd.dim) +
               " multiplicity=" + hd.multiplicity.get_str() + "\n";
        out.write(csv);
        return 0;
      }
      if (c_what == "cm") {
        ReisnerReport over_q = reisner_cm(K.face_set(), Field::rationals());
        ReisnerReport over_2 = reisner_cm(K.face_set(), Field::fp(2));
        json j{{"schema", 1},
               {"which", c_which},
               {"d", cd},
               {"e", ce},
               {"cohen_macaulay_rational", over_q.cohen_macaulay},
               {"cohen_macaulay_f2", over_2.cohen_macaulay},
               {"faces_checked", over_q.faces_checked}};
        out.write(j.dump(2));
        return over_q.cohen_macaulay && over_2.cohen_macaulay ? 0 : 2;
      }
      if (c_what == "betti") {
        BettiTable t = hochster_betti(K.face_set(), field.is_rational() ? field : Field::rationals());
        std::string tsv = "i\tj\tbeta\n";
        for (auto& [ij, v] : t.beta)
          tsv += std::to_string(ij.first) + "\t" + std::to_string(ij.second) + "\t" +
                 std::to_string(v) + "\n";
        out.write(tsv);
        return 0;
      }
      fail(Errc::input, "unknown complex subcommand: " + c_what);
    }

    if (*cmd_poset) {
      Poset P = poset(pc, pd);
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        require(f.good(), Errc::input, "cannot open " + dot_path);
        f << P.dot("H_" + std::to_string(pc) + "_" + std::to_string(pd));
      }
      out.write(poset_to_json(P).dump(2));
      return P.closure_matches_criterion ? 0 : 2;
    }

    if (*cmd_family) {
      Partition lambda = parse_partition(f_lambda);
      Partition mu = parse_partition(f_mu);
      std::vector<Scalar> eigen =
          f_eigen.empty() ? std::vector<Scalar>{} : parse_scalar_list(field, f_eigen);
      if (eigen.empty())
        for (size_t i = 0; i < mu.size(); ++i)
          eigen.push_back(Scalar::of_int(field, static_cast<long long>(i + 2)));
      require(eigen.size() == mu.size(), Errc::input,
              "need one eigenvalue per Jordan part");
      std::vector<Block> blocks;
      for (int part : lambda) blocks.push_back(Block::scroll(part));
      for (size_t i = 0; i < mu.size(); ++i) blocks.push_back(Block::jordan(mu[i], eigen[i]));
      ParametricFamily fam =
          f_move == "peel"
              ? family_peel(blocks, f_j, Scalar::parse(field, f_eps), field)
              : f_move == "merge"
                    ? family_merge(blocks, f_h, f_k, field)
                    : (fail(Errc::input, "move must be peel or merge"), ParametricFamily{});
      std::vector<Scalar> samples = parse_scalar_list(field, f_samples);
      FlatnessReport rep = flatness_check(fam, samples, f_bound);
      json hf = json::array();
      for (auto& row : rep.hf) {
        json r = json::array();
        for (auto& v : row) r.push_back(v.get_str());
        hf.push_back(std::move(r));
      }
      json types = json::array();
      for (auto& t : rep.fiber_types) types.push_back(t.str());
      json sm = json::array();
      for (auto& s : rep.samples) sm.push_back(s.str());
      json j{{"schema", 1},
             {"move", f_move},
             {"source", fam.source.label()},
             {"target", fam.target.label()},
             {"generic_matrix", matrix_to_json(fam.generic_matrix())["rows"]},
             {"samples", sm},
             {"hilbert_functions", hf},
             {"fiber_types", types},
             {"hilbert_functions_agree", rep.hilbert_functions_agree},
             {"types_match_claims", rep.types_match_claims}};
      out.write(j.dump(2));
      return rep.hilbert_functions_agree && rep.types_match_claims ? 0 : 2;
    }

    if (*cmd_inv) {
      if (verbose) std::cerr << "cross-checking invariants at (c,d)=(" << ic << "," << id << ")\n";
      InvariantReport rep = cross_check(ic, id);
      if (inv_csv) {
        std::ostringstream csv;
        csv << "quantity,formula,census,series,oracle\n";
        csv << "fiber_mult," << rep.formula_fiber_mult << "," << rep.census_fiber_mult << ","
            << rep.sr_fiber_mult << "," << (rep.oracle_ran ? std::to_string(rep.oracle_fiber_mult) : "-")
            << "\n";
        csv << "fiber_dim," << rep.formula_fiber_dim << "," << rep.census_fiber_dim << ","
            << rep.sr_fiber_dim << "," << (rep.oracle_ran ? std::to_string(rep.oracle_fiber_dim) : "-")
            << "\n";
        if (rep.rees_available) {
          csv << "rees_mult," << rep.formula_rees_mult << "," << rep.census_rees_mult << ","
              << rep.sr_rees_mult << ","
              << (rep.oracle_rees_ran ? std::to_string(rep.oracle_rees_mult) : "-") << "\n";
          csv << "rees_dim,-," << rep.census_rees_dim << "," << rep.sr_rees_dim << ","
              << (rep.oracle_rees_ran ? std::to_string(rep.oracle_rees_dim) : "-") << "\n";
        }
        out.write(csv.str());
      } else {
        out.write(invariants_to_json(rep).dump(2));
      }
      return rep.ok() ? 0 : 2;
    }

    fail(Errc::input, "no subcommand");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (out_path.empty()) std::cout << error_json(e).dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
