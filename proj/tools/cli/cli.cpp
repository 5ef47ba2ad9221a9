#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gallery.hpp"
#include "gpack/gpack.hpp"

namespace gpack::cli {

namespace {

struct Common {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::int64_t element_limit = kDefaultElementLimit;
  std::string output;
};

struct Emitter {
  std::ostream& out;
  const Common& common;

  void operator()(const Json& j) const {
    std::string text = j.dump(2) + "\n";
    if (common.output.empty()) {
      out << text;
      return;
    }
    std::ofstream file(common.output);
    if (!file) throw InputError("cannot write " + common.output);
    file << text;
  }
};

GroupAction load_action(const std::string& path, const std::string& kind, std::int64_t element_limit) {
  GroupAction natural(group_from_json(read_json_file(path)));
  if (kind == "natural") return natural;
  if (kind == "pairs") return induced_pair_action(natural);
  if (kind == "regular") return regular_action(natural.group, element_limit);
  throw InputError("unknown action '" + kind + "' (expected natural, pairs or regular)");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (token.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

// "1;2;4" or "0,1;1,0": characters separated by ';', coordinates by ','.
std::vector<std::vector<int>> parse_tuples(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ';')) out.push_back(parse_int_list(token));
  return out;
}

Json report_json(const PackingReport& r) { return report_to_json(r); }

struct SubsetResult {
  std::vector<int> subset;
  int rank = 0;
  bool equal_class_sizes = true;
  PackingReport report;
};

SubsetResult evaluate_subset(const IsotypicDecomposition& dec, std::vector<int> subset, bool reduce, double tol) {
  SubsetResult r;
  r.subset = std::move(subset);
  for (int j : r.subset) r.rank += dec.ranks[static_cast<std::size_t>(j)];
  GramMatrix gram = projection_from_subset(dec, r.subset);
  if (reduce) {
    auto red = projective_reduce(gram, 1e-7);
    r.equal_class_sizes = red.equal_class_sizes;
    gram = red.gram;
  }
  r.report = packing_report(gram, tol);
  return r;
}

Json subset_json(const SubsetResult& r) {
  Json j{{"subset", r.subset}, {"rank", r.rank}, {"equal_class_sizes", r.equal_class_sizes}};
  j["report"] = report_json(r.report);
  return j;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

Check verify_figure2(double tol) {
  auto action = gallery::agl_lines();
  auto scheme = scheme_from_action(action);
  auto dec = central_primitive_idempotents(scheme, 1, tol);
  auto fixture = gallery::load_figure(2);
  int rank7 = -1;
  for (int j = 0; j < dec.size(); ++j)
    if (dec.ranks[static_cast<std::size_t>(j)] == 7) rank7 = j;
  if (rank7 < 0) return {"figure2", false, "no rank-7 idempotent"};
  const int pick[] = {rank7};
  GramMatrix computed = projection_from_subset(dec, pick);
  // Equivalence up to simultaneous permutation, allowing a global sign on
  // the off-diagonal entries.
  CMatrix flipped = -fixture.entries();
  flipped.diagonal() = fixture.entries().diagonal();
  for (const GramMatrix& target : {fixture, GramMatrix(flipped)}) {
    auto [a, b] = color_gram_pair(target, computed, 1e-9);
    if (auto sigma = find_isomorphism(a, b)) {
      double mu = coherence(computed);
      bool ok = std::abs(mu - welch_bound(28, 7)) < 1e-9 && multiplicity_free(dec);
      return {"figure2", ok, "rank-7 idempotent matches fixture via " + sigma->to_cycles() + ", coherence " + fmt(mu)};
    }
  }
  return {"figure2", false, "computed rank-7 idempotent is not permutation-equivalent to the fixture"};
}

Check verify_mub(int number, int n, int d, double expected, Field field) {
  auto g = gallery::load_figure(number);
  auto r = packing_report(g, 1e-9);
  bool ok = g.n() == n && r.d == d && r.field == field && std::abs(r.coherence - expected) < 1e-9 && r.orthoplex_met &&
            r.levenstein_met;
  return {"figure" + std::to_string(number), ok,
          std::to_string(r.n) + " lines in dimension " + std::to_string(r.d) + ", coherence " + fmt(r.coherence) +
              (r.orthoplex_met ? ", orthoplex met" : ", orthoplex not met") +
              (r.levenstein_met ? ", Levenstein met" : ", Levenstein not met")};
}

Check verify_hoggar(double tol) {
  auto gens = gallery::pauli_k_generators();
  auto frame = matrix_group_orbit_gram(gens, gallery::hoggar_fiducial(), 1024);
  auto red = projective_reduce(frame.gram);
  auto r = packing_report(red.gram, tol);
  bool ok = frame.gram.n() == 256 && red.gram.n() == 64 && r.d == 8 && r.is_etf && std::abs(r.coherence - 1.0 / 3) < 1e-8;
  return {"example4.1", ok,
          std::to_string(frame.gram.n()) + " orbit vectors, " + std::to_string(red.gram.n()) + " classes, " +
              std::to_string(r.d) + "x" + std::to_string(r.n) + (r.is_etf ? " ETF" : " non-ETF") + ", coherence " +
              fmt(r.coherence)};
}

int run_verify_figures(const Common& common, const Emitter& emit) {
  std::vector<Check> checks = {verify_figure2(common.tol),
                               verify_mub(3, 12, 4, 0.5, Field::real),
                               verify_mub(4, 6, 2, 1 / std::sqrt(2.0), Field::complex),
                               verify_hoggar(common.tol)};
  Json out = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    out.push_back(Json{{"fixture", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  emit(Json{{"checks", out}, {"all_pass", all}});
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line packings from transitive group actions"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", common.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", common.seed, "random seed for idempotent extraction");
    sub->add_option("--element-limit", common.element_limit, "cap on enumerated group elements");
    sub->add_option("--output", common.output, "write JSON here instead of stdout");
  };
  Emitter emit{out, common};

  std::string group_path, action = "natural";
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("group", group_path, "group JSON file")->required();
    sub->add_option("--action", action, "natural, pairs or regular");
  };

  auto* scheme_cmd = app.add_subcommand("scheme", "orbital scheme and commutativity");
  add_common(scheme_cmd);
  add_group(scheme_cmd);

  bool with_projections = false;
  auto* idem_cmd = app.add_subcommand("idempotents", "primitive central idempotents");
  add_common(idem_cmd);
  add_group(idem_cmd);
  idem_cmd->add_flag("--projections", with_projections, "include dense projection matrices");

  bool reduce = false;
  int max_subset_size = -1;
  std::string policy = "all", subset_text;
  auto* scan_cmd = app.add_subcommand("scan-etf", "evaluate unions of isotypic projections");
  add_common(scan_cmd);
  add_group(scan_cmd);
  scan_cmd->add_flag("--reduce", reduce, "projectively reduce each Gram first");
  scan_cmd->add_option("--max-subset-size", max_subset_size, "only subsets with at most this many projections");
  scan_cmd->add_option("--policy", policy, "all or multiplicity_free_only");
  scan_cmd->add_option("--subset", subset_text, "evaluate one subset, e.g. 0,3");

  std::string gram_path;
  auto* reduce_cmd = app.add_subcommand("reduce", "projective reduction of a Gram matrix");
  add_common(reduce_cmd);
  reduce_cmd->add_option("gram", gram_path, "Gram JSON file")->required();

  std::string moduli_text = "3", parity_text = "odd";
  int gamma = 1;
  bool exact = false, floating = false, verify = false;
  auto* heis_cmd = app.add_subcommand("heisenberg", "Heisenberg ETF family");
  add_common(heis_cmd);
  heis_cmd->add_option("--moduli", moduli_text, "odd cyclic factors, e.g. 3,9");
  heis_cmd->add_option("--parity", parity_text, "even or odd");
  heis_cmd->add_option("--gamma", gamma, "exponent g of the twist z -> z^g");
  auto* exact_flag = heis_cmd->add_flag("--exact", exact, "print exact entries");
  heis_cmd->add_flag("--float", floating, "print floating entries")->excludes(exact_flag);
  heis_cmd->add_flag("--verify", verify, "compare with the direct trace computation");

  std::string characters;
  auto* harm_cmd = app.add_subcommand("harmonic", "harmonic frame from characters of an abelian group");
  add_common(harm_cmd);
  harm_cmd->add_option("--moduli", moduli_text, "cyclic factors, e.g. 7 or 2,4")->required();
  harm_cmd->add_option("--subset", characters, "characters, e.g. 1;2;4 or 0,1;1,1")->required();

  std::string colors_path;
  std::uint64_t node_cap = kDefaultNodeCap;
  auto* sym_cmd = app.add_subcommand("symmetry", "symmetry group of a Gram matrix");
  add_common(sym_cmd);
  sym_cmd->add_option("gram", gram_path, "Gram JSON file");
  sym_cmd->add_option("--assume-colors", colors_path, "JSON n x n colour matrix to use instead of a Gram");
  sym_cmd->add_option("--node-cap", node_cap, "search node budget");

  auto* fig_cmd = app.add_subcommand("verify-figures", "check the shipped matrix fixtures");
  add_common(fig_cmd);

  std::string gallery_dir = (gallery::data_dir() / "groups").string();
  auto* gallery_cmd = app.add_subcommand("gallery", "write the built-in example groups as JSON");
  gallery_cmd->add_option("--dir", gallery_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (scheme_cmd->parsed()) {
      auto act = load_action(group_path, action, common.element_limit);
      auto scheme = scheme_from_action(act);
      emit(Json{{"action", to_string(act.label)},
                {"points", act.point_count},
                {"group_order", to_string(act.group.order())},
                {"orbitals", scheme.orbital_count()},
                {"commutative", is_commutative(scheme)},
                {"scheme", scheme_to_json(scheme)}});
    } else if (idem_cmd->parsed()) {
      auto scheme = scheme_from_action(load_action(group_path, action, common.element_limit));
      auto dec = central_primitive_idempotents(scheme, common.seed, common.tol);
      emit(decomposition_to_json(dec, with_projections));
    } else if (scan_cmd->parsed()) {
      if (policy != "all" && policy != "multiplicity_free_only")
        throw InputError("unknown subset policy '" + policy + "'");
      auto scheme = scheme_from_action(load_action(group_path, action, common.element_limit));
      auto dec = central_primitive_idempotents(scheme, common.seed, common.tol);
      std::vector<SubsetResult> results;
      if (!subset_text.empty()) {
        results.push_back(evaluate_subset(dec, parse_int_list(subset_text), reduce, common.tol));
      } else {
        std::vector<int> pool;
        for (int j = 0; j < dec.size(); ++j)
          if (policy == "all" || dec.multiplicities[static_cast<std::size_t>(j)] == 1) pool.push_back(j);
        const int r = static_cast<int>(pool.size());
        const int limit = max_subset_size < 0 ? r : std::min(r, max_subset_size);
        // Count the subsets first so that the cap is enforced before any work.
        double count = 0, binom = 1;
        for (int s = 1; s <= limit; ++s) {
          binom = binom * (r - s + 1) / s;
          count += binom;
        }
        if (r > 62 || count > static_cast<double>(1 << 20))
          throw ResourceError("subset scan would visit " + fmt(count) + " subsets (cap 2^20)");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
          if (std::popcount(mask) > limit) continue;
          std::vector<int> subset;
          for (int k = 0; k < r; ++k)
            if (mask >> k & 1) subset.push_back(pool[static_cast<std::size_t>(k)]);
          results.push_back(evaluate_subset(dec, std::move(subset), reduce, common.tol));
        }
        std::stable_sort(results.begin(), results.end(), [](const SubsetResult& a, const SubsetResult& b) {
          if (a.report.is_etf != b.report.is_etf) return a.report.is_etf;
          return a.report.coherence < b.report.coherence;
        });
      }
      Json rows = Json::array();
      for (const auto& r : results) rows.push_back(subset_json(r));
      emit(Json{{"points", scheme.point_count()},
                {"ranks", dec.ranks},
                {"multiplicity_free", multiplicity_free(dec)},
                {"reduced", reduce},
                {"results", rows}});
    } else if (reduce_cmd->parsed()) {
      auto gram = gram_from_json(read_json_file(gram_path));
      auto red = projective_reduce(gram, common.tol);
      emit(Json{{"class_map", red.class_map},
                {"equal_class_sizes", red.equal_class_sizes},
                {"report", report_json(packing_report(red.gram, common.tol))},
                {"gram", gram_to_json(red.gram)}});
    } else if (heis_cmd->parsed()) {
      auto spec = heis::AbelianGroupSpec::parse(moduli_text);
      heis::Parity parity;
      if (parity_text == "even") parity = heis::Parity::even;
      else if (parity_text == "odd") parity = heis::Parity::odd;
      else throw InputError("parity must be even or odd");
      // The direct route has a size cap; hit it before the expensive work.
      std::vector<Cyclotomic> direct;
      if (verify) direct = heis::heis_etf_gram_direct(spec, {gamma}, parity);
      auto gram = heis::heis_etf_gram(spec, {gamma}, parity);
      auto fgram = gram.to_gram();
      Json j{{"moduli", spec.moduli()},
             {"parity", parity_text},
             {"gamma", gamma},
             {"exact_etf", heis::is_etf_exact(gram)},
             {"report", report_json(packing_report(fgram, common.tol))}};
      if (verify) {
        bool same = true;
        for (int u = 0; u < gram.n && same; ++u)
          for (int v = 0; v < gram.n && same; ++v)
            same = gram.entry(u, v) == direct[static_cast<std::size_t>(u) * static_cast<std::size_t>(gram.n) + static_cast<std::size_t>(v)];
        j["closed_form_equals_direct"] = same;
      }
      if (exact) j["gram"] = exact_gram_to_json(gram);
      if (floating) j["gram"] = gram_to_json(fgram);
      emit(j);
    } else if (harm_cmd->parsed()) {
      auto moduli = parse_int_list(moduli_text);
      auto subset = parse_tuples(characters);
      auto gram = harmonic_gram(moduli, subset);
      auto ds = difference_set_check(moduli, subset);
      emit(Json{{"moduli", moduli},
                {"difference_set", ds.is_difference_set},
                {"lambda", ds.lambda ? Json(*ds.lambda) : Json(nullptr)},
                {"report", report_json(packing_report(gram, common.tol))}});
    } else if (sym_cmd->parsed()) {
      ColoredDigraph graph;
      if (!colors_path.empty()) {
        auto rows = read_json_file(colors_path).get<std::vector<std::vector<int>>>();
        graph.n = static_cast<int>(rows.size());
        for (const auto& row : rows) {
          if (row.size() != rows.size()) throw InputError("colour matrix must be square");
          graph.color.insert(graph.color.end(), row.begin(), row.end());
        }
      } else if (!gram_path.empty()) {
        graph = color_gram(gram_from_json(read_json_file(gram_path)), common.tol);
      } else {
        throw InputError("symmetry needs a Gram file or --assume-colors");
      }
      auto group = automorphism_group(graph, node_cap);
      Json gens = Json::array();
      for (const auto& g : group.generators()) gens.push_back(g.to_cycles());
      emit(Json{{"n", graph.n},
                {"order", to_string(group.order())},
                {"transitive", static_cast<int>(orbit(group, 0).size()) == graph.n},
                {"generators", gens}});
    } else if (fig_cmd->parsed()) {
      return run_verify_figures(common, emit);
    } else if (gallery_cmd->parsed()) {
      std::filesystem::create_directories(gallery_dir);
      Json written = Json::array();
      for (const auto& [name, act] : gallery::named_actions()) {
        auto path = std::filesystem::path(gallery_dir) / (name + ".json");
        std::ofstream file(path);
        if (!file) throw InputError("cannot write " + path.string());
        file << group_to_json(act.group).dump() << "\n";
        written.push_back(path.string());
      }
      emit(Json{{"written", written}});
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace gpack::cli
