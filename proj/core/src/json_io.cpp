#include "gpack/json_io.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "gpack/error.hpp"

namespace gpack {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

PermutationGroup group_from_json(const Json& j) {
  try {
    const int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      if (g.is_string()) {
        gens.push_back(Permutation::from_cycles(g.get<std::string>(), degree));
      } else {
        auto images = g.get<std::vector<int>>();
        if (static_cast<int>(images.size()) != degree) throw InputError("generator length differs from degree");
        gens.emplace_back(std::move(images));
      }
    }
    return PermutationGroup(degree, std::move(gens));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group JSON: ") + e.what());
  }
}

Json group_to_json(const PermutationGroup& group) {
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(std::vector<int>(g.images().begin(), g.images().end()));
  return Json{{"degree", group.degree()}, {"generators", gens}};
}

Json scheme_to_json(const SchurianScheme& scheme) {
  Json orbitals = Json::array();
  for (int i = 0; i < scheme.orbital_count(); ++i) {
    Json rows = Json::array();
    for (int x = 0; x < scheme.point_count(); ++x) rows.push_back(Json::array({x, scheme.row(i, x)}));
    orbitals.push_back(std::move(rows));
  }
  return Json{{"n", scheme.point_count()},
              {"orbitals", orbitals},
              {"valencies", std::vector<int>(scheme.valencies().begin(), scheme.valencies().end())},
              {"transpose", std::vector<int>(scheme.transpose_pairing().begin(), scheme.transpose_pairing().end())}};
}

namespace {

// Rounds away floating noise so that repeated runs print identical text.
double tidy(double x) {
  double r = std::round(x * 1e12) / 1e12;
  return r == 0 ? 0.0 : r;
}

Json complex_json(Complex z) { return Json::array({tidy(z.real()), tidy(z.imag())}); }

Json optional_ints(const std::vector<std::optional<int>>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x ? Json(*x) : Json(nullptr));
  return out;
}

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json decomposition_to_json(const IsotypicDecomposition& dec, bool with_projections) {
  Json coeffs = Json::array();
  for (Eigen::Index j = 0; j < dec.coefficients.rows(); ++j) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < dec.coefficients.cols(); ++i) row.push_back(complex_json(dec.coefficients(j, i)));
    coeffs.push_back(std::move(row));
  }
  Json out{{"ranks", dec.ranks},
           {"m", optional_ints(dec.degrees)},
           {"n", optional_ints(dec.multiplicities)},
           {"trivial_index", dec.trivial_index},
           {"multiplicity_free", multiplicity_free(dec)},
           {"coefficients", coeffs}};
  if (with_projections) {
    Json ps = Json::array();
    for (const auto& p : dec.projections) ps.push_back(matrix_json(p));
    out["projections"] = std::move(ps);
  }
  return out;
}

GramMatrix gram_from_json(const Json& j) {
  try {
    const auto& rows = j.at("entries");
    const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(rows.size());
    if (static_cast<int>(rows.size()) != n) throw InputError("Gram row count differs from n");
    double num = 1, den = 1;
    if (j.contains("scale")) {
      num = j.at("scale").at(0).get<double>();
      den = j.at("scale").at(1).get<double>();
      if (den == 0) throw InputError("Gram scale has zero denominator");
    }
    bool exact = true;
    CMatrix m(n, n);
    std::vector<std::pair<long long, long long>> keys;
    for (int r = 0; r < n; ++r) {
      const auto& row = rows.at(static_cast<std::size_t>(r));
      if (static_cast<int>(row.size()) != n) throw InputError("Gram row has wrong length");
      for (int c = 0; c < n; ++c) {
        const auto& e = row.at(static_cast<std::size_t>(c));
        Json re = e.is_array() ? e.at(0) : e;
        Json im = e.is_array() ? e.at(1) : Json(0);
        exact = exact && re.is_number_integer() && im.is_number_integer();
        if (exact) keys.emplace_back(re.get<long long>(), im.get<long long>());
        m(r, c) = Complex(re.get<double>(), im.get<double>()) * (num / den);
      }
    }
    std::vector<int> colors;
    if (exact) {
      std::map<std::pair<long long, long long>, int> ids;
      for (const auto& k : keys) colors.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
    }
    return GramMatrix(std::move(m), exact ? Exactness::rational : Exactness::floating, std::move(colors));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Gram JSON: ") + e.what());
  }
}

Json gram_to_json(const GramMatrix& gram) { return Json{{"n", gram.n()}, {"entries", matrix_json(gram.entries())}}; }

Json report_to_json(const PackingReport& r) {
  Json moduli = Json::array();
  for (double m : r.distinct_offdiag_moduli) moduli.push_back(tidy(m));
  return Json{{"n", r.n},
              {"d", r.d},
              {"field", r.field == Field::real ? "real" : "complex"},
              {"coherence", tidy(r.coherence)},
              {"welch", tidy(r.welch)},
              {"welch_met", r.welch_met},
              {"orthoplex_applicable", r.orthoplex_applicable},
              {"orthoplex_met", r.orthoplex_met},
              {"levenstein_applicable", r.levenstein_applicable},
              {"levenstein_met", r.levenstein_met},
              {"is_etf", r.is_etf},
              {"is_tight", r.is_tight},
              {"distinct_offdiag_moduli", moduli}};
}

Json exact_gram_to_json(const heis::ExactRootGram& gram) {
  Json rows = Json::array();
  for (int i = 0; i < gram.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < gram.n; ++j) {
      auto k = static_cast<std::size_t>(i) * static_cast<std::size_t>(gram.n) + static_cast<std::size_t>(j);
      const auto& c = gram.coefficient[k];
      row.push_back(Json{{"coeff_num", numerator(c).convert_to<long long>()},
                         {"coeff_den", denominator(c).convert_to<long long>()},
                         {"zeta_num", gram.exponent[k]},
                         {"zeta_den", gram.modulus}});
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", gram.n}, {"entries", rows}};
}

}  // namespace gpack
