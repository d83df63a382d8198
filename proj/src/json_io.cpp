#include "spectral/json_io.hpp"

namespace spectral {

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t n = j.size();
  std::vector<ExactComplex> entries;
  entries.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw ParseError("matrix must be square");
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("matrix entries must be exact rational strings");
      entries.push_back(ExactComplex::parse(cell.get<std::string>()));
    }
  }
  return CMatrix(n, std::move(entries));
}

Json signs_to_json(const KOSigns& s) {
  return Json{{"eps", to_int(s.eps)}, {"eps_prime", to_int(s.eps_prime)}, {"eps_dprime", to_int(s.eps_dprime)}};
}

KOSigns signs_from_json(const Json& j) {
  try {
    return {sign_from_int(j.at("eps").get<int>()), sign_from_int(j.at("eps_prime").get<int>()),
            sign_from_int(j.at("eps_dprime").get<int>())};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad sign triple: ") + e.what());
  }
}

Json triple_to_json(const RealSpectralTriple& t) {
  Json j;
  j["hilbert_dim"] = t.hilbert_dim;
  j["algebra_generators"] = Json::array();
  for (const auto& a : t.algebra_gens) j["algebra_generators"].push_back(matrix_to_json(a));
  j["dirac"] = matrix_to_json(t.dirac);
  j["real_structure"] = Json{{"linear_part", matrix_to_json(t.real_structure.linear_part())}};
  if (t.grading.is_nontrivial()) {
    j["grading"] = Json{{"kind", "nontrivial"}, {"matrix", matrix_to_json(t.grading.matrix())}};
  } else {
    j["grading"] = Json{{"kind", "trivial"}, {"eps_dprime", to_int(t.grading.label())}};
  }
  j["metadata"] = t.metadata;
  return j;
}

RealSpectralTriple triple_from_json(const Json& j) {
  try {
    RealSpectralTriple t;
    t.hilbert_dim = j.at("hilbert_dim").get<std::size_t>();
    for (const auto& a : j.at("algebra_generators")) t.algebra_gens.push_back(matrix_from_json(a));
    t.dirac = matrix_from_json(j.at("dirac"));
    t.real_structure = AntiUnitary(matrix_from_json(j.at("real_structure").at("linear_part")));
    const auto& g = j.at("grading");
    const auto kind = g.at("kind").get<std::string>();
    if (kind == "nontrivial") {
      t.grading = Grading::nontrivial(matrix_from_json(g.at("matrix")));
    } else if (kind == "trivial") {
      t.grading = Grading::trivial(sign_from_int(g.at("eps_dprime").get<int>()));
    } else {
      throw ParseError("unknown grading kind '" + kind + "'");
    }
    if (j.contains("metadata")) t.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad triple document: ") + e.what());
  }
}

Json product_report_to_json(const ProductReport& r) {
  Json j;
  j["pair"] = {r.left.to_string(), r.right.to_string()};
  j["kind"] = r.dirac_choice ? "traditional" : "graded";
  j["convention"] = to_string(r.convention);
  if (r.dirac_choice) j["dirac_choice"] = to_string(*r.dirac_choice);
  j["predicted"] = signs_to_json(r.predicted);
  j["extracted"] = signs_to_json(r.extracted);
  j["class"] = r.cls.to_string();
  j["hilbert_dim"] = r.result.hilbert_dim;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  return j;
}

Json dga_to_json(const StarDGA& a) {
  Json j;
  j["basis"] = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) j["basis"].push_back({{"label", a.labels[i]}, {"degree", a.degrees[i]}});
  j["unit"] = a.unit;
  j["mult"] = Json::array();
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!a.c(x, y, z).is_zero()) j["mult"].push_back({x, y, z, a.c(x, y, z).to_string()});
  j["star"] = matrix_to_json(a.star);
  j["diff"] = matrix_to_json(a.diff);
  return j;
}

StarDGA dga_from_json(const Json& j) {
  try {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (const auto& b : j.at("basis")) {
      labels.push_back(b.at("label").get<std::string>());
      degrees.push_back(b.at("degree").get<int>());
    }
    const std::size_t n = labels.size();
    const auto unit = j.at("unit").get<std::size_t>();
    if (unit >= n) throw ParseError("unit index out of range");
    StarDGA a(std::move(labels), std::move(degrees), unit);
    for (const auto& e : j.at("mult")) {
      const auto x = e.at(0).get<std::size_t>(), y = e.at(1).get<std::size_t>(), z = e.at(2).get<std::size_t>();
      if (x >= n || y >= n || z >= n) throw ParseError("structure constant index out of range");
      a.c(x, y, z) = ExactComplex::parse(e.at(3).get<std::string>());
    }
    a.star = matrix_from_json(j.at("star"));
    a.diff = matrix_from_json(j.at("diff"));
    if (a.star.size() != n || a.diff.size() != n) throw ParseError("star/diff size does not match the basis");
    return a;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad *-DGA document: ") + e.what());
  }
}

}  // namespace spectral
