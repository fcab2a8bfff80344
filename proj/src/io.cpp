#include "eag/io.hpp"

#include "eag/errors.hpp"

#include <sstream>

namespace eag::io {

namespace {

// nlohmann errors become usage errors: a malformed document is bad input.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T, class F>
std::vector<T> list_from(const Json& j, F&& f) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

}  // namespace

Json document(std::string_view kind, Json payload) {
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = kind;
  for (auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

Json payload(const Json& doc, std::string_view kind) {
  return guarded([&] {
    if (doc.at("schema").get<std::string>() != kSchema) throw UsageError("unsupported schema");
    if (doc.at("kind").get<std::string>() != kind)
      throw UsageError("expected a '" + std::string(kind) + "' document");
    Json out = doc;
    out.erase("schema");
    out.erase("kind");
    return out;
  });
}

Json to_json(const FpVector& v) {
  Json j = Json::array();
  for (int i = 0; i < v.dim(); ++i) j.push_back(static_cast<int>(v[i]));
  return j;
}

FpVector fp_vector_from_json(const Json& j, Prime p) {
  return guarded([&] {
    Coeffs c(static_cast<Eigen::Index>(j.size()));
    Eigen::Index i = 0;
    for (const auto& x : j) {
      const int v = x.get<int>();
      if (v < 0 || v >= p) throw UsageError("coordinate out of range for F_" + std::to_string(p.value()));
      c(i++) = static_cast<std::uint8_t>(v);
    }
    return FpVector(p, c);
  });
}

Json to_json(const GeneratingVector& v) {
  Json hyp = Json::array(), ell = Json::array();
  for (const auto& [a, b] : v.hyperbolic()) hyp.push_back(Json::array({to_json(a), to_json(b)}));
  for (const auto& c : v.elliptic()) ell.push_back(to_json(c));
  return {{"p", v.prime().value()}, {"n", v.rank()}, {"rho", v.orbit_genus()}, {"hyperbolic", hyp}, {"elliptic", ell}};
}

GeneratingVector generating_vector_from_json(const Json& j) {
  return guarded([&] {
    const Prime p(j.at("p").get<int>());
    const int n = j.at("n").get<int>();
    std::vector<GeneratingVector::Pair> hyp;
    for (const auto& pair : j.at("hyperbolic"))
      hyp.emplace_back(fp_vector_from_json(pair.at(0), p), fp_vector_from_json(pair.at(1), p));
    auto ell = list_from<FpVector>(j.at("elliptic"), [&](const Json& x) { return fp_vector_from_json(x, p); });
    if (j.contains("rho") && j.at("rho").get<int>() != static_cast<int>(hyp.size()))
      throw UsageError("rho does not match the hyperbolic pairs");
    return GeneratingVector(p, n, std::move(hyp), std::move(ell));
  });
}

Json to_json(const Signature& s) {
  return {{"orbit_genus", s.orbit_genus}, {"periods", s.periods}, {"text", s.str()}};
}

Signature signature_from_json(const Json& j) {
  return guarded([&] {
    return Signature(j.at("orbit_genus").get<int>(), j.at("periods").get<std::vector<int>>());
  });
}

Json to_json(const EAActionSpec& s) { return {{"p", s.p}, {"n", s.n}, {"rho", s.rho}, {"r", s.r}}; }

EAActionSpec spec_from_json(const Json& j) {
  return guarded([&] {
    return EAActionSpec{j.at("p").get<int>(), j.at("n").get<int>(), j.at("rho").get<int>(), j.at("r").get<int>()};
  });
}

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  return guarded([&] {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw UsageError("not a rational number: " + j.dump());
    }
  });
}

Json to_json(const ProjPoint<Complex>& z) {
  if (z.at_infinity()) return "inf";
  return Json::array({z.x.real(), z.x.imag()});
}

ProjPoint<Complex> point_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_string()) {
      if (j.get<std::string>() != "inf") throw UsageError("expected \"inf\" or [re, im]");
      return ProjPoint<Complex>::infinity();
    }
    return ProjPoint<Complex>::finite({j.at(0).get<double>(), j.at(1).get<double>()});
  });
}

Json matrix_to_json(const Mat<Complex>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Mat<Complex> complex_matrix_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw UsageError("matrix must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.at(0).size());
    Mat<Complex> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(j.at(i).size()) != cols) throw UsageError("ragged matrix");
      for (Eigen::Index k = 0; k < cols; ++k) {
        const auto& e = j.at(i).at(k);
        m(i, k) = e.is_number() ? Complex(e.get<double>(), 0.0) : Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    return m;
  });
}

Json to_json(const UniquenessReport& r) {
  return {{"spec", to_json(r.spec)}, {"signature", r.spec.signature().str()}, {"genus", to_json(r.genus)},
          {"unique", r.unique}, {"rows", r.rows}};
}

UniquenessReport uniqueness_from_json(const Json& j) {
  return guarded([&] {
    UniquenessReport r;
    r.spec = spec_from_json(j.at("spec"));
    r.genus = rational_from_json(j.at("genus"));
    r.unique = j.at("unique").get<bool>();
    r.rows = j.at("rows").get<std::vector<int>>();
    return r;
  });
}

Json to_json(const ClassCountReport& r) {
  Json e = Json::array(), h = Json::array();
  for (const auto& [k, v] : r.e_terms) e.push_back(Json::array({k, v}));
  for (const auto& [k, v] : r.h_terms) h.push_back(Json::array({k, v}));
  return {{"spec", to_json(r.spec)}, {"e_terms", e},          {"h_terms", h},
          {"total", r.total},        {"method", r.method},    {"note", r.note}};
}

ClassCountReport class_count_from_json(const Json& j) {
  return guarded([&] {
    ClassCountReport r;
    r.spec = spec_from_json(j.at("spec"));
    for (const auto& t : j.at("e_terms")) r.e_terms.emplace_back(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
    for (const auto& t : j.at("h_terms")) r.h_terms.emplace_back(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
    r.total = j.at("total").get<std::int64_t>();
    r.method = j.at("method").get<std::string>();
    r.note = j.at("note").get<std::string>();
    return r;
  });
}

Json to_json(const ExtensionWitness& w) {
  Json basis = Json::array();
  for (const auto& b : w.subgroup_basis) basis.push_back(to_json(b));
  return {{"n_signature", to_json(w.n_signature)},
          {"vector", to_json(w.vector)},
          {"subgroup_basis", basis},
          {"construction", w.construction}};
}

ExtensionWitness witness_from_json(const Json& j) {
  return guarded([&] {
    GeneratingVector v = generating_vector_from_json(j.at("vector"));
    auto basis = list_from<FpVector>(j.at("subgroup_basis"),
                                     [&](const Json& x) { return fp_vector_from_json(x, v.prime()); });
    return ExtensionWitness{signature_from_json(j.at("n_signature")), std::move(v), std::move(basis),
                            j.at("construction").get<std::string>()};
  });
}

Json to_json(const MaximalityVerdict& v) {
  return {{"spec", to_json(v.spec)},
          {"signature", v.spec.signature().str()},
          {"maximal", v.maximal},
          {"rule", v.rule},
          {"evidence", v.evidence},
          {"note", v.note},
          {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

MaximalityVerdict verdict_from_json(const Json& j) {
  return guarded([&] {
    MaximalityVerdict v;
    v.spec = spec_from_json(j.at("spec"));
    v.maximal = j.at("maximal").get<bool>();
    v.rule = j.at("rule").get<std::string>();
    v.evidence = j.at("evidence").get<std::string>();
    v.note = j.at("note").get<std::string>();
    if (!j.at("witness").is_null()) v.witness = witness_from_json(j.at("witness"));
    return v;
  });
}

Json to_json(const OrbitCount& c) {
  return {{"orbits", c.orbits},
          {"vectors", c.vectors},
          {"vectors_in_order", c.vectors_in_order},
          {"representatives", c.representatives}};
}

OrbitCount orbit_count_from_json(const Json& j) {
  return guarded([&] {
    OrbitCount c;
    c.orbits = j.at("orbits").get<std::int64_t>();
    c.vectors = j.at("vectors").get<std::int64_t>();
    c.vectors_in_order = j.at("vectors_in_order").get<std::int64_t>();
    c.representatives = j.at("representatives").get<std::vector<std::vector<int>>>();
    return c;
  });
}

Json to_json(const FermatReport& r) {
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(to_json(l));
  return {{"p", r.p},
          {"n", r.n},
          {"C", matrix_to_json(r.line)},
          {"generic", r.generic},
          {"genus", to_json(r.genus)},
          {"lambdas", lambdas},
          {"lambdas_exact", r.lambdas_exact},
          {"residue_checks", r.residue_checks},
          {"samples", r.samples},
          {"samples_passed", r.samples_passed},
          {"seed", r.seed}};
}

FermatReport fermat_from_json(const Json& j) {
  return guarded([&] {
    FermatReport r;
    r.p = j.at("p").get<int>();
    r.n = j.at("n").get<int>();
    r.line = complex_matrix_from_json(j.at("C"));
    r.generic = j.at("generic").get<bool>();
    r.genus = rational_from_json(j.at("genus"));
    r.lambdas = list_from<ProjPoint<Complex>>(j.at("lambdas"), point_from_json);
    r.lambdas_exact = j.at("lambdas_exact").get<std::vector<std::string>>();
    r.residue_checks = j.at("residue_checks").get<std::vector<double>>();
    r.samples = j.at("samples").get<int>();
    r.samples_passed = j.at("samples_passed").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  });
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace eag::io
