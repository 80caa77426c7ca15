#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "compeig/complex_matrix.hpp"
#include "compeig/errors.hpp"
#include "compeig/identity_check.hpp"
#include "compeig/spectral.hpp"

namespace compeig {

using nlohmann::json;

struct MatrixFile {
  int n = 0;
  std::string label;
  ComplexMatrix matrix;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline MatrixFile parse_matrix_json(const json& j) {
  MatrixFile mf;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field 'n'");
  mf.n = j["n"].get<int>();
  if (mf.n <= 0) throw ParseError("'n' must be positive");
  mf.label = j.value("label", std::string{});
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("missing array field 'entries'");
  const auto& e = j["entries"];
  if (static_cast<int>(e.size()) != mf.n * mf.n)
    throw ParseError("'entries' must have n*n [re, im] pairs");
  mf.matrix = ComplexMatrix(mf.n);
  for (int k = 0; k < mf.n * mf.n; ++k) {
    const auto& pair = e[k];
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("each entry must be a [re, im] pair");
    mf.matrix.at(k / mf.n, k % mf.n) =
        cplx{pair[0].get<double>(), pair[1].get<double>()};
  }
  return mf;
}

/// Secondary plain-text format: n, then n^2 "re im" pairs, row-major.
inline MatrixFile parse_matrix_text(std::istream& in) {
  MatrixFile mf;
  if (!(in >> mf.n) || mf.n <= 0) throw ParseError("bad dimension");
  mf.matrix = ComplexMatrix(mf.n);
  for (int k = 0; k < mf.n * mf.n; ++k) {
    double re, im;
    if (!(in >> re >> im)) throw ParseError("expected n*n 're im' pairs");
    mf.matrix.at(k / mf.n, k % mf.n) = cplx{re, im};
  }
  return mf;
}

inline MatrixFile load_matrix(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    buf << f.rdbuf();
  }
  const std::string text = buf.str();
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return parse_matrix_json(j);
  }
  std::stringstream ss(text);
  return parse_matrix_text(ss);
}

inline json matrix_to_json(const ComplexMatrix& m,
                           const std::string& label = {}) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back({m.at(i, j).real(), m.at(i, j).imag()});
  json out{{"n", m.rows()}, {"entries", entries}};
  if (!label.empty()) out["label"] = label;
  return out;
}

inline json check_to_json(const IdentityCheckResult& c) {
  return json{{"name", c.name},
              {"max_dev", c.max_rel_dev},
              {"tol", c.tol},
              {"pass", c.pass}};
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

inline json spectrum_to_json(const SpectrumReport& r) {
  json groups = json::array();
  for (const EigenGroup& g : r.groups)
    groups.push_back({{"lambda", g.lambda},
                      {"multiplicity", g.multiplicity},
                      {"members", g.members}});
  json pairs = json::array();
  for (const Eigenpair& p : r.pairs) {
    json vecs = json::array();
    for (const Vector& v : p.vectors) vecs.push_back(vector_to_json(v));
    pairs.push_back(
        {{"lambda", p.lambda}, {"vectors", vecs}, {"residual", p.residual}});
  }
  return json{{"groups", groups}, {"pairs", pairs}};
}

}  // namespace compeig
