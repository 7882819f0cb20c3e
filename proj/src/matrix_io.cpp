#include "austere/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace austere {

using nlohmann::json;

json fmat_to_json(const FMat& m) {
  json entries = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) {
      const Quaternion& q = m.at(i, j);
      row.push_back({q.w, q.x, q.y, q.z});
    }
    entries.push_back(std::move(row));
  }
  return {{"field", field_name(m.field())}, {"n", m.n()}, {"entries", std::move(entries)}};
}

FMat fmat_from_json(const json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("matrix json: bad size");
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != n) throw std::invalid_argument("matrix json: row count mismatch");
  FMat m(n, f);
  for (int i = 0; i < n; ++i) {
    const json& row = entries.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix json: column count mismatch");
    for (int jj = 0; jj < n; ++jj) {
      const json& q = row.at(static_cast<size_t>(jj));
      if (q.size() != 4) throw std::invalid_argument("matrix json: scalars must be 4-tuples");
      m.at(i, jj) = Quaternion(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                               q.at(3).get<double>());
    }
  }
  if (!m.entries_in_field(0.0))
    throw std::invalid_argument("matrix json: entries leave the declared field");
  return m;
}

json subspace_to_json(const SubspaceSpec& spec) {
  json basis = json::array();
  for (const RatMatrix& b : spec.basis) {
    json rows = json::array();
    for (int i = 0; i < b.n(); ++i) {
      json row = json::array();
      for (int j = 0; j < b.n(); ++j) row.push_back(rational_to_string(b.at(i, j)));
      rows.push_back(std::move(row));
    }
    basis.push_back(std::move(rows));
  }
  return {{"n", spec.n}, {"basis", std::move(basis)}};
}

SubspaceSpec subspace_from_json(const json& j) {
  SubspaceSpec spec;
  spec.n = j.at("n").get<int>();
  for (const json& rows : j.at("basis")) {
    RatMatrix m(spec.n);
    if (static_cast<int>(rows.size()) != spec.n)
      throw std::invalid_argument("subspace json: row count mismatch");
    for (int i = 0; i < spec.n; ++i)
      for (int jj = 0; jj < spec.n; ++jj)
        m.at(i, jj) = parse_rational(rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(jj)).get<std::string>());
    spec.basis.push_back(std::move(m));
  }
  return spec;
}

FMat parse_matrix_arg(const std::string& arg, Field inline_field) {
  if (arg.rfind("diag:", 0) != 0) return read_matrix_file(arg);
  std::string body = arg.substr(5);
  double scale = 1.0;
  const auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string suffix = body.substr(slash + 1);
    body = body.substr(0, slash);
    if (suffix.rfind("sqrt", 0) == 0)
      scale = 1.0 / std::sqrt(std::stod(suffix.substr(4)));
    else
      scale = 1.0 / std::stod(suffix);
  }
  std::vector<double> d;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) d.push_back(std::stod(tok) * scale);
  if (d.size() < 2) throw std::invalid_argument("diag shorthand needs at least two entries");
  return FMat::diag(d, inline_field);
}

FMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  json j;
  in >> j;
  return fmat_from_json(j);
}

void write_matrix_file(const std::string& path, const FMat& m) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write matrix file '" + path + "'");
  out << fmat_to_json(m).dump(2) << "\n";
}

}  // namespace austere
