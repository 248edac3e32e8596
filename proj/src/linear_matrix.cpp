#include "steiner/linear_matrix.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "steiner/rational.hpp"

namespace steiner {

using nlohmann::ordered_json;

LinearMatrix LinearMatrix::zero(int n, int m, int k) {
  LinearMatrix A;
  A.n = n;
  A.m = m;
  A.k = k;
  A.entries.assign(
      k, std::vector<std::vector<Rational>>(
             m + k, std::vector<Rational>(n + 1, Rational(0))));
  return A;
}

void LinearMatrix::check_shape() const {
  if (k < 1) throw std::invalid_argument("LinearMatrix: k < 1");
  if (m < 1) throw std::invalid_argument("LinearMatrix: m < 1");
  if (n < 1) throw std::invalid_argument("LinearMatrix: n < 1");
  if (static_cast<int>(entries.size()) != k)
    throw std::invalid_argument("LinearMatrix: expected k rows");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != m + k)
      throw std::invalid_argument("LinearMatrix: expected m+k columns");
    for (const auto& e : row)
      if (static_cast<int>(e.size()) != n + 1)
        throw std::invalid_argument(
            "LinearMatrix: entry coefficient vector must have length n+1");
  }
}

bool LinearMatrix::entry_is_zero(int i, int j) const {
  for (const auto& c : entries[i][j])
    if (c != 0) return false;
  return true;
}

namespace {

long require_positive_int(const ordered_json& j, const char* name) {
  if (!j.is_number_integer() || j.get<long>() < 1)
    throw std::runtime_error(std::string("matrix json: \"") + name +
                             "\" must be a positive integer");
  return j.get<long>();
}

Rational coefficient_from_json(const ordered_json& c) {
  if (c.is_number_integer())
    return Rational(Int(std::to_string(c.get<long long>())));
  if (c.is_string()) {
    auto q = parse_rational(c.get<std::string>());
    if (!q)
      throw std::runtime_error("matrix json: bad rational literal \"" +
                               c.get<std::string>() + "\"");
    return *q;
  }
  throw std::runtime_error(
      "matrix json: coefficients must be integers or \"p/q\" strings");
}

}  // namespace

LinearMatrix matrix_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("matrix json: parse error: ") +
                             e.what());
  }
  if (!j.is_object()) throw std::runtime_error("matrix json: not an object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "n" && key != "m" && key != "k" && key != "entries")
      throw std::runtime_error("matrix json: unknown key \"" + key + "\"");
  }
  for (const char* key : {"n", "m", "k", "entries"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("matrix json: missing key \"") +
                               key + "\"");

  LinearMatrix A;
  A.n = static_cast<int>(require_positive_int(j["n"], "n"));
  A.m = static_cast<int>(require_positive_int(j["m"], "m"));
  A.k = static_cast<int>(require_positive_int(j["k"], "k"));

  const auto& rows = j["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != A.k)
    throw std::runtime_error("matrix json: \"entries\" must be k rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != A.m + A.k)
      throw std::runtime_error("matrix json: each row must have m+k entries");
    std::vector<std::vector<Rational>> out_row;
    for (const auto& entry : row) {
      if (!entry.is_array() || static_cast<int>(entry.size()) != A.n + 1)
        throw std::runtime_error(
            "matrix json: each entry must list n+1 coefficients");
      std::vector<Rational> coeffs;
      for (const auto& c : entry) coeffs.push_back(coefficient_from_json(c));
      out_row.push_back(std::move(coeffs));
    }
    A.entries.push_back(std::move(out_row));
  }
  A.check_shape();
  return A;
}

std::string matrix_to_json(const LinearMatrix& A) {
  ordered_json j;
  j["n"] = A.n;
  j["m"] = A.m;
  j["k"] = A.k;
  ordered_json rows = ordered_json::array();
  for (const auto& row : A.entries) {
    ordered_json jr = ordered_json::array();
    for (const auto& entry : row) {
      ordered_json je = ordered_json::array();
      for (const auto& c : entry) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p())
          je.push_back(c.get_num().get_si());
        else
          je.push_back(rat_str(c));
      }
      jr.push_back(je);
    }
    rows.push_back(jr);
  }
  j["entries"] = rows;
  return j.dump();
}

QMatrix flattening_w(const LinearMatrix& A) {
  QMatrix f(A.k * (A.n + 1), A.m + A.k);
  for (int i = 0; i < A.k; i++)
    for (int j = 0; j < A.m + A.k; j++)
      for (int l = 0; l <= A.n; l++)
        f.at(i * (A.n + 1) + l, j) = A.entries[i][j][l];
  return f;
}

QMatrix flattening_i(const LinearMatrix& A) {
  QMatrix f(A.k, (A.m + A.k) * (A.n + 1));
  for (int i = 0; i < A.k; i++)
    for (int j = 0; j < A.m + A.k; j++)
      for (int l = 0; l <= A.n; l++)
        f.at(i, j * (A.n + 1) + l) = A.entries[i][j][l];
  return f;
}

Pencil pencil_of(const LinearMatrix& A) {
  if (A.k != 2) throw std::invalid_argument("pencil_of: k != 2");
  Pencil p{QMatrix(A.m + 2, A.n + 1), QMatrix(A.m + 2, A.n + 1)};
  for (int j = 0; j < A.m + 2; j++)
    for (int l = 0; l <= A.n; l++) {
      p.F.at(j, l) = A.entries[0][j][l];
      p.G.at(j, l) = A.entries[1][j][l];
    }
  return p;
}

}  // namespace steiner
