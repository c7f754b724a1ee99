#pragma once

// JSON schemas.
//
//   multivector   {"n": 2, "terms": [{"blade": "e1e2", "re": -2, "im": 0}, ...]}
//   operator      {"n": 2, "order": "grade-lex", "rows": [[[re, im], ...], ...]}
//   base operator {"n": 3, "rows": [[[re, im] | re, ...], ...]}
//                 rows[i][j] = coefficient of e_{j+1} in B(e_{i+1})
//
// Numbers are written rounded to 12 significant digits.

#include <json.hpp>

#include <string>

#include "fermiga/extension.hpp"
#include "fermiga/format.hpp"
#include "fermiga/multivector.hpp"
#include "fermiga/operator.hpp"

namespace fermiga {

using json = nlohmann::json;

[[nodiscard]] inline json to_json(const Multivector &a) {
  json terms = json::array();
  for (const auto &[blade, c] : a.canonical_terms())
    terms.push_back({{"blade", to_string(blade)}, {"re", printable(c.real())},
                     {"im", printable(c.imag())}});
  return {{"n", a.dimension()}, {"terms", std::move(terms)}};
}

[[nodiscard]] inline json complex_pair(complex c) {
  return json::array({printable(c.real()), printable(c.imag())});
}

[[nodiscard]] inline json to_json(const Operator &t) {
  json rows = json::array();
  for (Eigen::Index k = 0; k < t.side(); ++k) {
    json row = json::array();
    for (Eigen::Index j = 0; j < t.side(); ++j)
      row.push_back(complex_pair(t(k, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", t.dimension()}, {"order", "grade-lex"}, {"rows", std::move(rows)}};
}

namespace detail {

inline int json_dimension(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw parse_error("JSON object needs an integer field \"n\"");
  return j.at("n").get<int>();
}

inline complex json_complex(const json &v) {
  if (v.is_number())
    return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw parse_error("expected a number or a [re, im] pair, got " + v.dump());
}

inline Matrix json_rows(const json &j, Eigen::Index side) {
  if (!j.contains("rows") || !j.at("rows").is_array() ||
      static_cast<Eigen::Index>(j.at("rows").size()) != side)
    throw parse_error("\"rows\" must be an array of " + std::to_string(side) + " rows");
  Matrix m(side, side);
  for (Eigen::Index k = 0; k < side; ++k) {
    const json &row = j.at("rows")[static_cast<std::size_t>(k)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != side)
      throw parse_error("row " + std::to_string(k) + " must have " + std::to_string(side) +
                        " entries");
    for (Eigen::Index c = 0; c < side; ++c)
      m(k, c) = json_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

} // namespace detail

[[nodiscard]] inline Multivector multivector_from_json(const json &j) {
  const int n = detail::json_dimension(j);
  check_dimension(n);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw parse_error("multivector JSON needs a \"terms\" array");
  Multivector out(n);
  for (const json &t : j.at("terms")) {
    if (!t.is_object() || !t.contains("blade") || !t.at("blade").is_string())
      throw parse_error("multivector term needs a \"blade\" string");
    const double re = t.value("re", 0.0);
    const double im = t.value("im", 0.0);
    out.accumulate(parse_blade(t.at("blade").get<std::string>(), n).mask(), {re, im});
  }
  return out;
}

[[nodiscard]] inline Operator operator_from_json(const json &j, DenseCap cap = {}) {
  const int n = detail::json_dimension(j);
  check_dense(n, cap);
  if (j.contains("order") && j.at("order") != "grade-lex")
    throw parse_error("operator JSON order must be \"grade-lex\"");
  return {n, detail::json_rows(j, static_cast<Eigen::Index>(std::size_t{1} << n))};
}

[[nodiscard]] inline BaseOperator base_operator_from_json(const json &j) {
  const int n = detail::json_dimension(j);
  check_dimension(n);
  return BaseOperator(detail::json_rows(j, n));
}

[[nodiscard]] inline json to_json(const BaseOperator &b) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < b.rows().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < b.rows().cols(); ++j)
      row.push_back(complex_pair(b.rows()(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", b.dimension()}, {"rows", std::move(rows)}};
}

} // namespace fermiga
