#pragma once

#include "json.hpp"

#include <string>
#include <string_view>

#include "errors.hpp"
#include "mode_unitary.hpp"

namespace fockmodes {

inline constexpr double kFileUnitaryTolerance = 1e-8;

/// Reads {"dim": M, "rows": [[[re, im], ...], ...]} (row-major, M rows of M
/// entries) and validates unitarity at 1e-8.
inline ModeUnitary parse_unitary_file(std::string_view content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed unitary document: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("rows")) {
    throw ParseError("unitary document needs \"dim\" and \"rows\"", 0);
  }
  const auto& dim_field = doc["dim"];
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw DimensionError("\"dim\" must be a positive integer");
  }
  const auto dim = dim_field.get<long long>();
  const auto& rows = doc["rows"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != dim) {
    throw DimensionError("\"rows\" must hold " + std::to_string(dim) + " rows");
  }
  ComplexMatrix u(dim, dim);
  for (long long r = 0; r < dim; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != dim) {
      throw DimensionError("row " + std::to_string(r) + " must hold " + std::to_string(dim) +
                           " entries");
    }
    for (long long c = 0; c < dim; ++c) {
      const auto& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw DimensionError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") must be [re, im]");
      }
      u(r, c) = Complex{z[0].get<double>(), z[1].get<double>()};
    }
  }
  return validate_unitary(u, kFileUnitaryTolerance);
}

inline std::string format_unitary_file(const ModeUnitary& u) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < u.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < u.dim(); ++c) row.push_back({u(r, c).real(), u(r, c).imag()});
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["dim"] = u.dim();
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace fockmodes
