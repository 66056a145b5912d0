#pragma once

#include <Eigen/Core>
#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "cliffcox/coxeter_plane.hpp"
#include "cliffcox/multivector.hpp"
#include "cliffcox/point_array.hpp"
#include "cliffcox/root_system.hpp"
#include "cliffcox/spinor_induction.hpp"
#include "cliffcox/versor_group.hpp"

namespace cliffcox::io {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits and flushes |x| < 1e-12 to zero, so
/// exported numbers are stable across platforms and compilers.
double stable(double x);

/// 12 significant digits, after `stable`.
std::string format_number(double x);

/// {"signature": [p, q], "coeffs": {"<bitmask>": value}} with zeros omitted.
/// `stable_numbers` applies `stable` first (and drops what it flushes).
Json to_json(const Multivectord& m, bool stable_numbers = false);
Multivectord multivector_from_json(const Json& j);

Json vector_json(const Eigen::VectorXd& v);

/// A decimal, or one of tau, 1/tau with an optional leading '-'.
double parse_scalar_literal(std::string_view text);
/// Comma-separated scalar literals, e.g. "1,0" or "tau,-1/tau,0".
Eigen::VectorXd parse_vector_literal(std::string_view text);
std::vector<double> parse_list_literal(std::string_view text);

Json to_json(const RootSystem& rs);
std::string to_csv(const RootSystem& rs);

Json to_json(const VersorGroup& vg);
/// Row i, column j holds the index of element_i * element_j.
std::string multiplication_table_csv(const VersorGroup& vg);

Json to_json(const OrthogonalGroup& og);
Json to_json(const OrderSpectrum& spectrum);
Json to_json(const GroupReport& report);

Json to_json(const RootSystem4& rs);
std::string to_csv(const RootSystem4& rs);

Json to_json(const CoxeterDescriptor& d);
Json to_json(const OrbitReport& report);

Json projection_json(const std::vector<Eigen::Vector2d>& points);
std::string projection_csv(const std::vector<Eigen::Vector2d>& points);

Json to_json(const PointArray& array);
std::string to_csv(const PointArray& array);
Json to_json(const DegeneracyReport& report);

Json to_json(const std::vector<SweepEntry>& sweep);
std::string to_csv(const std::vector<SweepEntry>& sweep);

}  // namespace cliffcox::io
