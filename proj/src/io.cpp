#include "cliffcox/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cliffcox::io {

double stable(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", stable(x));
  return buf;
}

Json to_json(const Multivectord& m, bool stable_numbers) {
  Json coeffs = Json::object();
  for (Blade b = 0; b < static_cast<Blade>(m.size()); ++b) {
    const double v = stable_numbers ? stable(m[b]) : m[b];
    if (v != 0.0) coeffs[std::to_string(b)] = v;
  }
  return Json{{"signature", {m.signature().p(), m.signature().q()}}, {"coeffs", coeffs}};
}

Multivectord multivector_from_json(const Json& j) {
  try {
    const auto& sig_json = j.at("signature");
    if (!sig_json.is_array() || sig_json.size() != 2) throw DomainError("signature must be [p, q]");
    const Signature sig(sig_json[0].get<int>(), sig_json[1].get<int>());
    Multivectord m(sig);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      std::size_t used = 0;
      const unsigned long blade = std::stoul(key, &used);
      if (used != key.size() || blade >= static_cast<unsigned long>(sig.size())) {
        throw DomainError("bad blade key '" + key + "'");
      }
      const double v = value.get<double>();
      if (!std::isfinite(v)) throw DomainError("non-finite coefficient");
      m[static_cast<Blade>(blade)] = v;
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed multivector JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw DomainError(std::string("malformed multivector JSON: ") + e.what());
  }
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(stable(v[i]));
  return out;
}

double parse_scalar_literal(std::string_view text) {
  std::string t(text);
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  double sign = 1.0;
  std::string body = t;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = -1.0;
    body.erase(0, 1);
  }
  if (body == "tau") return sign * kTau;
  if (body == "1/tau") return sign / kTau;
  if (t.empty()) throw DomainError("empty number in literal");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw DomainError("malformed number '" + t + "'");
  }
  return v;
}

std::vector<double> parse_list_literal(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar_literal(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Eigen::VectorXd parse_vector_literal(std::string_view text) {
  const std::vector<double> xs = parse_list_literal(text);
  return Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

namespace {

std::string csv_row(const Eigen::VectorXd& v) {
  std::string row;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) row += ',';
    row += format_number(v[i]);
  }
  return row;
}

std::string csv_header(Eigen::Index dim) {
  static const char* names[] = {"x", "y", "z", "u", "v"};
  std::string h;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i) h += ',';
    h += i < 5 ? names[i] : "c" + std::to_string(i);
  }
  return h;
}

}  // namespace

Json to_json(const RootSystem& rs) {
  Json simple = Json::array();
  for (const auto& a : rs.simple_roots) simple.push_back(vector_json(a.vector_part()));
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(vector_json(r.vector_part()));
  Json lengths = Json::array();
  for (double l : rs.lengths) lengths.push_back(stable(l));
  return Json{{"group", rs.group},       {"rank", rs.rank},   {"count", rs.roots.size()},
              {"simple_roots", simple}, {"roots", roots},    {"lengths", lengths}};
}

std::string to_csv(const RootSystem& rs) {
  std::string out = csv_header(rs.rank == 2 ? 2 : 3) + "\n";
  for (const auto& r : rs.roots) out += csv_row(r.vector_part()) + "\n";
  return out;
}

Json to_json(const VersorGroup& vg) {
  Json elems = Json::array();
  for (const auto& a : vg.elements) elems.push_back(to_json(a, true));
  return Json{{"source", vg.source},
              {"parity", to_string(vg.parity_class)},
              {"order", vg.order()},
              {"elements", elems}};
}

std::string multiplication_table_csv(const VersorGroup& vg) {
  PointSet<double> set;
  for (const auto& a : vg.elements) set.insert(Eigen::VectorXd(a.coeffs()));
  std::ostringstream out;
  for (std::size_t i = 0; i < vg.elements.size(); ++i) {
    for (std::size_t j = 0; j < vg.elements.size(); ++j) {
      const auto k = set.find(Eigen::VectorXd((vg.elements[i] * vg.elements[j]).coeffs()));
      if (j) out << ',';
      if (k) {
        out << *k;
      } else {
        out << -1;
      }
    }
    out << '\n';
  }
  return out.str();
}

Json to_json(const OrthogonalGroup& og) {
  Json mats = Json::array();
  for (const auto& m : og.matrices) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r).transpose()));
    mats.push_back(rows);
  }
  return Json{{"chirality",
               og.chirality == OrthogonalGroup::Chirality::RotationOnly ? "rotation-only" : "full"},
              {"order", og.order()},
              {"matrices", mats}};
}

Json to_json(const OrderSpectrum& spectrum) {
  Json out = Json::object();
  for (const auto& [k, count] : spectrum) out[std::to_string(k)] = count;
  return out;
}

Json to_json(const GroupReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"axiom", f.axiom}, {"witnesses", f.witnesses}, {"detail", f.detail}});
  }
  return Json{{"passed", report.passed},
              {"order", report.order},
              {"label", report.label ? Json(*report.label) : Json(nullptr)},
              {"center_size", report.center_size},
              {"order_spectrum", to_json(report.spectrum)},
              {"associativity", {{"checks", report.associativity_checks},
                                 {"exhaustive", report.associativity_exhaustive}}},
              {"evidence", "order, order spectrum and centre size; not a full isomorphism test"},
              {"failures", failures}};
}

Json to_json(const RootSystem4& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(vector_json(r));
  return Json{{"label", rs.label}, {"rank", 4}, {"count", rs.roots.size()}, {"roots", roots}};
}

std::string to_csv(const RootSystem4& rs) {
  std::string out = "w,x,y,z\n";
  for (const auto& r : rs.roots) out += csv_row(r) + "\n";
  return out;
}

Json to_json(const CoxeterDescriptor& d) {
  return Json{{"versor", to_json(d.versor, true)},
              {"parity", to_string(d.parity)},
              {"h", d.h},
              {"plane", d.plane ? to_json(*d.plane, true) : Json(nullptr)},
              {"normal", d.normal ? vector_json(d.normal->vector_part()) : Json(nullptr)},
              {"exponents", d.exponents}};
}

Json to_json(const OrbitReport& report) {
  Json points = Json::array();
  for (const auto& p : report.points) points.push_back(vector_json(p.vector_part()));
  return Json{{"orbit_size", report.size()},
              {"points", points},
              {"in_plane", report.in_plane},
              {"normal", report.normal}};
}

Json projection_json(const std::vector<Eigen::Vector2d>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(vector_json(p));
  return Json{{"count", points.size()}, {"points", out}};
}

std::string projection_csv(const std::vector<Eigen::Vector2d>& points) {
  std::string out = "u,v\n";
  for (const auto& p : points) out += csv_row(p) + "\n";
  return out;
}

Json to_json(const PointArray& array) {
  Json points = Json::array();
  for (std::size_t i = 0; i < array.size(); ++i) {
    Json prov = Json::array();
    for (const auto& p : array.provenance[i]) {
      prov.push_back(Json{{"group_element", p.group_element}, {"seed_vertex", p.seed_vertex}});
    }
    points.push_back(Json{{"position", vector_json(array.points[i])},
                          {"multiplicity", array.multiplicity(i)},
                          {"provenance", prov}});
  }
  return Json{{"count", array.size()}, {"candidate_count", array.candidate_count}, {"points", points}};
}

std::string to_csv(const PointArray& array) {
  const Eigen::Index dim = array.points.empty() ? 2 : array.points.front().size();
  std::string out = csv_header(dim) + ",multiplicity\n";
  for (std::size_t i = 0; i < array.size(); ++i) {
    out += csv_row(array.points[i]) + "," + std::to_string(array.multiplicity(i)) + "\n";
  }
  return out;
}

Json to_json(const DegeneracyReport& report) {
  Json mult = Json::object();
  for (const auto& [m, count] : report.multiplicities) mult[std::to_string(m)] = count;
  Json rings = Json::array();
  for (const auto& r : report.rings) rings.push_back(Json{{"radius", stable(r.radius)}, {"count", r.count}});
  return Json{{"points", report.points},
              {"candidates", report.candidates},
              {"degenerate", report.degenerate},
              {"degenerate_points", report.degenerate_points},
              {"multiplicities", mult},
              {"rings", rings}};
}

Json to_json(const std::vector<SweepEntry>& sweep) {
  Json out = Json::array();
  for (const auto& e : sweep) out.push_back(Json{{"length", stable(e.length)}, {"cardinality", e.cardinality}});
  return out;
}

std::string to_csv(const std::vector<SweepEntry>& sweep) {
  std::string out = "length,cardinality\n";
  for (const auto& e : sweep) out += format_number(e.length) + "," + std::to_string(e.cardinality) + "\n";
  return out;
}

}  // namespace cliffcox::io
