#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cliffcox/conformal.hpp"
#include "cliffcox/coxeter_plane.hpp"
#include "cliffcox/io.hpp"
#include "cliffcox/point_array.hpp"
#include "cliffcox/root_system.hpp"
#include "cliffcox/spinor_induction.hpp"
#include "cliffcox/versor_group.hpp"

using namespace cliffcox;
using io::Json;

namespace {

struct Options {
  std::string group = "H3";
  int n = 0;
  double tolerance = kDedupTolerance;
  double lambda = 1.0;
  std::string translate;
  std::string length = "1";
  std::string lengths = "0.5,1,tau,2";
  bool chiral = false;
  bool full = false;
  bool include_seed = false;
  std::string format = "json";
  std::string out;
};

GroupId group_of(const Options& o) {
  GroupId id = GroupId::parse(o.group);
  if (o.n != 0) {
    if (id.family != GroupId::Family::I2) throw DomainError("--n only applies to I2");
    id = GroupId::i2(o.n);
  }
  return id;
}

bool use_full(const Options& o) { return o.full; }

RootSystem roots_of(const Options& o) {
  RootSystem rs = root_system(group_of(o));
  if (o.tolerance != kDedupTolerance) {
    const GroupId id = group_of(o);
    const auto simple = simple_roots(id);
    const auto lengths = simple_root_lengths(id);
    RootSystem again = close_under_reflections(simple, lengths, o.tolerance);
    again.group = rs.group;
    return again;
  }
  return rs;
}

VersorGroup group_from(const Options& o, const RootSystem& rs) {
  return use_full(o) ? generate_pin_group(rs, o.tolerance) : generate_spin_group(rs, o.tolerance);
}

Eigen::VectorXd translation_direction(const Options& o, int rank) {
  if (o.translate.empty()) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(rank);
    d[0] = 1.0;
    return d;
  }
  const Eigen::VectorXd d = io::parse_vector_literal(o.translate);
  if (d.size() < 2 || d.size() > 3) throw DomainError("--translate takes 2 or 3 components");
  if (d.size() > rank) throw DomainError("--translate has more components than the group rank");
  return d;
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s += ',';
      s += io::format_number(m(r, c));
    }
    s += '\n';
  }
  return s;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(io::vector_json(m.row(r).transpose()));
  return rows;
}

struct Output {
  Json json;
  std::string csv;
};

Output cmd_roots(const Options& o) {
  const RootSystem rs = roots_of(o);
  return {io::to_json(rs), io::to_csv(rs)};
}

Output cmd_cartan(const Options& o) {
  const RootSystem rs = roots_of(o);
  const Eigen::MatrixXd a = cartan_matrix(rs);
  return {Json{{"group", rs.group}, {"matrix", matrix_json(a)}}, matrix_csv(a)};
}

Output cmd_group(const Options& o) {
  const VersorGroup vg = group_from(o, roots_of(o));
  const OrthogonalGroup og = realize_orthogonal(vg, o.tolerance);
  Json j = io::to_json(vg);
  j["realized_order"] = og.order();
  return {j, io::multiplication_table_csv(vg)};
}

Output cmd_binary(const Options& o) {
  const VersorGroup vg = generate_spin_group(roots_of(o), o.tolerance);
  VerifyOptions vo;
  vo.tol = o.tolerance;
  const GroupReport report = verify_group(vg, vo);
  Json j = Json{{"group", vg.source}};
  j.update(io::to_json(report));
  std::string csv = "element_order,count\n";
  for (const auto& [k, count] : report.spectrum) csv += std::to_string(k) + "," + std::to_string(count) + "\n";
  return {j, csv};
}

Output cmd_induce(const Options& o) {
  const GroupId id = group_of(o);
  if (id.rank() != 3) throw DomainError("induce needs a rank-3 group");
  const RootSystem4 rs4 = induce_root_system(generate_spin_group(roots_of(o), o.tolerance), o.tolerance);
  Json j = Json{{"group", id.name()}};
  j.update(io::to_json(rs4));
  return {j, io::to_csv(rs4)};
}

Output cmd_coxeter(const Options& o) {
  const RootSystem rs = roots_of(o);
  const CoxeterDescriptor d = describe_coxeter(rs.simple_roots);
  Json j = Json{{"group", rs.group}};
  j.update(io::to_json(d));
  std::string csv = "field,value\nh," + std::to_string(d.h) + "\nparity," + to_string(d.parity) + "\n";
  for (int m : d.exponents) csv += "exponent," + std::to_string(m) + "\n";
  return {j, csv};
}

Output cmd_project(const Options& o) {
  const RootSystem rs = roots_of(o);
  const CoxeterDescriptor d = describe_coxeter(rs.simple_roots);
  if (!d.plane) throw DomainError("no Coxeter plane: h = " + std::to_string(d.h));
  const auto points = project_to_plane(rs.roots, *d.plane);
  Json j = Json{{"group", rs.group}, {"h", d.h}};
  j.update(io::projection_json(points));
  return {j, io::projection_csv(points)};
}

Output cmd_array(const Options& o) {
  const RootSystem rs = roots_of(o);
  const OrthogonalGroup og = realize_orthogonal(group_from(o, rs), o.tolerance);
  const auto t = TranslationSpec::make(translation_direction(o, rs.rank), io::parse_scalar_literal(o.length));
  const PointArray arr =
      affine_orbit(SeedPolytope::pentagon(), og, t, {o.include_seed, o.tolerance});
  Json j = Json{{"group", rs.group}, {"chirality", use_full(o) ? "full" : "chiral"},
                {"length", io::stable(t.length)}};
  j.update(io::to_json(arr));
  j["degeneracy"] = io::to_json(degeneracy_report(arr, o.tolerance));
  return {j, io::to_csv(arr)};
}

Output cmd_sweep(const Options& o) {
  const RootSystem rs = roots_of(o);
  const OrthogonalGroup og = realize_orthogonal(group_from(o, rs), o.tolerance);
  const auto sweep = translation_sweep(SeedPolytope::pentagon(), og, translation_direction(o, rs.rank),
                                       io::parse_list_literal(o.lengths), {o.include_seed, o.tolerance});
  return {Json{{"group", rs.group}, {"chirality", use_full(o) ? "full" : "chiral"},
               {"sweep", io::to_json(sweep)}},
          io::to_csv(sweep)};
}

Output cmd_conformal_check(const Options& o) {
  const ConformalContext ctx(o.lambda);
  Json cases = Json::array();
  std::string csv = "group,chirality,length,points,deviation\n";
  double worst = 0.0;
  const char* groups[] = {"I2:5", "H3"};
  for (const char* g : groups) {
    const RootSystem rs = root_system(GroupId::parse(g));
    for (bool full : {false, true}) {
      const VersorGroup vg = full ? generate_pin_group(rs, o.tolerance) : generate_spin_group(rs, o.tolerance);
      const OrthogonalGroup og = realize_orthogonal(vg, o.tolerance);
      for (double length : {1.0, kTau, 1.0 / kTau}) {
        const auto t = TranslationSpec::make(translation_direction({}, rs.rank), length);
        const AffineOptions ao{false, o.tolerance};
        const PointArray euclid = affine_orbit(SeedPolytope::pentagon(), og, t, ao);
        const PointArray conf = affine_orbit_conformal(SeedPolytope::pentagon(), vg, t, ctx, ao);
        const double dev = max_set_deviation(euclid, conf);
        worst = std::max(worst, dev);
        const char* chir = full ? "full" : "chiral";
        cases.push_back(Json{{"group", rs.group}, {"chirality", chir}, {"length", io::stable(length)},
                             {"points", euclid.size()}, {"deviation", io::stable(dev)}});
        csv += rs.group + "," + chir + "," + io::format_number(length) + "," +
               std::to_string(euclid.size()) + "," + io::format_number(dev) + "\n";
      }
    }
  }
  const bool passed = worst < 1e-9;
  csv += "max,,,," + io::format_number(worst) + "\n";
  return {Json{{"lambda", io::stable(o.lambda)}, {"cases", cases},
               {"max_deviation", io::stable(worst)}, {"passed", passed}},
          csv};
}

void emit(const Options& o, const Output& out) {
  const std::string text = o.format == "csv" ? out.csv : out.json.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + o.out + "'");
  f << text;
  if (!f.flush()) throw DomainError("cannot write '" + o.out + "'");
}

int fail(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra toolkit for reflection groups, root systems and point arrays"};
  app.require_subcommand(1, 1);
  Options o;

  using Handler = Output (*)(const Options&);
  const std::pair<const char*, Handler> commands[] = {
      {"roots", cmd_roots},     {"cartan", cmd_cartan},   {"group", cmd_group},
      {"binary", cmd_binary},   {"induce", cmd_induce},   {"coxeter", cmd_coxeter},
      {"project", cmd_project}, {"array", cmd_array},     {"sweep", cmd_sweep},
      {"conformal-check", cmd_conformal_check},
  };
  const char* help[] = {
      "root system closure",       "Cartan matrix",
      "versor group (spin, or pin with --full)", "binary polyhedral group report",
      "induced 4D root system",    "Coxeter versor, number, plane and exponents",
      "roots projected to the Coxeter plane", "affine pentagon point array",
      "array cardinality over translation lengths", "3D vs conformal pipeline deviation",
  };

  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
    sub->add_option("--group", o.group, "A1A1A1, A3, B3, H3, H2 or I2:n")->capture_default_str();
    sub->add_option("--n", o.n, "n for I2(n)")->check(CLI::Range(2, 1000));
    sub->add_option("--tolerance", o.tolerance, "dedup tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--lambda", o.lambda, "conformal length scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--translate", o.translate, "translation direction x,y[,z]");
    sub->add_option("--length", o.length, "translation length (tau and 1/tau accepted)")
        ->capture_default_str();
    sub->add_option("--lengths", o.lengths, "sweep lengths a,b,c")->capture_default_str();
    auto* chiral = sub->add_flag("--chiral", o.chiral, "rotations only (default)");
    sub->add_flag("--full", o.full, "rotations and reflections")->excludes(chiral);
    sub->add_flag("--include-seed", o.include_seed, "keep the untranslated seed");
    sub->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "output path (default stdout)");
    subs.emplace_back(sub, commands[i].second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, handler] : subs) {
      if (sub->parsed()) emit(o, handler(o));
    }
  } catch (const DomainError& e) {
    return fail("domain", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
  return 0;
}
