#include "amcx/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "amcx/admissibility.hpp"
#include "amcx/augmented.hpp"
#include "amcx/probes.hpp"
#include "amcx/sampling.hpp"

#ifndef AMCX_VERSION
#define AMCX_VERSION "dev"
#endif

namespace amcx {

using json = nlohmann::json;

std::string report_version() { return AMCX_VERSION; }

namespace {

// --- canonical serialization ----------------------------------------------------

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_canonical(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump_canonical(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_canonical(j[i], out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string canonical(const json& j) {
  std::string out;
  dump_canonical(j, out, 2, 0);
  out += "\n";
  return out;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

std::vector<Sign> signs_of(const RunConfig& c) {
  if (c.sign == "plus") return {Sign::Plus};
  if (c.sign == "minus") return {Sign::Minus};
  return {Sign::Plus, Sign::Minus};
}

json suite(const std::string& name, json cases) {
  bool pass = !cases.empty();
  for (const auto& c : cases) pass = pass && c.at("pass").get<bool>();
  return json{{"name", name}, {"cases", std::move(cases)}, {"pass", pass}};
}

json config_echo(const RunConfig& c) {
  return json{{"subcommand", c.subcommand},
              {"n", c.n},
              {"sign", c.sign},
              {"eps_list", c.eps_list},
              {"rho", c.rho},
              {"grid_res", c.grid_res},
              {"pair_count", c.pair_count},
              {"samples", c.samples},
              {"seed", c.seed},
              {"rho_ladder", c.rho_ladder},
              {"eta_list", c.eta_list},
              {"identity_tol", c.identity_tol},
              {"minor_tol", c.minor_tol},
              {"uniform_excess_tol", c.uniform_excess_tol},
              {"format", c.format},
              {"plot", c.plot}};
}

// --- suites ---------------------------------------------------------------------

json identity_suite(const RunConfig& c) {
  json cases = json::array();
  const PointSet points = random_ball_points(c.n, kIdentityRadius, c.samples, c.seed);
  // Points on the singular set exercise the block-diagonal route.
  PointSet singular(static_cast<std::size_t>(c.n));
  for (int i = -2; i <= 2; ++i) {
    std::vector<double> p(static_cast<std::size_t>(c.n), 0.0);
    p[0] = 0.05 * i;
    p[1] = -0.03 * i;
    singular.push(p);
  }
  for (Sign sign : signs_of(c)) {
    for (double eps : c.eps_list) {
      const FamilyParams params = FamilyParams::full(c.n, eps, sign);
      double route = 0.0, scaled = 0.0, block = 0.0;
      std::size_t scaled_points = 0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const EvalPoint p(params, points.point(i));
        const double direct = det(assemble_W(params, p));
        const double reduced = det_reduced(params, p);
        route = std::max(route, std::abs(direct - reduced) / std::max(1.0, std::abs(direct)));
        if (p.eta() >= 1e-3) {
          const double lhs = scaled_determinant(params, p);
          scaled = std::max(scaled, std::abs(lhs - reduced) / std::max(1.0, std::abs(reduced)));
          ++scaled_points;
        }
      }
      for (std::size_t i = 0; i < singular.size(); ++i) {
        const EvalPoint p(params, singular.point(i));
        const double direct = det(assemble_W(params, p));
        block = std::max(block, std::abs(direct - det_reduced(params, p)) /
                                    std::max(1.0, std::abs(direct)));
      }
      const double worst = std::max({route, scaled, block});
      cases.push_back({{"sign", sign_name(sign)},
                       {"epsilon", eps},
                       {"points", points.size()},
                       {"singular_set_points", singular.size()},
                       {"scaled_identity_points", scaled_points},
                       {"max_route_residual", route},
                       {"max_block_route_residual", block},
                       {"max_scaled_identity_residual", scaled},
                       {"tolerance", c.identity_tol},
                       {"pass", worst <= c.identity_tol}});
    }
  }
  return suite("identity", std::move(cases));
}

json blowup_suite(const RunConfig& c) {
  json cases = json::array();
  for (Sign sign : signs_of(c)) {
    const BlowupTable t = blowup_probe(c.n, sign, c.eps_list);
    json rows = json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"epsilon", r.epsilon},
                      {"z33_origin", r.z33},
                      {"predicted", r.predicted},
                      {"rel_error", r.rel_error},
                      {"slope", optional_number(r.slope)}});
    }
    cases.push_back({{"sign", sign_name(sign)},
                     {"expected_slope", t.expected_slope},
                     {"max_rel_error", t.max_rel_error},
                     {"max_slope_error", t.max_slope_error},
                     {"monotone", t.monotone},
                     {"rows", rows},
                     {"pass", t.pass}});
  }
  return suite("blowup", std::move(cases));
}

json uniformity_json(const Uniformity& u) {
  return json{{"stabilization_index", u.stabilization_index},
              {"stabilized_value", u.stabilized_value},
              {"max_value", u.max_value},
              {"excess", u.excess},
              {"pass", u.pass}};
}

json sweep_suite(const RunConfig& c, std::vector<SweepReport>* reports) {
  json cases = json::array();
  for (Sign sign : signs_of(c)) {
    SweepConfig sc;
    sc.n = c.n;
    sc.sign = sign;
    sc.rho = c.rho;
    sc.grid_res = c.grid_res;
    sc.eps_list = c.eps_list;
    sc.seed = c.seed;
    sc.pair_count = c.pair_count;
    sc.excess_tol = c.uniform_excess_tol;
    SweepReport r = uniform_c2_sweep(sc);
    json records = json::array();
    for (const auto& e : r.records) {
      records.push_back({{"epsilon", e.epsilon},
                         {"sup_f", e.sup_f},
                         {"sup_df", e.sup_df},
                         {"sup_d2f", e.sup_d2f},
                         {"z33_origin", e.z33_origin},
                         {"f_origin", e.f_origin},
                         {"f_origin_predicted", e.f_origin_predicted},
                         {"f_origin_rel_error", e.f_origin_rel_error},
                         {"holder_max", optional_number(e.holder_max)}});
    }
    cases.push_back({{"sign", sign_name(sign)},
                     {"rho", sc.rho},
                     {"grid_res", sc.grid_res},
                     {"seed", sc.seed},
                     {"point_count", r.point_count},
                     {"pair_count", sc.pair_count},
                     {"records", records},
                     {"uniform_c2", uniformity_json(r.c2)},
                     {"holder", r.holder ? uniformity_json(*r.holder) : json(nullptr)},
                     {"f_origin_pass", r.f_origin_pass},
                     {"pass", r.pass}});
    if (reports) reports->push_back(std::move(r));
  }
  return suite("sweep", std::move(cases));
}

json remark1_suite(const RunConfig& c) {
  json cases = json::array();
  for (Sign sign : signs_of(c)) {
    const Remark1Table t = remark1_probe(c.eta_list, 0.2, sign, c.eps_list);
    json rows = json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"eta", r.eta},
                      {"d2f_eta", r.d2f_eta},
                      {"growth_per_decade", optional_number(r.growth)},
                      {"full_family_d2f_eta", r.full_d2f_eta}});
    }
    cases.push_back({{"sign", sign_name(sign)},
                     {"x1", t.x1},
                     {"rows", rows},
                     {"fitted_slope", t.fitted_slope},
                     {"expected_slope", t.expected_slope},
                     {"min_growth_per_decade", t.min_growth_per_decade},
                     {"full_family_excess", t.full_excess},
                     {"growth_pass", t.growth_pass},
                     {"slope_pass", t.slope_pass},
                     {"full_family_bounded", t.full_bounded},
                     {"pass", t.pass}});
  }
  return suite("remark1", std::move(cases));
}

json scan_json(const ScanReport& s) {
  return json{{"epsilon", s.epsilon},
              {"rho", s.rho},
              {"grid_res", s.grid_res},
              {"seed", s.seed},
              {"point_count", s.point_count},
              {"block_route_points", s.block_route_points},
              {"failed_points", s.failed_points},
              {"certificate_disagreements", s.certificate_disagreements},
              {"min_trailing_minors", s.min_minor},
              {"min_eigenvalue", s.min_eigenvalue},
              {"min_scaled_det", optional_number(s.min_scaled_det)},
              {"certified", s.certified},
              {"witness", s.witness ? json(*s.witness) : json(nullptr)}};
}

json admissible_suite(const RunConfig& c) {
  ScanOptions opts;
  opts.grid_res = c.grid_res;
  opts.seed = c.seed;
  const std::vector<Sign> signs = signs_of(c);
  const CertifyResult r = certify_rho(c.n, c.rho_ladder, c.eps_list, signs, opts);
  json cases = json::array();
  for (const auto& s : r.per_sign) {
    json scans = json::array();
    bool consistent = true;
    for (const auto& scan : s.scans) {
      scans.push_back(scan_json(scan));
      if (scan.certificate_disagreements != 0) consistent = false;
    }
    cases.push_back({{"sign", sign_name(s.sign)},
                     {"rho_star", s.rho_star},
                     {"rho_per_epsilon", s.rho_per_epsilon},
                     {"uniform_in_epsilon", s.uniform_in_epsilon},
                     {"eps_min_tested", r.eps_min_tested},
                     {"certificates_agree", consistent},
                     {"scans", scans},
                     {"pass", s.rho_star > 0.0 && s.uniform_in_epsilon && consistent}});
  }
  json out = suite("admissible", std::move(cases));
  out["rho_star"] = r.rho_star;
  return out;
}

json minors_suite(const RunConfig& c) {
  json cases = json::array();
  const PointSet points = random_ball_points(c.n, kIdentityRadius, c.samples, c.seed + 1);
  for (Sign sign : signs_of(c)) {
    for (double eps : c.eps_list) {
      const FamilyParams params = FamilyParams::full(c.n, eps, sign);
      double worst = 0.0, radial = 0.0, block = 0.0, trailing = 0.0;
      std::size_t used = 0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const EvalPoint p(params, points.point(i));
        if (p.on_singular_set()) continue;
        const MinorResiduals m = minor_formula_check(params, p);
        for (double v : m.radial) radial = std::max(radial, v);
        block = std::max(block, m.radial_block);
        trailing = std::max(trailing, m.trailing);
        worst = std::max(worst, m.max_residual);
        ++used;
      }
      cases.push_back({{"sign", sign_name(sign)},
                       {"epsilon", eps},
                       {"points", used},
                       {"max_radial_minor_residual", radial},
                       {"max_radial_block_residual", block},
                       {"max_trailing_minor_residual", trailing},
                       {"tolerance", c.minor_tol},
                       {"pass", worst <= c.minor_tol}});
    }
  }
  return suite("minors", std::move(cases));
}

// --- CSV ----------------------------------------------------------------------------

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_number(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string to_csv(const json& report) {
  std::string out = "suite,case,field,value\n";
  for (const auto& s : report.at("suites")) {
    const std::string name = s.at("name").get<std::string>();
    const auto& cases = s.at("cases");
    for (std::size_t i = 0; i < cases.size(); ++i) {
      std::vector<std::pair<std::string, std::string>> fields;
      flatten(cases[i], "", fields);
      for (const auto& [k, v] : fields) out += name + "," + std::to_string(i) + "," + k + "," + v + "\n";
    }
  }
  return out;
}

// --- SVG ---------------------------------------------------------------------------

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

std::string svg_loglog(const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, const std::vector<Series>& series) {
  const double W = 640, H = 420, L = 80, R = 160, T = 40, B = 60;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) continue;
      xmin = std::min(xmin, std::log10(s.x[i]));
      xmax = std::max(xmax, std::log10(s.x[i]));
      ymin = std::min(ymin, std::log10(s.y[i]));
      ymax = std::max(ymax, std::log10(s.y[i]));
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
  if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
  auto px = [&](double lx) { return L + (lx - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double ly) { return H - B - (ly - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n";
  s << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << (T + H - B) / 2 << ")\">" << ylabel << "</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double lx = xmin + (xmax - xmin) * k / 4.0;
    const double ly = ymin + (ymax - ymin) * k / 4.0;
    s << "<text x=\"" << fmt(px(lx)) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(std::pow(10.0, lx)) << "</text>\n";
    s << "<text x=\"" << L - 6 << "\" y=\"" << fmt(py(ly) + 4) << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(std::pow(10.0, ly)) << "</text>\n";
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& sr = series[k];
    const char* col = colors[k % 5];
    std::string pts;
    for (std::size_t i = 0; i < sr.x.size(); ++i) {
      if (!(sr.x[i] > 0.0) || !(sr.y[i] > 0.0)) continue;
      const double X = px(std::log10(sr.x[i])), Y = py(std::log10(sr.y[i]));
      pts += fmt(X) + "," + fmt(Y) + " ";
      s << "<circle cx=\"" << fmt(X) << "\" cy=\"" << fmt(Y) << "\" r=\"3\" fill=\"" << col
        << "\"><title>" << fmt(sr.x[i]) << ", " << fmt(sr.y[i]) << "</title></circle>\n";
    }
    s << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << col << "\"/>\n";
    s << "<text x=\"" << W - R + 10 << "\" y=\"" << T + 16 * (k + 1) << "\" font-size=\"12\" fill=\"" << col << "\">" << sr.name << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_heatmap(const std::string& title, const std::vector<double>& values, int res,
                        double extent, const std::string& xlabel, const std::string& ylabel) {
  const double cell = 10, L = 70, T = 40;
  const double W = L + res * cell + 120, H = T + res * cell + 50;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : values)
    if (std::isfinite(v)) lo = std::min(lo, v), hi = std::max(hi, v);
  if (!std::isfinite(lo)) lo = 0, hi = 1;
  if (hi - lo < 1e-12) hi = lo + 1;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const double v = values[static_cast<std::size_t>(j * res + i)];
      const double X = L + i * cell, Y = T + (res - 1 - j) * cell;
      if (!std::isfinite(v)) {
        s << "<rect x=\"" << X << "\" y=\"" << Y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"#eeeeee\"/>\n";
        continue;
      }
      const double t = (v - lo) / (hi - lo);
      const int red = static_cast<int>(std::lround(255 * (1 - t)));
      const int blue = static_cast<int>(std::lround(255 * t));
      s << "<rect x=\"" << X << "\" y=\"" << Y << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"rgb(" << red << ",60," << blue << ")\"><title>" << fmt(v) << "</title></rect>\n";
    }
  }
  s << "<text x=\"" << L + res * cell / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << " in [" << fmt(-extent) << ", " << fmt(extent) << "]</text>\n";
  s << "<text x=\"20\" y=\"" << T + res * cell / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 " << T + res * cell / 2 << ")\">" << ylabel << "</text>\n";
  s << "<text x=\"" << L + res * cell + 10 << "\" y=\"" << T + 14 << "\" font-size=\"12\">max " << fmt(hi) << "</text>\n";
  s << "<text x=\"" << L + res * cell + 10 << "\" y=\"" << T + res * cell << "\" font-size=\"12\">min " << fmt(lo) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void add_plots(const RunConfig& c, const json& suites, const std::vector<SweepReport>& sweeps,
               RunResult& result) {
  for (const auto& s : suites) {
    if (s.at("name") == "blowup") {
      std::vector<Series> series;
      for (const auto& cs : s.at("cases")) {
        Series computed{"z33(0) " + cs.at("sign").get<std::string>(), {}, {}};
        Series predicted{"alpha eps^(alpha-2)", {}, {}};
        for (const auto& r : cs.at("rows")) {
          computed.x.push_back(r.at("epsilon").get<double>());
          computed.y.push_back(r.at("z33_origin").get<double>());
          predicted.x.push_back(r.at("epsilon").get<double>());
          predicted.y.push_back(r.at("predicted").get<double>());
        }
        series.push_back(std::move(computed));
        if (series.size() == 1) series.push_back(std::move(predicted));
      }
      result.svgs["blowup"] = svg_loglog("Hessian blow-up at the origin, n = " + std::to_string(c.n),
                                         "epsilon", "z_33(0)", series);
    }
  }
  if (!sweeps.empty()) {
    std::vector<Series> series;
    for (const auto& r : sweeps) {
      Series s{"sup|D2 f| " + sign_name(r.config.sign), {}, {}};
      for (const auto& e : r.records) {
        s.x.push_back(e.epsilon);
        s.y.push_back(e.sup_d2f);
      }
      series.push_back(std::move(s));
    }
    result.svgs["sup_d2f"] = svg_loglog("Uniform C2 sweep, n = " + std::to_string(c.n) + ", rho = " + fmt(c.rho),
                                        "epsilon", "sup |D^2 f|", series);
  }
  const bool has_admissible = std::any_of(suites.begin(), suites.end(),
                                          [](const json& s) { return s.at("name") == "admissible"; });
  if (has_admissible) {
    // log10 of the smallest trailing minor on the (x1, x3) slice.
    const int res = 41;
    const Sign sign = signs_of(c).front();
    const FamilyParams params = FamilyParams::full(c.n, c.eps_list.back(), sign);
    std::vector<double> values(static_cast<std::size_t>(res * res), std::numeric_limits<double>::quiet_NaN());
    for (int j = 0; j < res; ++j) {
      for (int i = 0; i < res; ++i) {
        std::vector<double> x(static_cast<std::size_t>(c.n), 0.0);
        x[0] = lattice_coordinate(c.rho, res, i);
        x[2] = lattice_coordinate(c.rho, res, j);
        if (x[0] * x[0] + x[2] * x[2] > c.rho * c.rho) continue;
        const EvalPoint p(params, x);
        const PointCertificate cert = certify_point(params, p);
        const double m = *std::min_element(cert.minors.begin(), cert.minors.end());
        values[static_cast<std::size_t>(j * res + i)] = m > 0.0 ? std::log10(m) : -300.0;
      }
    }
    result.svgs["min_minor"] = svg_heatmap(
        "log10 smallest Sylvester minor, eps = " + fmt(c.eps_list.back()) + ", sign " + sign_name(sign),
        values, res, c.rho, "x1", "x3");
  }
}

}  // namespace

void validate(const RunConfig& c) {
  if (std::find(kSubcommands.begin(), kSubcommands.end(), c.subcommand) == kSubcommands.end()) {
    throw std::invalid_argument("unknown subcommand '" + c.subcommand + "'");
  }
  if (c.n < 3 || c.n > kMaxFamilyDim) throw std::invalid_argument("--n must lie in [3, 16]");
  if (c.sign != "plus" && c.sign != "minus" && c.sign != "both") {
    throw std::invalid_argument("--sign must be plus, minus or both");
  }
  if (c.eps_list.empty()) throw std::invalid_argument("epsilon list is empty");
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) {
    if (!(c.eps_list[i] > 0.0)) throw std::invalid_argument("epsilon values must be positive");
    if (i && !(c.eps_list[i] < c.eps_list[i - 1])) {
      throw std::invalid_argument("epsilon list must be strictly decreasing");
    }
  }
  if (!(c.rho > 0.0) || c.rho > 0.25) throw std::invalid_argument("--rho must lie in (0, 0.25]");
  if (c.grid_res < 9 || c.grid_res % 2 == 0) throw std::invalid_argument("--grid must be odd and >= 9");
  if (c.pair_count < 1000) throw std::invalid_argument("--pairs must be at least 1000");
  if (c.samples == 0) throw std::invalid_argument("--samples must be positive");
  if (c.format != "json" && c.format != "csv") throw std::invalid_argument("--format must be json or csv");
  if (c.rho_ladder.empty()) throw std::invalid_argument("rho ladder is empty");
  for (double r : c.rho_ladder)
    if (!(r > 0.0) || r > kEvaluationRadiusCap) throw std::invalid_argument("ladder radii must lie in (0, 0.5]");
  if (c.eta_list.size() < 2) throw std::invalid_argument("eta list needs two or more values");
}

RunResult run_suites(const RunConfig& c) {
  validate(c);
  const bool all = c.subcommand == "all";
  json suites = json::array();
  std::vector<SweepReport> sweeps;
  if (all || c.subcommand == "identity") suites.push_back(identity_suite(c));
  if (all || c.subcommand == "blowup") suites.push_back(blowup_suite(c));
  if (all || c.subcommand == "sweep") suites.push_back(sweep_suite(c, &sweeps));
  if (all || c.subcommand == "remark1") suites.push_back(remark1_suite(c));
  if (all || c.subcommand == "admissible") suites.push_back(admissible_suite(c));
  if (all || c.subcommand == "minors") suites.push_back(minors_suite(c));

  bool pass = !suites.empty();
  for (const auto& s : suites) pass = pass && s.at("pass").get<bool>();
  json report{{"config", config_echo(c)}, {"suites", suites}, {"pass", pass}, {"version", report_version()}};

  RunResult result;
  result.pass = pass;
  result.json = canonical(report);
  result.csv = to_csv(report);
  if (c.plot) add_plots(c, suites, sweeps, result);
  return result;
}

}  // namespace amcx
