#include "linksig/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace linksig {

namespace {

using nlohmann::json;

std::string exact_cos(const CirclePoint& p) {
  if (p.kind() == CircleKind::AlgebraicCos)
    return "root of " + p.trace_root().poly.str("x") + " in (" + to_string(p.trace_root().lo) +
           ", " + to_string(p.trace_root().hi) + "), x = 2cos theta";
  return to_string(p.cos_value());
}

json point_json(const StepPoint& pt) {
  json j;
  j["point"] = pt.point.report_form();
  j["cos"] = exact_cos(pt.point);
  j["multiplicity"] = pt.multiplicity;
  if (const auto* sv = std::get_if<SignatureValue>(&pt.value)) {
    j["value"] = sv->signature;
    j["nullity"] = sv->nullity;
    j["ju_minus"] = pt.jumps->first;
    j["ju_plus"] = pt.jumps->second;
  } else {
    const auto& up = std::get<UnresolvedPoint>(pt.value);
    j["unresolved"] = true;
    j["nullity_bound"] = up.nullity_bound;
    j["arc_before"] = pt.arc_before;
    j["arc_after"] = pt.arc_after;
  }
  return j;
}

double cos_approx(const CirclePoint& p) {
  if (p.kind() == CircleKind::AlgebraicCos)
    return (p.trace_root().lo.get_d() + p.trace_root().hi.get_d()) / 4.0;
  return p.cos_value().get_d();
}

double theta_over_pi(const CirclePoint& p) {
  double c = cos_approx(p);
  c = std::max(-1.0, std::min(1.0, c));
  return std::acos(c) / std::acos(-1.0);
}

std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

NamedMatrix parse_matrix_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw std::invalid_argument("matrix file: missing \"matrix\" array");
  const auto& rows = j["matrix"];
  const int n = static_cast<int>(rows.size());
  Matrix<Int> m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("matrix file: matrix must be square, row-major");
    for (int k = 0; k < n; ++k) {
      if (!rows[i][k].is_number_integer())
        throw std::invalid_argument("matrix file: entries must be integers");
      m.at(i, k) = Int(static_cast<long>(rows[i][k].get<long long>()));
    }
  }
  NamedMatrix nm;
  nm.name = j.value("name", "unnamed");
  nm.matrix = std::move(m);
  return nm;
}

NamedMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_json(ss.str());
}

std::string matrix_to_json(const std::string& name, const Matrix<Int>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
    rows.push_back(row);
  }
  json j;
  j["name"] = name;
  j["matrix"] = rows;
  return j.dump();
}

std::string invariants_report_json(const std::string& name, const SeifertMatrix& s,
                                   const LinkInvariants& inv) {
  json j;
  j["schema"] = 1;
  j["name"] = name;
  j["n"] = s.n();
  j["mu"] = s.components();
  j["genus"] = s.genus();
  j["h"] = inv.h_index;
  json deltas = json::array();
  for (size_t i = 0; i < inv.deltas.size(); ++i)
    deltas.push_back({{"i", i + 1}, {"poly", inv.deltas[i].str()}});
  j["deltas"] = deltas;
  j["a_poly"] = inv.a_poly.str();
  json factors = json::array();
  for (const LaurentPoly& d : inv.factors) factors.push_back(d.str());
  j["invariant_factors"] = factors;
  j["free_rank"] = inv.free_rank;
  return j.dump(2);
}

std::string step_function_report_json(const std::string& name, const SeifertMatrix& s,
                                      const StepFunction& sf,
                                      const std::vector<ShadowSample>& shadow) {
  json j;
  j["schema"] = 1;
  j["name"] = name;
  j["w_formula"] = "W(t) = (1-t) V + (1-1/t) V^T";
  json arcs = json::array();
  for (int a = 0; a < sf.arc_count(); ++a) {
    const CirclePoint& from = sf.points[a].point;
    json arc;
    arc["start_cos"] = exact_cos(from);
    arc["end_cos"] = (a + 1 < static_cast<int>(sf.points.size()))
                         ? exact_cos(sf.points[a + 1].point)
                         : std::string("-1");
    arc["value"] = sf.arc_values[a];
    arc["sample_cos"] = to_string(sf.arc_samples[a].c);
    arcs.push_back(arc);
  }
  j["arcs"] = arcs;
  json points = json::array();
  for (const StepPoint& pt : sf.points) points.push_back(point_json(pt));
  j["points"] = points;
  j["murasugi_signature"] = sf.murasugi;
  j["sigma_plus_at_1"] = sf.sigma_plus_at_one();
  if (!shadow.empty()) {
    long checked = 0, agree = 0;
    for (const ShadowSample& sh : shadow) {
      checked += sh.checked;
      agree += sh.checked && sh.agrees;
    }
    // Floating-point diagnostic only; every other field is exact.
    j["shadow_diagnostic"] = {{"samples", shadow.size()}, {"checked", checked},
                              {"agreeing", agree}};
  }
  return j.dump(2);
}

std::string check_reports_json(const std::string& name,
                               const std::vector<TheoremReport>& reports) {
  json j;
  j["schema"] = 1;
  j["name"] = name;
  bool all = true;
  json arr = json::array();
  for (const TheoremReport& r : reports) {
    json rep;
    rep["theorem"] = r.theorem_id;
    rep["applicable"] = r.applicable;
    rep["overall"] = r.overall();
    if (r.applicable && !r.overall()) all = false;
    json checks = json::array();
    for (const CheckItem& c : r.checks) {
      json cj;
      cj["description"] = c.description;
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cj["pass"] = c.pass;
      if (c.weakened) cj["weakened"] = true;
      checks.push_back(cj);
    }
    rep["checks"] = checks;
    rep["witnesses"] = r.witnesses;
    arr.push_back(rep);
  }
  j["reports"] = arr;
  j["pass"] = all;
  return j.dump(2);
}

std::string campaign_summary_json(const CampaignSummary& summary) {
  json j;
  j["schema"] = 1;
  j["count"] = summary.options.count;
  j["size_bound"] = summary.options.size_bound;
  j["seed"] = summary.options.seed;
  j["samples_per_arc"] = summary.options.samples_per_arc;
  j["inject_fault"] = summary.options.inject_fault;
  j["matrices"] = summary.matrices;
  j["checks_run"] = summary.checks_run;
  j["shadow"] = {{"samples", summary.shadow_samples}, {"checked", summary.shadow_checked}};
  json fails = json::array();
  for (const CampaignFailure& f : summary.failures) {
    json fj;
    fj["index"] = f.index;
    fj["matrix_name"] = f.matrix_name;
    fj["matrix"] = json::parse(f.matrix_json);
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fails.push_back(fj);
  }
  j["failures"] = fails;
  j["pass"] = summary.failures.empty();
  return j.dump(2);
}

std::string diagonal_form_json(const DiagonalForm& form) {
  json j;
  j["schema"] = 1;
  j["f"] = form.f_factor.str();
  json entries = json::array();
  for (const DiagEntry& e : form.entries) {
    json ej;
    ej["unit_num"] = e.unit.num.str();
    ej["unit_den"] = e.unit.den.str();
    ej["epsilon"] = e.epsilon;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  j["zeros"] = form.zero_count;
  json ops = json::array();
  for (const DiagOp& op : form.operations) {
    json oj;
    oj["kind"] = op.kind;
    oj["i"] = op.i;
    oj["j"] = op.j;
    if (!op.multiplier.empty()) oj["multiplier"] = op.multiplier;
    ops.push_back(oj);
  }
  j["operations"] = ops;
  return j.dump(2);
}

std::string step_function_csv(const StepFunction& sf) {
  std::ostringstream out;
  out << "arc_start_cos,arc_end_cos,value\n";
  for (int a = 0; a < sf.arc_count(); ++a) {
    const std::string start = exact_cos(sf.points[a].point);
    const std::string end = (a + 1 < static_cast<int>(sf.points.size()))
                                ? exact_cos(sf.points[a + 1].point)
                                : std::string("-1");
    out << csv_quote(start) << "," << csv_quote(end) << "," << sf.arc_values[a] << "\n";
  }
  out << "point,cos_form,value_or_unresolved,ju_minus,ju_plus\n";
  for (const StepPoint& pt : sf.points) {
    out << csv_quote(pt.point.report_form()) << "," << csv_quote(exact_cos(pt.point)) << ",";
    if (const auto* sv = std::get_if<SignatureValue>(&pt.value))
      out << sv->signature << "," << pt.jumps->first << "," << pt.jumps->second;
    else
      out << "unresolved(nullity<=" << std::get<UnresolvedPoint>(pt.value).nullity_bound
          << "),,";
    out << "\n";
  }
  return out.str();
}

std::string step_function_svg(const StepFunction& sf) {
  const double width = 640, height = 400, ml = 50, mr = 20, mt = 20, mb = 40;
  int lo = 0, hi = 0;
  for (int v : sf.arc_values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  for (const StepPoint& pt : sf.points)
    if (const auto* sv = std::get_if<SignatureValue>(&pt.value)) {
      lo = std::min(lo, sv->signature);
      hi = std::max(hi, sv->signature);
    }
  lo -= 1;
  hi += 1;
  auto xmap = [&](double t) { return ml + t * (width - ml - mr); };
  auto ymap = [&](double v) { return mt + (hi - v) / double(hi - lo) * (height - mt - mb); };

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
      << "' viewBox='0 0 " << width << " " << height << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  // axes and integer grid lines
  for (int v = lo; v <= hi; ++v) {
    out << "<line x1='" << xmap(0) << "' y1='" << ymap(v) << "' x2='" << xmap(1) << "' y2='"
        << ymap(v) << "' stroke='" << (v == 0 ? "#999" : "#eee") << "'/>\n";
    out << "<text x='" << ml - 8 << "' y='" << ymap(v) + 4
        << "' font-size='11' text-anchor='end'>" << v << "</text>\n";
  }
  out << "<line x1='" << xmap(0) << "' y1='" << ymap(lo) << "' x2='" << xmap(0) << "' y2='"
      << ymap(hi) << "' stroke='#999'/>\n";
  out << "<text x='" << xmap(0.5) << "' y='" << height - 8
      << "' font-size='12' text-anchor='middle'>theta / pi</text>\n";
  for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0})
    out << "<text x='" << xmap(tick) << "' y='" << height - 22
        << "' font-size='11' text-anchor='middle'>" << tick << "</text>\n";

  // arcs
  for (int a = 0; a < sf.arc_count(); ++a) {
    double x0 = theta_over_pi(sf.points[a].point);
    double x1 = (a + 1 < static_cast<int>(sf.points.size()))
                    ? theta_over_pi(sf.points[a + 1].point)
                    : 1.0;
    out << "<line x1='" << xmap(x0) << "' y1='" << ymap(sf.arc_values[a]) << "' x2='"
        << xmap(x1) << "' y2='" << ymap(sf.arc_values[a])
        << "' stroke='#1f77b4' stroke-width='2'/>\n";
  }
  // point dots: filled = exact, open = unresolved
  for (const StepPoint& pt : sf.points) {
    const double x = xmap(theta_over_pi(pt.point));
    if (const auto* sv = std::get_if<SignatureValue>(&pt.value))
      out << "<circle cx='" << x << "' cy='" << ymap(sv->signature)
          << "' r='4' fill='#d62728'/>\n";
    else
      out << "<circle cx='" << x << "' cy='"
          << (ymap(pt.arc_before) + ymap(pt.arc_after)) / 2
          << "' r='4' fill='white' stroke='#d62728' stroke-width='1.5'/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace linksig
