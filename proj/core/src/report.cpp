#include "knotvol/report.hpp"

#include <charconv>
#include <sstream>

#include "knotvol/flype.hpp"

namespace knotvol {

ValidationRejected::ValidationRejected(ValidationReport report)
    : Error("diagram rejected by the " + report.first_failure() + (report.first_failure() == "torus gate" ? "" : " gate")),
      report_(std::move(report)),
      gate_(report_.first_failure()) {}

Analysis analyze(const LinkDiagram& d, const std::string& name, const AnalysisOptions& options,
                 std::optional<double> reference_volume) {
  Analysis a;
  a.name = name;
  a.crossings = static_cast<int>(d.crossing_count());
  a.components = d.component_count();
  a.validation = validate(d);
  if (!a.validation.ok()) throw ValidationRejected(a.validation);

  const FaceMap fm = face_map(d);
  a.twist_reduced = is_twist_reduced(d);
  if (!a.twist_reduced) {
    a.warnings.push_back("a flype merges two twist regions; the diagram is not twist-reduced");
  }
  const auto regions = detect_twists(d, fm);
  a.twists = twist_profile(regions);
  a.delta = classify_delta_regions(augment(d, fm, regions));
  if (!a.delta.pierced_three_segment.empty()) {
    a.warnings.push_back(std::to_string(a.delta.pierced_three_segment.size()) +
                         " three-segment face(s) pierced by a crossing circle were not counted");
  }

  const CheckerboardPair cb = build_graphs(d, fm);
  a.black_vertices = static_cast<int>(cb.black.vertex_count());
  a.white_vertices = static_cast<int>(cb.white.vertex_count());
  a.stats = multiplicity_profile(reduce_graph(cb.black), reduce_graph(cb.white));
  a.identity_mismatches = twist_identity_mismatches(a.stats, a.twists);
  if (!a.identity_mismatches.empty()) {
    a.warnings.push_back("n_B(i) + n_W(i) != g_i for some i >= 2; diagram may not be twist-reduced");
  }

  a.j2 = jones2(d, options.bracket);
  a.h2 = head_tail(a.j2, 2);
  if (a.h2.a != 1 || a.h2.alpha != 1) a.warnings.push_back("extreme J(2) coefficients are not +-1");

  if (options.color3) {
    if (d.crossing_count() > options.max_color3_crossings && options.skip_color3_over_budget) {
      a.warnings.push_back("J(3) skipped: " + std::to_string(d.crossing_count()) +
                           " crossings exceed the budget of " +
                           std::to_string(options.max_color3_crossings));
    } else {
      a.j3 = colored_jones3(d, {options.bracket, options.max_color3_crossings});
      a.h3 = head_tail(*a.j3, 3);
    }
  }

  const bool figure_eight = d.is_knot() && d.crossing_count() == 4;
  BoundsReport& b = a.bounds;
  b.adams = adams_bound(a.crossings, figure_eight);
  b.agol_thurston = agol_thurston_bound(a.twists.t);
  b.refined = refined_bound(a.twists);
  b.refined_delta = refined_delta_bound(a.twists, a.delta.total());
  b.volumish = volumish_bound(a.h2);
  b.coefficient.name = "coefficient";
  b.coefficient.reason = "J(3) not computed";
  if (a.h3) {
    try {
      b.coefficient = coefficient_bound(a.h2, *a.h3);
    } catch (const ConventionError& e) {
      b.coefficient.reason = e.what();
      a.warnings.push_back(std::string("coefficient bound withheld: ") + e.what());
    }
  }
  finalize(b, reference_volume);

  if (a.h3) {
    const auto r = identity_residuals(a.twists, a.stats, a.h2, *a.h3);
    for (int i = 0; i < 3; ++i) a.residuals[i] = r[i];
  } else {
    a.residuals[0] = twist_number_residual(a.twists, a.h2);
  }
  a.residuals_ok = true;
  for (const auto& r : a.residuals) {
    if (r && *r != 0) a.residuals_ok = false;
  }
  if (!a.residuals_ok) a.warnings.push_back("nonzero coefficient identity residual; diagram may not be twist-reduced");
  return a;
}

namespace {

using json = nlohmann::ordered_json;

json int_map(const std::map<int, int>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

json polynomial(const LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json c = t.coefficient.fits_slong_p() ? json(t.coefficient.get_si()) : json(t.coefficient.get_str());
    terms.push_back(json::array({t.exponent, c}));
  }
  return {{"text", p.to_string()}, {"exponent_scale", p.exponent_scale()}, {"terms", terms}};
}

json head_tail_json(const HeadTail& h) {
  return {{"a", h.a}, {"b", h.b}, {"c", h.c}, {"gamma", h.gamma}, {"beta", h.beta},
          {"alpha", h.alpha}, {"k", h.k}, {"r", h.r}, {"leading_sign", h.leading_sign},
          {"trailing_sign", h.trailing_sign}};
}

json bound_json(const Bound& b) {
  json out;
  out["applicable"] = b.applicable;
  out["v3_multiple"] = b.applicable ? json(b.multiple) : json(nullptr);
  out["value"] = b.applicable ? json(b.value()) : json(nullptr);
  out["a"] = b.a;
  out["reason"] = b.applicable ? json(nullptr) : json(b.reason);
  return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string multiple_cell(const Bound& b) { return b.applicable ? std::to_string(b.multiple) : ""; }

}  // namespace

json to_json(const Analysis& a) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = a.name;
  j["crossings"] = a.crossings;
  j["components"] = a.components;
  j["twist_reduced"] = a.twist_reduced;

  json tp;
  tp["t"] = a.twists.t;
  tp["lengths"] = a.twists.lengths;
  tp["t_i"] = int_map(a.twists.exactly);
  tp["g_i"] = int_map(a.twists.at_least);
  j["twist_profile"] = tp;

  j["delta"] = {{"total", a.delta.total()},
                {"three_segment", a.delta.three_segment},
                {"two_segment", a.delta.two_segment},
                {"pierced_three_segment", a.delta.pierced_three_segment}};

  j["checkerboard"] = {{"black_vertices", a.black_vertices},
                       {"white_vertices", a.white_vertices},
                       {"tau_B", a.stats.tau_B},
                       {"tau_W", a.stats.tau_W},
                       {"n_B", int_map(a.stats.n_B)},
                       {"n_W", int_map(a.stats.n_W)},
                       {"identity_mismatches", a.identity_mismatches}};

  json coeffs;
  coeffs["n2"] = head_tail_json(a.h2);
  coeffs["n3"] = a.h3 ? head_tail_json(*a.h3) : json(nullptr);
  coeffs["stability"] = a.h3 ? "checked against J(3)" : "J(3) not computed";
  j["coefficients"] = coeffs;

  j["jones"] = {{"j2", polynomial(a.j2)}, {"j3", a.j3 ? polynomial(*a.j3) : json(nullptr)}};

  json bounds;
  bounds["v3"] = kV3;
  for (const Bound* b : a.bounds.all()) bounds[b->name] = bound_json(*b);
  j["bounds"] = bounds;
  j["best"] = a.bounds.best ? json{{"name", *a.bounds.best_name}, {"value", *a.bounds.best}} : json(nullptr);

  json res = json::array();
  for (const auto& r : a.residuals) res.push_back(r ? json(*r) : json(nullptr));
  j["identity_residuals"] = res;
  j["residuals_ok"] = a.residuals_ok;
  j["reference_volume"] = optional_number(a.bounds.reference_volume);
  j["slack"] = optional_number(a.bounds.slack);
  j["warnings"] = a.warnings;
  return j;
}

std::string csv_header() {
  return "name,crossings,t,g2,delta,tau_B,tau_W,b2,beta2,c2,gamma2,c3,gamma3,"
         "adams,agol_thurston,refined,refined_delta,coefficient,volumish,best,"
         "reference_volume,slack,residual1,residual2,residual3";
}

std::string to_csv_row(const Analysis& a) {
  std::ostringstream out;
  out << a.name << ',' << a.crossings << ',' << a.twists.t << ',' << a.twists.g_i(2) << ','
      << a.delta.total() << ',' << a.stats.tau_B << ',' << a.stats.tau_W << ',' << a.h2.b << ','
      << a.h2.beta << ',' << a.h2.c << ',' << a.h2.gamma << ',';
  if (a.h3) {
    out << a.h3->c << ',' << a.h3->gamma << ',';
  } else {
    out << ",,";
  }
  for (const Bound* b : a.bounds.all()) out << multiple_cell(*b) << ',';
  out << (a.bounds.best ? number(*a.bounds.best) : "") << ','
      << (a.bounds.reference_volume ? number(*a.bounds.reference_volume) : "") << ','
      << (a.bounds.slack ? number(*a.bounds.slack) : "");
  for (const auto& r : a.residuals) out << ',' << (r ? std::to_string(*r) : "");
  return out.str();
}

std::string to_text(const Analysis& a) {
  std::ostringstream out;
  out << a.name << ": " << a.crossings << " crossings, " << a.components << " component(s)\n";
  out << "  twists  t=" << a.twists.t << " lengths=[";
  for (std::size_t i = 0; i < a.twists.lengths.size(); ++i) out << (i ? "," : "") << a.twists.lengths[i];
  out << "] delta=" << a.delta.total() << "\n";
  out << "  graphs  tau_B=" << a.stats.tau_B << " tau_W=" << a.stats.tau_W << "\n";
  out << "  J(2)    " << a.j2.to_string() << "\n";
  if (a.j3) out << "  J(3)    " << a.j3->to_string() << "\n";
  out << "  coeffs  b2=" << a.h2.b << " c2=" << a.h2.c << " beta2=" << a.h2.beta
      << " gamma2=" << a.h2.gamma;
  if (a.h3) out << " c3=" << a.h3->c << " gamma3=" << a.h3->gamma;
  out << "\n  bounds (multiples of v3)\n";
  for (const Bound* b : a.bounds.all()) {
    out << "    " << b->name << ": ";
    if (b->applicable) {
      out << b->multiple << " = " << number(b->value());
    } else {
      out << "n/a (" << b->reason << ")";
    }
    out << "\n";
  }
  if (a.bounds.best) out << "  best    " << *a.bounds.best_name << " " << number(*a.bounds.best) << "\n";
  if (a.bounds.reference_volume) {
    out << "  volume  " << number(*a.bounds.reference_volume);
    if (a.bounds.slack) out << " slack " << number(*a.bounds.slack);
    out << "\n";
  }
  out << "  residuals";
  for (const auto& r : a.residuals) out << ' ' << (r ? std::to_string(*r) : "-");
  out << (a.residuals_ok ? " ok\n" : " MISMATCH\n");
  for (const auto& w : a.warnings) out << "  warning: " << w << "\n";
  return out.str();
}

}  // namespace knotvol
