#include "tcshift/report.hpp"

#include <fmt/format.h>

#include <json.hpp>

namespace tcshift {
namespace {

using Json = nlohmann::ordered_json;

Json atoms_json(const SignedMeasure1D& m) {
  Json out = Json::array();
  for (const auto& a : m.atoms()) out.push_back(Json::array({a.location, a.mass}));
  return out;
}

Json atoms_json(const AtomicMeasure2D& m) {
  Json out = Json::array();
  for (const auto& a : m.atoms()) out.push_back(Json::array({a.s, a.t, a.mass}));
  return out;
}

Json psd_json(const PsdReport& r) {
  return Json{{"dimension", r.dimension},
              {"min_eigenvalue", r.min_eigenvalue},
              {"trace", r.trace},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

Json verdict_json(const Verdict& v) {
  Json out{{"subnormal", v.subnormal}, {"reason", v.reason}};
  if (v.witness) {
    out["witness"] = Json{{"measure", to_string(v.witness->source)},
                          {"location", v.witness->location},
                          {"mass", v.witness->mass}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json diagnostics_json(const Diagnostics& d) {
  return Json{{"recip_norm_xi", d.recip_norm_xi},
              {"recip_norm_eta", d.recip_norm_eta},
              {"recip_norm_psi", d.recip_norm_psi},
              {"recip_norm_eta_y1", d.recip_norm_eta_y1}};
}

std::string_view slice_name(Direction d) { return d == Direction::Horizontal ? "row" : "column"; }

Json oracles_json(const OracleResults& o, bool subnormal) {
  Json out;
  out["order"] = o.order;
  out["window"] = o.window;
  Json h0{{"pass", o.h0.pass}, {"depth", o.h0.depth}};
  if (o.h0.first_failure) {
    h0["first_failure"] = Json{{"slice", slice_name(o.h0.first_failure->direction)},
                               {"index", o.h0.first_failure->index}};
  }
  out["h0"] = h0;
  if (o.interpolation) {
    Json interp{{"pass", o.interpolation->pass},
                {"max_order", o.interpolation->max_order},
                {"max_relative_error", o.interpolation->max_relative_error}};
    if (o.interpolation->first_failure) {
      const auto& f = *o.interpolation->first_failure;
      interp["first_failure"] =
          Json{{"k1", f.k1}, {"k2", f.k2}, {"expected", f.expected}, {"actual", f.actual}};
    }
    out["moment_interpolation"] = interp;
  }
  Json hankel = Json::array();
  bool hankel_pass = true;
  for (const auto& h : o.hankel) {
    hankel_pass = hankel_pass && h.report.pass();
    hankel.push_back(Json{{"slice", h.label},
                          {"even", psd_json(h.report.even)},
                          {"odd", psd_json(h.report.odd)}});
  }
  out["hankel"] = Json{{"status", to_string(classify(subnormal, hankel_pass))}, {"slices", hankel}};
  Json mm = psd_json(o.moment_matrix);
  mm["status"] = to_string(classify(subnormal, o.moment_matrix.pass));
  out["moment_matrix"] = mm;
  Json jh = psd_json(o.compression);
  jh["status"] = to_string(classify(subnormal, o.compression.pass));
  out["joint_hyponormality"] = jh;
  return out;
}

std::string g6(double x) { return fmt::format("{:.6g}", x); }

std::string atoms_text(const SignedMeasure1D& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& a : m.atoms()) {
    if (!out.empty()) out += " + ";
    out += fmt::format("{} d({})", g6(a.mass), g6(a.location));
  }
  return out;
}

std::string atoms_text(const AtomicMeasure2D& m) {
  std::string out;
  for (const auto& a : m.atoms()) {
    if (!out.empty()) out += " + ";
    out += fmt::format("{} d({}, {})", g6(a.mass), g6(a.s), g6(a.t));
  }
  return out.empty() ? "0" : out;
}

std::string psd_text(const PsdReport& r) {
  return fmt::format("{} (dim {}, min eigenvalue {}, tolerance {})", r.pass ? "pass" : "fail",
                     r.dimension, g6(r.min_eigenvalue), g6(r.tolerance));
}

}  // namespace

std::string_view to_string(WitnessSource source) {
  return source == WitnessSource::Psi ? "psi" : "phi";
}

std::string render_json(const Report& report) {
  Json out;
  out["command"] = report.command;
  out["kind"] = report.kind;
  out["verdict"] = verdict_json(report.verdict);
  if (report.include_measures) {
    out["psi"] = atoms_json(report.verdict.psi);
    out["phi"] = atoms_json(report.verdict.phi);
    out["mu"] = report.verdict.berger ? atoms_json(*report.verdict.berger) : Json(nullptr);
    out["diagnostics"] = diagnostics_json(report.verdict.diagnostics);
  }
  if (report.oracles) out["oracles"] = oracles_json(*report.oracles, report.verdict.subnormal);
  if (report.elapsed_ms) out["timings"] = Json{{"elapsed_ms", *report.elapsed_ms}};
  return out.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  const auto& v = report.verdict;
  std::string out = fmt::format("verdict: {}\n", v.subnormal ? "subnormal" : "not subnormal");
  if (v.witness) {
    out += fmt::format("witness: {} has mass {} at {}\n", to_string(v.witness->source),
                       g6(v.witness->mass), g6(v.witness->location));
  }
  out += fmt::format("reason: {}\n", v.reason);
  if (report.include_measures) {
    out += fmt::format("psi: {}\n", atoms_text(v.psi));
    out += fmt::format("phi: {}\n", atoms_text(v.phi));
    if (v.berger) out += fmt::format("mu: {}\n", atoms_text(*v.berger));
    const auto& d = v.diagnostics;
    out += fmt::format("||1/s||_xi = {}, ||1/t||_eta = {}, ||1/t||_psi = {}, ||1/t||_(eta_y)1 = {}\n",
                       g6(d.recip_norm_xi), g6(d.recip_norm_eta), g6(d.recip_norm_psi),
                       g6(d.recip_norm_eta_y1));
  }
  if (report.oracles) {
    const auto& o = *report.oracles;
    out += fmt::format("H0 membership (depth {}): {}", o.h0.depth, o.h0.pass ? "pass" : "fail");
    if (o.h0.first_failure) {
      out += fmt::format(" at {} {}", slice_name(o.h0.first_failure->direction),
                         o.h0.first_failure->index);
    }
    out += "\n";
    if (o.interpolation) {
      out += fmt::format("moment interpolation (order {}): {}, max relative error {}\n",
                         o.interpolation->max_order, o.interpolation->pass ? "pass" : "fail",
                         g6(o.interpolation->max_relative_error));
    }
    bool hankel_pass = true;
    for (const auto& h : o.hankel) hankel_pass = hankel_pass && h.report.pass();
    out += fmt::format("hankel (rows/columns 0..{}): {} [{}]\n", o.window,
                       hankel_pass ? "pass" : "fail", to_string(classify(v.subnormal, hankel_pass)));
    for (const auto& h : o.hankel) {
      if (!h.report.pass()) {
        out += fmt::format("  {}: even {}, odd {}\n", h.label, psd_text(h.report.even),
                           psd_text(h.report.odd));
      }
    }
    out += fmt::format("moment matrix: {} [{}]\n", psd_text(o.moment_matrix),
                       to_string(classify(v.subnormal, o.moment_matrix.pass)));
    out += fmt::format("joint hyponormality (window {}): {} [{}]\n", o.window,
                       psd_text(o.compression), to_string(classify(v.subnormal, o.compression.pass)));
  }
  if (report.elapsed_ms) out += fmt::format("elapsed: {} ms\n", g6(*report.elapsed_ms));
  return out;
}

}  // namespace tcshift
