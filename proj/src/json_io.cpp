#include "entrypow/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace entrypow {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s = buf;
  // keep the float-ness visible so parse/dump round-trips type-stably
  if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos &&
      s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

void dump_rec(const Json& j, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_rec(item, out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

Json to_json(const HSet& h) {
  Json j;
  j["discrete"] = to_string(h.set.discrete);
  j["ray_start"] = h.set.ray_start;
  j["mode"] = h.exact ? "exact" : "bounded";
  if (!h.exact) {
    j["lower"] = Json{{"discrete", to_string(h.lower.discrete)},
                      {"ray_start", h.lower.ray_start}};
    j["upper"] = Json{{"discrete", to_string(h.upper.discrete)},
                      {"ray_start", h.upper.ray_start}};
    if (!h.exclusions.empty()) j["exclusions"] = h.exclusions;
  }
  return j;
}

Json to_json(const HSetReport& rep) {
  Json j;
  j["method"] = to_string(rep.method);
  j["omega"] = rep.omega;
  j["r"] = rep.r;
  j["s"] = rep.s ? Json(*rep.s) : Json(nullptr);
  j["ce"] = Json{{"plain", rep.ce_plain}, {"psi", rep.ce_psi}, {"phi", rep.ce_phi}};
  j["hsets"] = Json{{"plain", to_json(rep.plain)},
                    {"psi", to_json(rep.psi)},
                    {"phi", to_json(rep.phi)}};
  return j;
}

Json to_json(const Graph& g, const PowerMap& p, const Verdict& v) {
  Json j;
  j["kind"] = p.kind == PowerKind::plain ? "plain"
              : p.kind == PowerKind::odd_psi ? "psi"
                                             : "phi";
  j["alpha"] = p.alpha;
  j["preserved"] = v.preserved;
  j["trials_run"] = v.trials_run;
  j["witnesses_tried"] = v.witnesses_tried;
  if (v.counterexample) {
    const auto& ce = *v.counterexample;
    Json c;
    c["witness"] = ce.witness;
    c["min_eigenvalue"] = ce.powered.min_eigenvalue;
    c["tolerance"] = ce.powered.tolerance_used;
    c["matrix"] = matrix_string(ce.matrix);
    c["graph"] = edge_list_string(g);
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const ProbeReport& rep, const Graph& g, const PowerMap*) {
  Json j;
  j["graph"] = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
  Json pts = Json::array();
  for (const auto& pt : rep.points) {
    pts.push_back(Json{{"alpha", pt.alpha},
                       {"plain", pt.plain_preserved},
                       {"psi", pt.psi_preserved},
                       {"phi", pt.phi_preserved}});
  }
  j["points"] = pts;
  j["empirical_ce"] = rep.empirical_ce ? Json(*rep.empirical_ce) : Json(nullptr);
  j["closed_form_available"] = rep.closed_form_available;
  j["hard_errors"] = rep.hard_errors;
  j["consistent"] = rep.consistent;
  return j;
}

Json to_json(const CrossCheckReport& rep) {
  Json j;
  j["consistent"] = rep.consistent;
  j["report"] = to_json(rep.report);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json item;
    item["kind"] = c.kind;
    item["alpha"] = c.alpha;
    item["expect"] = c.expect_preserved ? "preserved" : "falsified";
    item["observed"] = c.observed_preserved ? "preserved" : "falsified";
    item["ok"] = c.ok;
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j;
}

ReplayResult replay_verdict(const Json& j) {
  if (!j.contains("counterexample") || j["counterexample"].is_null())
    throw std::invalid_argument("replay file carries no counterexample");
  const Json& c = j["counterexample"];
  Graph g = parse_edge_list(c.at("graph").get<std::string>());
  SymMatrix m = parse_matrix(c.at("matrix").get<std::string>());
  PowerMap p{power_kind_from_string(j.at("kind").get<std::string>()),
             j.at("alpha").get<double>()};
  double tol = c.contains("tolerance") ? c["tolerance"].get<double>() : -1.0;

  ReplayResult out;
  out.in_cone_ok = in_cone(m, g, tol);
  auto verdict = is_psd(entrywise_power(m, p), tol);
  out.powered_min_eigenvalue = verdict.min_eigenvalue;
  out.tolerance_used = verdict.tolerance_used;
  out.reproduced = out.in_cone_ok && !verdict.is_psd;
  return out;
}

}  // namespace entrypow
