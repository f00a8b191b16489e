#include "gapkit/report.hpp"

#include <sstream>

namespace gapkit {

Json envelope(const std::string& command, Json result) {
  Json j;
  j["schema"] = "gapkit";
  j["version"] = kSchemaVersion;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

Json to_json(const Bound& b) {
  Json j;
  j["value"] = b.str();
  j["rounding"] = to_string(b.dir);
  if (!b.provenance.empty()) j["provenance"] = b.provenance;
  return j;
}

Json to_json(const Interval& x) {
  return Json{{"lower", x.lower_str()}, {"upper", x.upper_str()}, {"rounding", "enclosure"}};
}

Json to_json(const MinimalPair& p) {
  Json j;
  j["r"] = p.r;
  j["P"] = p.P.str();
  j["Q"] = p.Q.str();
  j["height"] = p.height.get_str();
  j["minimality"] = to_string(p.minimality);
  j["kernel_dim"] = p.kernel_dim;
  j["siegel_bound"] = Json{{"value", p.siegel_bound.get_str()}, {"rounding", "up"}};
  return j;
}

Json to_json(const PairReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["vanishing"] = r.vanishing;
  j["coprime"] = r.coprime;
  j["degree"] = r.degree;
  if (r.part3) j["multiple_of_pair"] = *r.part3;
  if (r.G) j["G"] = r.G->str();
  j["failures"] = r.failures;
  return j;
}

Json to_json(const GapConstants& k) {
  bool arch = k.metric == Metric::Archimedean;
  Json j;
  j["metric"] = to_string(k.metric);
  j["d"] = k.d;
  j["mu"] = k.mu.get_str();
  j["C0"] = k.c0.get_str();
  j["pair"] = to_json(k.pair);
  j["mobius"] = k.mobius ? Json(k.mobius->str()) : Json();
  j[arch ? "C1" : "C3"] = to_json(k.c_small);
  j[arch ? "C2" : "C4"] = to_json(k.c_big);
  Json parts = Json::object();
  for (const auto& [name, b] : k.parts) parts[name] = to_json(b);
  j["parts"] = parts;
  return j;
}

Json to_json(const ThueSiegelParams& p) {
  Json j;
  j["d"] = p.d;
  j["a"] = p.a.get_str();
  j["t"] = to_json(p.t);
  j["tau"] = to_json(p.tau);
  j["lambda"] = to_json(p.lambda);
  j["delta"] = Json{{"value", p.delta.get_str()}, {"rounding", "exact"}};
  j["A"] = to_json(p.A);
  j["lambda_below_1.42_sqrt_d"] = p.lambda_ok;
  j["delta_inverse_below_41667_d^2"] = p.delta_ok;
  j["t_in_interval"] = p.t_interval_ok;
  j["tau_in_interval"] = p.tau_interval_ok;
  return j;
}

Json to_json(const CountBound& c) {
  return Json{{"inner_floor", c.inner_floor.get_str()}, {"bound", c.bound.get_str()}, {"value", to_json(c.value)}};
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.kind != VerdictKind::NotApplicable && v.kind != VerdictKind::Abstain) {
    j["gap_lhs"] = to_json(v.gap_lhs);
    j["gap_rhs"] = to_json(v.gap_rhs);
  }
  return j;
}

Json to_json(const EnhancedAut& aut) {
  Json j;
  j["form"] = aut.form.str();
  j["order"] = aut.order();
  j["structure"] = aut.structure;
  j["table1Class"] = aut_rational_class(aut);
  Json els = Json::array();
  for (const auto& e : aut.elements)
    els.push_back(Json{{"matrix", e.m.str()}, {"det", e.det.get_str()}, {"sign", e.sign}, {"order", e.order}});
  j["elements"] = els;
  return j;
}

Json to_json(const OrbitPartition& o) {
  return Json{{"blocks", o.blocks}, {"gamma_i", o.gamma_i}, {"gamma", o.gamma}};
}

Json to_json(const C5Result& c) {
  Json j;
  j["C10"] = to_json(c.c10);
  j["lewis_mahler_branch"] = to_json(c.lewis_mahler);
  j["galois"] = c.galois;
  auto fam = [](const C16Family& f) {
    Json parts = Json::object();
    for (const auto& [n, b] : f.parts) parts[n] = to_json(b);
    return Json{{"real_roots", f.roots.size()}, {"C11", to_json(f.c11)}, {"C16", to_json(f.value)}, {"parts", parts}};
  };
  if (c.alpha_family) j["alpha_family"] = fam(*c.alpha_family);
  if (c.inverse_family) j["inverse_family"] = fam(*c.inverse_family);
  j["C5"] = to_json(c.value);
  return j;
}

Json to_json(const Census& c) {
  Json j;
  j["form"] = c.problem.F.str();
  j["m"] = c.problem.m.get_str();
  j["box"] = c.problem.B.get_str();
  j["mu"] = c.mu.get_str();
  j["aut_order"] = c.aut.order();
  j["aut_structure"] = c.aut.structure;
  j["root_orbits"] = to_json(c.root_orbits);
  j["C5"] = to_json(c.c5);
  j["count"] = to_json(c.count);
  j["bound"] = c.bound.get_str();
  j["gyory_25d"] = c.gyory;
  j["applicable"] = c.applicable;
  j["solutions"] = c.entries.size();
  j["large_solutions"] = c.large_count;
  j["bound_ok"] = c.bound_ok;
  j["orbit_closed"] = c.orbit_closed;
  j["solution_orbits"] = c.solution_orbits;
  Json sols = Json::array();
  for (const auto& e : c.entries)
    sols.push_back(Json{{"x", e.sol.x.get_str()},
                        {"y", e.sol.y.get_str()},
                        {"F", e.sol.value.get_str()},
                        {"H", e.sol.height().get_str()},
                        {"root", e.root.index},
                        {"side", to_string(e.root.side)},
                        {"unique", e.root.unique},
                        {"orbit", e.orbit},
                        {"large", e.large}});
  j["entries"] = sols;
  j["notes"] = c.notes;
  return j;
}

Json to_json(const SweepReport& r, bool with_records) {
  Json j;
  j["certified"] = r.certified;
  j["certified_with_mobius"] = r.certified_mobius;
  j["certified_without_mobius"] = r.certified_plain;
  j["certified_archimedean"] = r.certified_arch;
  j["certified_padic"] = r.certified_padic;
  j["violations"] = r.violations;
  j["abstentions"] = r.abstentions;
  j["not_applicable"] = r.not_applicable;
  j["abstention_rate"] = r.abstention_rate();
  Json inst = Json::object();
  for (const auto& [name, counts] : r.by_instance) {
    Json c = Json::object();
    for (const auto& [k, n] : counts) c[to_string(k)] = n;
    inst[name] = c;
  }
  j["instances"] = inst;
  if (with_records) {
    Json recs = Json::array();
    for (const auto& rec : r.records)
      recs.push_back(Json{{"instance", rec.instance},
                          {"pair1", rec.pair1.str()},
                          {"pair2", rec.pair2.str()},
                          {"verdict", to_string(rec.verdict.kind)}});
    j["records"] = recs;
  }
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace gapkit
