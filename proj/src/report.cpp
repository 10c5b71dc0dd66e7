#include "ausglue/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ausglue {

using Json = nlohmann::ordered_json;

namespace {

Json count_or_null(int v) {
  if (v < 0) return nullptr;
  if (v == kInfinite) return "inf";
  return v;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + ")";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const TowerReport& r, const Parameters& params) {
  Json j;
  j["input"] = r.input;
  Json p;
  p["k"] = r.k;
  p["n"] = r.n;
  p["field"] = current_field().name();
  for (const auto& [key, value] : params) p[key] = value;
  j["parameters"] = p;
  Json s;
  s["algebra_rank"] = r.algebra_rank;
  s["cluster_size"] = r.cluster_size;
  s["rank_gamma"] = count_or_null(r.rank_gamma);
  s["gldim_gamma"] = count_or_null(r.gldim_gamma);
  s["domdim_gamma"] = count_or_null(r.domdim_gamma);
  s["projinj_gamma"] = count_or_null(r.projinj_count);
  s["inj_not_proj_gamma"] = count_or_null(r.inj_not_proj_gamma);
  s["rank_sigma"] = count_or_null(r.rank_sigma);
  s["gldim_sigma"] = count_or_null(r.gldim_sigma);
  s["projinj_sigma"] = count_or_null(r.projinj_sigma);
  s["inj_not_proj_sigma"] = count_or_null(r.inj_not_proj_sigma);
  s["rigid"] = r.rigidity_ok ? Json(*r.rigidity_ok) : Json(nullptr);
  s["tau_d_closed"] = r.tau_d_closure_ok ? Json(*r.tau_d_closure_ok) : Json(nullptr);
  j["summary"] = s;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["status"] = c.status;
    if (!c.witness.empty()) e["witness"] = c.witness;
    claims.push_back(e);
  }
  j["claims"] = claims;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

std::string ar_json(const ARQuiver& q) {
  Json j;
  j["algebra"] = Json::array();
  for (std::size_t x = 0; x < q.algebra.size(); ++x) j["algebra"].push_back(q.algebra.label(static_cast<int>(x)));
  Json vs = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& v = q.vertices[i];
    Json e;
    e["id"] = v.id;
    e["dims"] = v.dims;
    e["projective"] = v.projective;
    e["injective"] = v.injective;
    e["tau"] = q.tau[i] < 0 ? Json(nullptr) : Json(q.vertices[q.tau[i]].id);
    vs.push_back(e);
  }
  j["vertices"] = vs;
  Json as = Json::array();
  for (const auto& a : q.arrows) as.push_back(Json{{"src", q.vertices[a.src].id}, {"dst", q.vertices[a.dst].id}, {"multiplicity", a.multiplicity}});
  j["arrows"] = as;
  return j.dump(2) + "\n";
}

std::string ar_dot(const ARQuiver& q) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& v : q.vertices)
    os << "  " << quoted(v.id) << " [label=" << quoted(v.id + "\\n" + dims_text(v.dims)) << "];\n";
  for (const auto& a : q.arrows) {
    os << "  " << quoted(q.vertices[a.src].id) << " -> " << quoted(q.vertices[a.dst].id);
    if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q.tau[i] >= 0)
      os << "  " << quoted(q.vertices[i].id) << " -> " << quoted(q.vertices[q.tau[i]].id)
         << " [style=dashed, constraint=false, arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string glued_json(const Glued& s) {
  Json j;
  j["n"] = s.input.n;
  j["k"] = s.input.k;
  Json vs = Json::array();
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    const auto& o = s.objects[i];
    vs.push_back(Json{{"id", s.cat.label(static_cast<int>(i))},
                      {"copy", o.shift},
                      {"dims", s.input.cluster[o.base].dims()}});
  }
  j["vertices"] = vs;
  Json as = Json::array();
  for (const auto& a : s.cat.gabriel_quiver())
    as.push_back(Json{{"src", s.cat.label(a.src)}, {"dst", s.cat.label(a.dst)}, {"multiplicity", a.multiplicity}});
  j["arrows"] = as;
  return j.dump(2) + "\n";
}

std::string glued_dot(const Glued& s) {
  std::ostringstream os;
  os << "digraph Glued {\n  rankdir=LR;\n  newrank=true;\n  node [shape=box];\n";
  for (int j = 0; j <= s.input.k; ++j) {
    os << "  subgraph cluster_" << j << " {\n    label=\"copy " << j << "\";\n";
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      const auto& o = s.objects[i];
      if (o.shift != j) continue;
      const std::string& id = s.cat.label(static_cast<int>(i));
      os << "    " << quoted(id) << " [label=" << quoted(id + "\\n" + dims_text(s.input.cluster[o.base].dims()))
         << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& a : s.cat.gabriel_quiver()) {
    os << "  " << quoted(s.cat.label(a.src)) << " -> " << quoted(s.cat.label(a.dst));
    if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string angles_json(const std::vector<Angle>& angles) {
  Json j = Json::array();
  for (const auto& a : angles) j.push_back(a.terms);
  return j.dump(2) + "\n";
}

}  // namespace ausglue
