#include "adlv/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace adlv {

namespace {

Json int_array(const int* xs, int n) {
  Json a = Json::array();
  for (int i = 0; i < n; ++i) a.push_back(xs[i]);
  return a;
}

std::string word_string(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += 's' + std::to_string(w[k]);
  }
  return s;
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw StructuralError(where + ": expected an integer");
  return v.get<int>();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json rational_array(const RootDatum& d, const RationalCoweight& v) {
  Json a = Json::array();
  for (int i = 0; i < d.rank(); ++i) {
    std::ostringstream os;
    os << v[i];
    a.push_back(os.str());
  }
  return a;
}

// Sorted vertex order: (length, reduced word).
std::vector<int> vertex_order(const ConnectivityGraph& g) {
  const RootDatum& d = g.root_datum();
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v)
    keyed.emplace_back(g.vertices()[v].reduced_word(d), v);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a < b;
  });
  std::vector<int> rank(keyed.size());
  for (std::size_t k = 0; k < keyed.size(); ++k) rank[keyed[k].second] = static_cast<int>(k);
  return rank;
}

std::vector<int> edge_order(const ConnectivityGraph& g, const std::vector<int>& rank) {
  std::vector<int> idx(g.edges().size());
  std::iota(idx.begin(), idx.end(), 0);
  auto key = [&](int e) {
    int a = rank[g.edges()[e].a], b = rank[g.edges()[e].b];
    return std::tuple{std::min(a, b), std::max(a, b), g.edges()[e].root};
  };
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key(x) < key(y); });
  return idx;
}

}  // namespace

const char* to_string(Isogeny iso) {
  switch (iso) {
    case Isogeny::Adjoint:
      return "adjoint";
    case Isogeny::SimplyConnected:
      return "simply_connected";
    case Isogeny::Intermediate:
      return "intermediate";
  }
  return "?";
}

Isogeny parse_isogeny(const std::string& s) {
  if (s == "adjoint" || s == "ad") return Isogeny::Adjoint;
  if (s == "simply_connected" || s == "sc") return Isogeny::SimplyConnected;
  if (s == "intermediate") return Isogeny::Intermediate;
  throw StructuralError("isogeny: unknown value '" + s + "'");
}

Json to_json(const DatumConfig& c) {
  Json j;
  j["type"] = std::string(1, c.type);
  j["rank"] = c.rank;
  j["isogeny"] = to_string(c.isogeny);
  if (c.isogeny == Isogeny::Intermediate) {
    Json rows = Json::array();
    for (const Coweight& v : c.lattice) rows.push_back(int_array(v.c.data(), c.rank));
    j["lattice"] = rows;
  }
  return j;
}

DatumConfig datum_config_from_json(const Json& j) {
  if (!j.is_object()) throw StructuralError("datum: expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "type" && k != "rank" && k != "isogeny" && k != "lattice")
      throw StructuralError("datum." + k + ": unknown field");
  DatumConfig c;
  if (!j.contains("type") || !j["type"].is_string() || j["type"].get<std::string>().size() != 1)
    throw StructuralError("datum.type: expected a one-letter string");
  c.type = j["type"].get<std::string>()[0];
  if (!j.contains("rank")) throw StructuralError("datum.rank: missing");
  c.rank = as_int(j["rank"], "datum.rank");
  if (j.contains("isogeny")) {
    if (!j["isogeny"].is_string()) throw StructuralError("datum.isogeny: expected a string");
    c.isogeny = parse_isogeny(j["isogeny"].get<std::string>());
  }
  if (j.contains("lattice")) {
    if (!j["lattice"].is_array()) throw StructuralError("datum.lattice: expected an array");
    for (std::size_t r = 0; r < j["lattice"].size(); ++r) {
      const Json& row = j["lattice"][r];
      const std::string where = "datum.lattice[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != c.rank)
        throw StructuralError(where + ": expected " + std::to_string(c.rank) + " integers");
      Coweight v;
      for (int i = 0; i < c.rank; ++i) v[i] = as_int(row[i], where + "[" + std::to_string(i) + "]");
      c.lattice.push_back(v);
    }
  }
  return c;
}

Json to_json(const RootDatum& d, const Coweight& v) { return int_array(v.c.data(), d.rank()); }
Json to_json(const RootDatum& d, const Root& a) { return int_array(a.c.data(), d.rank()); }

Json to_json(SimpleSubset J) {
  Json a = Json::array();
  for (int i : J.indices()) a.push_back(i);
  return a;
}

Coweight coweight_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_array()) throw StructuralError("coweight: expected an integer array");
  if (static_cast<int>(j.size()) != d.rank())
    throw StructuralError("coweight: expected " + std::to_string(d.rank()) + " entries, got " +
                          std::to_string(j.size()));
  Coweight v;
  for (int i = 0; i < d.rank(); ++i) v[i] = as_int(j[i], "coweight[" + std::to_string(i) + "]");
  d.check(v);
  return v;
}

SimpleSubset subset_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_array()) throw StructuralError("subset: expected an index array");
  SimpleSubset J;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const int i = as_int(j[k], "subset[" + std::to_string(k) + "]");
    if (i < 0 || i >= d.rank())
      throw StructuralError("subset[" + std::to_string(k) + "]: index " + std::to_string(i) +
                            " out of range");
    J = J.with(i);
  }
  return J;
}

Json to_json(const RootDatum& d, const ExtAffineElement& x) {
  Json j;
  j["mu"] = to_json(d, x.translation_part());
  j["w"] = x.finite_part().reduced_word(d);
  const int len = length(d, x);
  j["length"] = len;
  if (len == 0) j["pi1"] = kottwitz(d, x);
  return j;
}

ExtAffineElement element_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("w"))
    throw StructuralError("element: expected {\"mu\": [...], \"w\": [...]}");
  const Coweight mu = coweight_from_json(d, j["mu"]);
  if (!j["w"].is_array()) throw StructuralError("element.w: expected an index array");
  std::vector<int> word;
  for (std::size_t k = 0; k < j["w"].size(); ++k) {
    const int s = as_int(j["w"][k], "element.w[" + std::to_string(k) + "]");
    if (s < 0 || s >= d.rank())
      throw StructuralError("element.w[" + std::to_string(k) + "]: index out of range");
    word.push_back(s);
  }
  return {mu, FiniteWeylElement::from_word(d, word)};
}

Json to_json(const RootDatum& d, const AdmissibleSet& adm) {
  Json j;
  j["lambda"] = to_json(d, adm.lambda);
  j["count"] = adm.elements.size();
  Json els = Json::array();
  for (const auto& x : adm.elements) els.push_back(to_json(d, x));
  j["elements"] = els;
  Json st = Json::array();
  for (const auto& x : adm.straight) st.push_back(to_json(d, x));
  j["straight"] = st;
  return j;
}

Json to_json(const RootDatum& d, const ShortDatum& sd) {
  Json j;
  j["mu"] = to_json(d, sd.mu);
  j["J_nu"] = to_json(sd.J_nu);
  j["J"] = to_json(sd.J);
  j["K"] = to_json(sd.K);
  j["nu"] = rational_array(d, sd.nu);
  j["wtilde"] = to_json(d, sd.wtilde);
  return j;
}

Json to_json(const HNClass& c) {
  Json j;
  j["tag"] = to_string(c.tag);
  j["reason"] = c.reason;
  if (c.failing_coefficient >= 0) j["failing_coefficient"] = c.failing_coefficient;
  return j;
}

Json to_json(const FoldingDatum& fd, const ExtAffineElement& folded) {
  Json j;
  j["folded"] = to_json(fd.folded(), folded);
  j["ambient"] = to_json(fd.ambient(), fd.embed(folded));
  return j;
}

std::string certificate_digest(const RootDatum& d, const EdgeCertificate& c) {
  std::ostringstream os;
  os << word_string(c.from.reduced_word(d)) << '|' << word_string(c.to.reduced_word(d)) << '|';
  for (int i = 0; i < d.rank(); ++i) os << c.gamma[i] << ',';
  os << '|' << c.adm_right << c.adm_left << static_cast<int>(c.evidence) << c.perm.permissible
     << c.perm.failing;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return buf;
}

std::string render_dot(const std::vector<std::string>& labels, const std::vector<DotEdge>& edges) {
  std::ostringstream os;
  os << "graph adlv {\n";
  for (std::size_t k = 0; k < labels.size(); ++k) os << "  v" << k << " [label=\"" << labels[k] << "\"];\n";
  for (const DotEdge& e : edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const ConnectivityGraph& g) {
  const RootDatum& d = g.root_datum();
  const std::vector<int> rank = vertex_order(g);
  std::vector<std::string> labels(rank.size());
  for (std::size_t v = 0; v < rank.size(); ++v)
    labels[rank[v]] = word_string(g.vertices()[v].reduced_word(d));
  std::vector<DotEdge> edges;
  for (int e : edge_order(g, rank)) {
    const auto& ed = g.edges()[e];
    DotEdge de{std::min(rank[ed.a], rank[ed.b]), std::max(rank[ed.a], rank[ed.b]), ""};
    for (int i = 0; i < d.rank(); ++i) de.label += (i ? "," : "") + std::to_string(ed.cert.gamma[i]);
    edges.push_back(de);
  }
  return render_dot(labels, edges);
}

Json graph_to_json(const ConnectivityGraph& g) {
  const RootDatum& d = g.root_datum();
  const std::vector<int> rank = vertex_order(g);
  std::vector<int> by_rank(rank.size());
  for (std::size_t v = 0; v < rank.size(); ++v) by_rank[rank[v]] = static_cast<int>(v);
  Json j;
  j["schema"] = kSchemaVersion;
  j["short_datum"] = to_json(d, g.datum());
  Json vs = Json::array();
  for (int v : by_rank) vs.push_back(g.vertices()[v].reduced_word(d));
  j["vertices"] = vs;
  Json es = Json::array();
  for (int e : edge_order(g, rank)) {
    const auto& ed = g.edges()[e];
    int a = rank[ed.a], b = rank[ed.b];
    if (a > b) std::swap(a, b);
    Json je;
    je["a"] = a;
    je["b"] = b;
    je["gamma"] = to_json(d, ed.cert.gamma);
    je["evidence"] = ed.cert.evidence == AdmEvidence::Oracle ? "oracle" : "bound";
    je["digest"] = certificate_digest(d, ed.cert);
    es.push_back(je);
  }
  j["edges"] = es;
  return j;
}

Json to_json(const ConnectivityGraph& g, const HypReport& r) {
  const RootDatum& d = g.root_datum();
  const std::vector<int> rank = vertex_order(g);
  Json j;
  j["connected"] = r.connected;
  j["vertices"] = g.vertices().size();
  j["edges"] = g.edges().size();
  j["symmetry_checked"] = g.symmetry_checked();
  j["symmetry_failures"] = g.symmetry_failures();
  std::vector<std::pair<int, Json>> rows;
  for (std::size_t v = 0; v < r.witness.size(); ++v) {
    Json w;
    w["vertex"] = g.vertices()[v].reduced_word(d);
    Json path = Json::array();
    for (int e : r.witness[v]) {
      Json step;
      step["gamma"] = to_json(d, g.edges()[e].cert.gamma);
      step["digest"] = certificate_digest(d, g.edges()[e].cert);
      path.push_back(step);
    }
    w["path"] = path;
    rows.emplace_back(rank[v], w);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json ws = Json::array();
  for (auto& [k, w] : rows) ws.push_back(std::move(w));
  j["witness"] = ws;
  Json un = Json::array();
  for (int v : r.unreached) un.push_back(g.vertices()[v].reduced_word(d));
  j["unreached"] = un;
  return j;
}

Json to_json(const SeqSweep& s) {
  Json j;
  j["type"] = s.type;
  j["configs"] = s.configs;
  Json c;
  for (int k = 0; k < 5; ++k) c[to_string(static_cast<SeqCase>(k))] = s.counts[k];
  j["cases"] = c;
  j["fibers"] = s.stats.fibers;
  j["lifts"] = s.lifts;
  j["lift_failures"] = s.lift_failures;
  j["exceptional_case2_seen"] = s.pattern2_seen;
  j["exceptional_case3_seen"] = s.pattern3_seen;
  j["counterexamples"] = s.violations;
  j["seconds"] = s.seconds;
  return j;
}

Json to_json(const EmptySweep& s) {
  Json j;
  j["type"] = s.type;
  j["configs"] = s.configs;
  j["candidates"] = s.candidates;
  j["filtered"] = s.filtered;
  j["antichains"] = s.antichains;
  j["counterexamples"] = s.counterexamples;
  j["seconds"] = s.seconds;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["name"] = r.name;
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  if (!r.note.empty()) j["note"] = r.note;
  j["seconds"] = r.seconds;
  return j;
}

Json to_json(const G2Report& r) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : r.chains) {
    Json x;
    x["label"] = c.label;
    x["instances"] = c.instances;
    x["passed"] = c.passed;
    x["interval_passed"] = c.interval_passed;
    if (!c.first_failure.empty()) x["first_failure"] = c.first_failure;
    cs.push_back(x);
  }
  j["chains"] = cs;
  j["hypothesis_failures"] = r.hypothesis_failures;
  j["ok"] = r.ok();
  return j;
}

}  // namespace adlv
