#include "adlv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

#include "CLI11.hpp"

#include "adlv/serialize.hpp"

namespace adlv::cli {

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string isogeny = "adjoint";
  std::string lambda, mu, J = "[]";
  std::string fold;
  int kmax = 3;
  int cmax = 1;
  int lifts = 100;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  bool timings = false;
  std::string what;
};

// Malformed input with its location.
struct InputError {
  std::string where, what;
};

struct Outcome {
  Outcome() = default;
  Outcome(Json r, bool bad = false) : result(std::move(r)), counterexample(bad) {}  // NOLINT
  Json result;
  bool counterexample = false;
  std::string dot;  // set by graph commands when --format dot
};

Json parse_json_arg(const std::string& flag, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError{flag, std::string("not valid JSON: ") + e.what()};
  }
}

template <class F>
auto located(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructuralError& e) {
    throw InputError{flag, e.what()};
  } catch (const DomainError& e) {
    throw InputError{flag, e.what()};
  }
}

// "E8" or "E" with --rank.
std::pair<char, int> type_and_rank(const Options& o, const std::string& flag, const std::string& text,
                                   bool rank_optional) {
  if (text.empty() || !std::isupper(static_cast<unsigned char>(text[0])))
    throw InputError{flag, "expected a Cartan type letter, optionally followed by the rank"};
  int r = o.rank;
  if (text.size() > 1) {
    try {
      std::size_t used = 0;
      r = std::stoi(text.substr(1), &used);
      if (used + 1 != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError{flag, "cannot read the rank in '" + text + "'"};
    }
    if (o.rank != 0 && o.rank != r) throw InputError{"--rank", "conflicts with " + flag + " " + text};
  }
  if (r == 0 && !rank_optional) throw InputError{"--rank", "missing"};
  return {text[0], r};
}

RootDatum make_datum(const Options& o) {
  if (o.type.empty()) throw InputError{"--type", "missing"};
  const auto [t, n] = type_and_rank(o, "--type", o.type, false);
  DatumConfig cfg;
  cfg.type = t;
  cfg.rank = n;
  cfg.isogeny = located("--isogeny", [&] { return parse_isogeny(o.isogeny); });
  if (cfg.isogeny == Isogeny::Intermediate)
    throw InputError{"--isogeny", "intermediate lattices are not accepted on the command line"};
  return located("--type", [&] { return RootDatum::make(cfg); });
}

FoldingDatum make_fold(const Options& o) {
  if (o.fold.empty()) throw InputError{"--fold", "missing"};
  const auto [t, n] = type_and_rank(o, "--fold", o.fold, false);
  return located("--fold", [&] { return FoldingDatum::make(t, n); });
}

Coweight coweight_arg(const RootDatum& d, const std::string& flag, const std::string& text) {
  if (text.empty()) throw InputError{flag, "missing"};
  const Json j = parse_json_arg(flag, text);
  return located(flag, [&] { return coweight_from_json(d, j); });
}

Coweight dominant_arg(const RootDatum& d, const std::string& flag, const std::string& text) {
  const Coweight v = coweight_arg(d, flag, text);
  if (!is_dominant(d, v)) throw InputError{flag, "expected a dominant coweight"};
  return v;
}

ShortDatum short_arg(const RootDatum& d, const Options& o) {
  const Coweight mu = coweight_arg(d, "--mu", o.mu);
  const Json jj = parse_json_arg("--J", o.J);
  const SimpleSubset J = located("--J", [&] { return subset_from_json(d, jj); });
  const auto sd = located("--mu", [&] { return short_datum(d, J, mu); });
  if (!sd) throw InputError{"--mu", "t^mu w_K w_J is not short with Levi exactly --J"};
  return *sd;
}

// Runs f(0..n-1) on up to jobs threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(int n, int jobs, const std::function<T(int)>& f) {
  std::vector<T> out(n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  for (int start = 0; start < n; start += jobs) {
    std::vector<std::future<T>> batch;
    for (int i = start; i < std::min(n, start + jobs); ++i) batch.push_back(std::async(std::launch::async, f, i));
    for (int i = start; i < std::min(n, start + jobs); ++i) out[i] = batch[i - start].get();
  }
  return out;
}

// Default rank ranges when --type names only the family.
std::vector<int> ranks_for(char t, int n, const std::string& what) {
  if (n > 0) return {n};
  switch (t) {
    case 'A':
      return {2, 3, 4, 5};
    case 'D':
      return {4, 5, 6, 7};
    case 'E':
      return {6, 7, 8};
  }
  throw InputError{"--type", what + " needs a simply laced type (A, D or E)"};
}

Outcome cmd_adm(const Options& o, const RootDatum& d) {
  const Coweight lambda = dominant_arg(d, "--lambda", o.lambda);
  AdmissibleSet adm;
  try {
    adm = compute_adm(d, lambda);
  } catch (const CapacityError& e) {
    throw InputError{"--lambda", e.what()};
  }
  return {to_json(d, adm)};
}

Outcome cmd_straight(const Options& o, const RootDatum& d) {
  const Coweight lambda = dominant_arg(d, "--lambda", o.lambda);
  AdmissibleSet adm;
  try {
    adm = compute_adm(d, lambda);
  } catch (const CapacityError& e) {
    throw InputError{"--lambda", e.what()};
  }
  Json groups = Json::array();
  for (const StraightGroup& g : straight_elements(d, adm)) {
    Json j;
    j["kottwitz"] = g.eta;
    Json nu = Json::array();
    for (int i = 0; i < d.rank(); ++i) {
      std::ostringstream os;
      os << g.nu[i];
      nu.push_back(os.str());
    }
    j["newton"] = nu;
    Json els = Json::array();
    for (const auto& x : g.elements) els.push_back(to_json(d, x));
    j["elements"] = els;
    groups.push_back(j);
  }
  Json r;
  r["lambda"] = to_json(d, lambda);
  r["groups"] = groups;
  return {r};
}

Outcome cmd_classify(const Options& o, const RootDatum& d) {
  const Coweight lambda = dominant_arg(d, "--lambda", o.lambda);
  const ShortDatum sd = short_arg(d, o);
  Json r;
  r["lambda"] = to_json(d, lambda);
  r["short_datum"] = to_json(d, sd);
  r["classification"] = to_json(hn_classify(d, lambda, sd));
  return {r};
}

Outcome cmd_pi0(const Options& o, const RootDatum& d) {
  const Coweight lambda = dominant_arg(d, "--lambda", o.lambda);
  const ShortDatum sd = short_arg(d, o);
  const auto pred = located("--lambda", [&] { return pi0_prediction(d, lambda, sd); });
  Json r;
  r["lambda"] = to_json(d, lambda);
  r["short_datum"] = to_json(d, sd);
  r["components"] = pred;
  r["count"] = pred.size();
  r["pi1_order"] = d.pi1_order();
  const bool ok = static_cast<int>(pred.size()) == d.pi1_order();
  r["consistent"] = ok;
  return {r, !ok};
}

Outcome cmd_connect(const Options& o, const RootDatum& d, bool graph_only) {
  const Coweight lambda = dominant_arg(d, "--lambda", o.lambda);
  const ShortDatum sd = short_arg(d, o);
  const AdmOracle adm(d, lambda);
  const ConnectivityGraph g(d, adm, sd);
  Outcome out;
  if (o.format == "dot") out.dot = graph_to_dot(g);
  const HNClass hn = hn_classify(d, lambda, sd);
  Json r;
  r["lambda"] = to_json(d, lambda);
  r["classification"] = to_json(hn);
  if (graph_only) {
    r["graph"] = graph_to_json(g);
    out.result = r;
    return out;
  }
  const HypReport rep = verify_hyp_prime(g);
  r["short_datum"] = to_json(d, sd);
  r["report"] = to_json(g, rep);
  out.result = r;
  // Only a disconnected irreducible pair contradicts the connectivity claim.
  out.counterexample = (!rep.connected && hn.tag == HNTag::Irreducible) || g.symmetry_failures() > 0;
  return out;
}

Outcome cmd_fold(const Options& o) {
  const FoldingDatum fd = make_fold(o);
  Json r;
  r["ambient"] = to_json(fd.ambient().config());
  r["folded_label"] = fd.folded().label();
  r["folded_cartan"] = fd.folded().cartan_matrix();
  Json iota = Json::array();
  for (int i = 0; i < fd.ambient().rank(); ++i) iota.push_back(fd.iota(i));
  r["iota"] = iota;
  r["orbits"] = fd.orbits();
  if (!o.lambda.empty()) {
    const Coweight v = coweight_arg(fd.folded(), "--lambda", o.lambda);
    r["translation"] = to_json(fd, ExtAffineElement::translation(fd.folded(), v));
  }
  return {r};
}

Outcome verify_seq_cmd(const Options& o) {
  if (o.type.empty()) throw InputError{"--type", "missing"};
  const auto [t, n] = type_and_rank(o, "--type", o.type, true);
  const std::vector<int> ranks = ranks_for(t, n, "verify seq");
  if (o.kmax < 0) throw InputError{"--kmax", "must be >= 0"};
  const auto sweeps = parallel_map<SeqSweep>(static_cast<int>(ranks.size()), o.jobs, [&](int k) {
    const RootDatum d = located("--type", [&] { return RootDatum::make(t, ranks[k]); });
    return sweep_seq(d, o.kmax, t == 'E' ? o.lifts : 0);
  });
  Json r = Json::array();
  bool bad = false;
  for (const SeqSweep& s : sweeps) {
    r.push_back(to_json(s));
    bad |= !s.ok();
    // The listed exceptional configurations must be found in E8.
    if (s.type == "E8" && !(s.pattern2_seen && s.pattern3_seen)) bad = true;
  }
  return {r, bad};
}

Outcome verify_empty_cmd(const Options& o) {
  if (o.type.empty()) throw InputError{"--type", "missing"};
  const auto [t, n] = type_and_rank(o, "--type", o.type, true);
  const std::vector<int> ranks = ranks_for(t, n, "verify empty");
  const auto sweeps = parallel_map<EmptySweep>(static_cast<int>(ranks.size()), o.jobs, [&](int k) {
    const RootDatum d = located("--type", [&] { return RootDatum::make(t, ranks[k]); });
    return sweep_empty(d);
  });
  Json r = Json::array();
  bool bad = false;
  for (const EmptySweep& s : sweeps) {
    r.push_back(to_json(s));
    bad |= !s.ok();
  }
  return {r, bad};
}

Outcome verify_folded_cmd(const Options& o, const std::string& which) {
  const FoldingDatum fd = make_fold(o);
  if (o.cmax < 0) throw InputError{"--cmax", "must be >= 0"};
  Json r = Json::array();
  bool bad = false;
  for (const SuiteReport& s : folded_sweeps(fd, o.cmax)) {
    if (which != "folded" && s.name != which) continue;
    r.push_back(to_json(s));
    bad |= s.violations > 0;
  }
  return {r, bad};
}

Outcome verify_cmd(const Options& o) {
  if (o.what == "seq") return verify_seq_cmd(o);
  if (o.what == "empty") return verify_empty_cmd(o);
  if (o.what == "o1" || o.what == "zeta" || o.what == "folded") return verify_folded_cmd(o, o.what);
  if (o.what == "g2") {
    const G2Report rep = g2_chain_suite();
    return {to_json(rep), !rep.ok()};
  }
  if (o.what == "lemmas") {
    Json r = Json::array();
    bool bad = false;
    for (const SuiteReport& s : lemma_suites()) {
      r.push_back(to_json(s));
      bad |= !s.ok();
    }
    return {r, bad};
  }
  throw InputError{"verify", "unknown target '" + o.what + "' (seq, empty, o1, zeta, folded, g2, lemmas)"};
}

void strip_timings(Json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << " = " << j.dump() << '\n';
  }
}

void add_common(CLI::App* c, Options& o, bool datum) {
  if (datum) {
    c->add_option("--type", o.type, "Cartan type, e.g. A or E8");
    c->add_option("--rank", o.rank, "rank when --type is a bare letter");
    c->add_option("--isogeny", o.isogeny, "adjoint or simply_connected");
  }
  c->add_option("--lambda", o.lambda, "coweight as a JSON integer array");
  c->add_option("--mu", o.mu, "coweight as a JSON integer array");
  c->add_option("--J", o.J, "simple-root indices as a JSON array");
  c->add_option("--fold", o.fold, "ambient of a folding, e.g. A5");
  c->add_option("--kmax", o.kmax, "free-parameter bound for seq");
  c->add_option("--cmax", o.cmax, "lambda - mu coefficient bound for folded sweeps");
  c->add_option("--lifts", o.lifts, "random lifts per fiber in type E");
  c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  c->add_option("--out", o.out, "write the report here instead of stdout");
  c->add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  c->add_flag("--timings", o.timings, "keep runtimes in the report (breaks byte identity)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Affine Deligne-Lusztig combinatorics toolkit", "adlv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"adm", "admissible set of a dominant coweight"},
      {"straight", "straight elements of an admissible set, by class"},
      {"classify", "Hodge-Newton classification of (lambda, short datum)"},
      {"pi0", "predicted component labels"},
      {"connect", "connectivity graph and witness paths"},
      {"export", "connectivity graph as DOT or JSON"},
      {"fold", "folding descriptor"},
      {"verify", "run a case verifier: seq, empty, o1, zeta, folded, g2, lemmas"},
  };
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : commands) {
    CLI::App* c = app.add_subcommand(name, help);
    add_common(c, o, true);
    sub[name] = c;
  }
  sub["verify"]->add_option("what", o.what, "verifier")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  if (const char* cache = std::getenv("ADLV_CACHE_DIR"); cache && *cache) {
    if (!std::filesystem::is_directory(cache)) {
      err << "error: ADLV_CACHE_DIR: '" << cache << "' is not a directory\n";
      return kInvalidInput;
    }
  }

  Outcome res;
  Json datum;
  try {
    if (o.format == "dot" && cmd != "export" && cmd != "connect")
      throw InputError{"--format", "dot is only available for export and connect"};
    if (cmd == "fold") {
      res = cmd_fold(o);
      datum = to_json(make_fold(o).ambient().config());
    } else if (cmd == "verify") {
      if (o.what == "g2") {
        datum = to_json(RootDatum::make('G', 2).config());
      } else if (!o.fold.empty()) {
        datum = to_json(make_fold(o).ambient().config());
      } else if (!o.type.empty()) {
        const auto [t, n] = type_and_rank(o, "--type", o.type, true);
        datum["type"] = std::string(1, t);
        if (n > 0) datum["rank"] = n;
        datum["isogeny"] = "adjoint";
      }
      res = verify_cmd(o);
    } else {
      const RootDatum d = make_datum(o);
      datum = to_json(d.config());
      if (cmd == "adm") res = cmd_adm(o, d);
      else if (cmd == "straight") res = cmd_straight(o, d);
      else if (cmd == "classify") res = cmd_classify(o, d);
      else if (cmd == "pi0") res = cmd_pi0(o, d);
      else res = cmd_connect(o, d, cmd == "export");
    }
  } catch (const InputError& e) {
    err << "error: " << e.where << ": " << e.what << '\n';
    return kInvalidInput;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::string text;
  if (!res.dot.empty()) {
    text = res.dot;
  } else {
    Json report;
    report["tool"] = "adlv";
    report["version"] = kToolVersion;
    report["schema"] = kSchemaVersion;
    report["command"] = cmd == "verify" ? "verify " + o.what : cmd;
    report["datum"] = datum;
    report["status"] = res.counterexample ? "counterexample" : "ok";
    report["result"] = res.result;
    if (!o.timings) strip_timings(report);
    if (o.format == "text") {
      std::ostringstream os;
      flatten(report, "", os);
      text = os.str();
    } else {
      text = report.dump(2) + "\n";
    }
  }
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: --out: cannot open '" << o.out << "'\n";
      return kInvalidInput;
    }
    f << text;
  }
  return res.counterexample ? kCounterexample : kVerified;
}

}  // namespace adlv::cli
