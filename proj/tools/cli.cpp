#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <deque>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "afflip/affine.hpp"
#include "afflip/arc.hpp"
#include "afflip/flip_action.hpp"
#include "afflip/gelfand.hpp"
#include "afflip/geometric.hpp"
#include "afflip/stabilizers.hpp"

namespace afflip::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 2;
  int k = 0;
  Int m = 0;
  std::string model = "omega";
  std::string group = "C";
  bool is_signed = false;
  int d_bound = 4;
  int margin = 1;
  std::string format;
  std::string out;
  std::string word;
  std::string state;
  bool list = false;
  std::size_t max_nodes = 1000000;
  std::size_t max_pairs = 100000000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

ActionSpec spec_from(const Options& o) {
  ActionSpec s;
  s.model = o.model;
  s.n = o.n;
  s.k = o.k;
  s.m = o.m;
  s.group = parse_group_type(o.group);
  s.signed_quotient = o.is_signed;
  return s;
}

void check_cap(const Options& o, std::uint64_t size) {
  if (size > o.max_nodes)
    throw UsageError("request has " + std::to_string(size) + " states, above the node cap " +
                     std::to_string(o.max_nodes) + " (raise with --max-nodes)");
}

json params_json(const Options& o) {
  json p;
  p["n"] = o.n;
  p["k"] = o.k;
  if (o.model == "omega" || o.model == "omega_signed") p["m"] = o.m;
  p["group"] = o.group;
  p["signed"] = o.is_signed;
  return p;
}

json certificate_json(const Options& o, const GelfandCertificate& c) {
  json j;
  j["model"] = o.model;
  j["params"] = params_json(o);
  j["states"] = c.states;
  j["rank"] = c.rank;
  j["transitive"] = c.transitive;
  j["self_paired"] = c.self_paired;
  j["commutative"] = c.commutative;
  j["multiplicity_free"] = c.multiplicity_free;
  if (c.witness) {
    j["witness"] = {{"i", (*c.witness)[0]}, {"j", (*c.witness)[1]}, {"k", (*c.witness)[2]},
                    {"p_ij", c.witness_pij}, {"p_ji", c.witness_pji}};
  }
  j["suborbit_sizes"] = c.suborbit_sizes;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_orbit(const Options& o, std::ostream& out) {
  if (o.m < 1) throw UsageError("--m must be at least 1");
  if (o.k < 0 || o.k > o.n - 1) throw UsageError("--k must satisfy 0 <= k <= n-1");
  check_cap(o, orbit_size_formula(o.n, o.k, o.m));
  auto rep = transitivity_check(o.n, o.k, o.m);
  auto states = enumerate_orbit(o.n, o.k, o.m);
  std::uint64_t formula = orbit_size_formula(o.n, o.k, o.m);
  bool good = rep.transitive && states.size() == formula;
  if (o.format == "text") {
    std::ostringstream s;
    for (const auto& x : states) s << to_string(x) << '\n';
    emit(o, out, s.str());
  } else {
    json j;
    j["n"] = o.n;
    j["k"] = o.k;
    j["m"] = o.m;
    j["size"] = states.size();
    j["formula"] = formula;
    j["transitive"] = rep.transitive;
    if (o.is_signed) {
      auto classes = signed_quotient(states);
      j["signed_classes"] = classes.size();
      json arr = json::array();
      for (const auto& c : classes) arr.push_back(to_string(c.representative));
      j["states"] = arr;
    } else {
      json arr = json::array();
      for (const auto& x : states) arr.push_back(to_string(x));
      j["states"] = arr;
    }
    emit(o, out, j.dump(2));
  }
  return good ? ok : negative;
}

int cmd_counts(const Options& o, std::ostream& out) {
  ActionSpec s = spec_from(o);
  std::uint64_t formula = model_size_formula(s);
  check_cap(o, formula);
  std::size_t count = 0;
  const int n = o.n;
  if (o.model == "omega" || o.model == "omega_signed")
    count = enumerate_orbit(n, o.k, o.m).size();
  else if (o.model == "arc")
    count = enumerate_arc(n + 2, n - o.k).size();
  else if (o.model == "ctft")
    count = enumerate_ctft(n + 4).size();
  else if (o.model == "lf")
    count = enumerate_lf(n + 3).size();
  else
    count = enumerate_gc(n + 3).size();
  json j;
  j["model"] = o.model;
  j["params"] = params_json(o);
  j["count"] = count;
  j["formula"] = formula;
  j["formula_match"] = count == formula;
  emit(o, out, o.format == "text" ? std::to_string(count) : j.dump(2));
  return count == formula ? ok : negative;
}

int cmd_act(const Options& o, std::ostream& out) {
  auto w = parse_word(o.n, o.word);
  json j;
  j["model"] = o.model;
  j["word"] = to_string(w);
  std::string result;
  auto letters_rtl = [&](auto x, auto step) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = step(*it, x);
    return x;
  };
  if (o.state.empty()) {
    if (o.model != "omega") throw UsageError("--state is required for model " + o.model);
    auto u = evaluate_word(w);
    j["window"] = to_string(u);
    j["parity"] = parity(u);
    if (o.k >= 0 && o.k <= o.n - 1) j["r_k"] = to_string(r_k(u, o.k, o.m));
    result = to_string(u);
  } else if (o.model == "omega" || o.model == "omega_signed") {
    auto x = parse_state(o.state, o.m);
    if (x.rank() != o.n) throw UsageError("state rank does not match --n");
    result = to_string(rho_word(w, x));
  } else if (o.model == "arc") {
    auto p = parse_arc(o.state);
    if (p.m() != o.n + 2) throw UsageError("arc permutation must have n+2 entries");
    result = to_string(letters_rtl(p, [](int i, const PartialArcPermutation& q) { return rho_A(i, q); }));
  } else if (o.model == "ctft") {
    auto t = parse_ctft(o.n + 4, o.state);
    result = to_string(letters_rtl(t, [](int i, const DiagonalSequence& q) { return flip_ctft(i, q); }));
  } else if (o.model == "lf") {
    auto f = parse_lf(o.n + 3, o.state);
    result = to_string(letters_rtl(f, [](int i, const Factorization& q) { return rho_LF(i, q); }));
  } else if (o.model == "gc") {
    auto g = parse_gc(o.n + 3, o.state);
    result = to_string(letters_rtl(g, [](int i, const Caterpillar& q) { return flip_gc(i, q); }));
  } else {
    throw UsageError("unknown model " + o.model);
  }
  if (!o.state.empty()) {
    j["input"] = o.state;
    j["output"] = result;
  }
  emit(o, out, o.format == "text" ? result : j.dump(2));
  return ok;
}

int cmd_equivariance(const Options& o, std::ostream& out) {
  const int n = o.n;
  std::size_t elements = 0, failures = 0;
  auto fail_if = [&](bool bad) { failures += bad ? 1 : 0; };
  if (o.model == "arc") {
    if (o.k < 0 || o.k > n - 1) throw UsageError("--k must satisfy 0 <= k <= n-1");
    check_cap(o, orbit_size_formula(n, o.k, n + 2));
    for (const auto& p : enumerate_arc(n + 2, n - o.k)) {
      ++elements;
      auto x = phi_arc(p);
      fail_if(phi_arc_inv(x) != p);
      auto ip = iota_arc(p);
      fail_if(iota_arc(ip) != p);
      fail_if(phi_arc(ip) != negate(x));
      for (int i = 0; i <= n; ++i) {
        auto q = rho_A(i, p);
        fail_if(phi_arc(q) != rho_generator(i, x));
        fail_if(rho_A(i, ip) != iota_arc(q));
      }
    }
  } else if (o.model == "ctft") {
    check_cap(o, orbit_size_formula(n, 0, n + 4));
    for (const auto& t : enumerate_ctft(n + 4)) {
      ++elements;
      auto x = phi_tft(t);
      fail_if(phi_tft_inv(x) != t);
      auto it = iota_tft(t);
      fail_if(it != reflect_tft(t));
      fail_if(iota_tft(it) != t);
      for (int i = 0; i <= n; ++i) {
        auto s = flip_ctft(i, t);
        fail_if(phi_tft(s) != rho_generator(i, x));
        fail_if(flip_ctft(i, it) != iota_tft(s));
      }
    }
  } else if (o.model == "lf") {
    check_cap(o, orbit_size_formula(n, 0, n + 3));
    for (const auto& w : enumerate_lf(n + 3)) {
      ++elements;
      auto x = phi_lf(w);
      fail_if(phi_lf_inv(x) != w);
      auto iw = iota_lf(w);
      fail_if(iota_lf(iw) != w);
      for (int i = 0; i <= n; ++i) {
        auto v = rho_LF(i, w);
        fail_if(phi_lf(v) != rho_generator(n - i, x));
        fail_if(rho_LF(i, iw) != iota_lf(v));
      }
    }
  } else if (o.model == "gc") {
    check_cap(o, orbit_size_formula(n, 0, n + 3));
    std::map<Factorization, Caterpillar> inverse_psi;
    for (const auto& g : enumerate_gc(n + 3)) {
      ++elements;
      auto w = psi(g);
      fail_if(!is_lf(w));
      fail_if(!inverse_psi.emplace(w, g).second);
      for (int i = 0; i <= n; ++i) fail_if(psi(flip_gc(i, g)) != rho_LF(i, w));
    }
    fail_if(inverse_psi.size() != enumerate_lf(n + 3).size());
  } else {
    throw UsageError("equivariance needs --model arc, ctft, lf or gc");
  }
  json j;
  j["model"] = o.model;
  j["params"] = params_json(o);
  j["elements"] = elements;
  j["failures"] = failures;
  j["equivariant"] = failures == 0;
  emit(o, out, j.dump(2));
  return failures == 0 ? ok : negative;
}

int cmd_gelfand(const Options& o, std::ostream& out) {
  ActionSpec s = spec_from(o);
  std::uint64_t size = model_size_formula(s);
  check_cap(o, size);
  if (size * size > o.max_pairs) throw UsageError("pair space exceeds --max-pairs");
  auto a = build_action(s);
  if (s.group == GroupType::B) a = restrict_to_orbit(a, *a.base);
  auto c = certify(a);
  emit(o, out, certificate_json(o, c).dump(2));
  return c.multiplicity_free ? ok : negative;
}

int cmd_coset_reps(const Options& o, std::ostream& out) {
  GroupType g = parse_group_type(o.group);
  if (o.k < 0 || o.k > o.n - 1) throw UsageError("--k must satisfy 0 <= k <= n-1");
  auto rep = coset_map_check(o.n, o.k, g, o.d_bound, o.margin);
  json j;
  j["group_type"] = to_string(g);
  j["n"] = o.n;
  j["k"] = o.k;
  j["d_bound"] = o.d_bound;
  j["margin"] = o.margin;
  j["representatives"] = rep.representatives;
  j["targets"] = rep.targets;
  j["injective"] = rep.injective;
  j["covering"] = rep.covering;
  j["verdict"] = rep.ok();
  json col = json::array();
  for (const auto& c : rep.collisions)
    col.push_back({{"first", c.first}, {"second", c.second}, {"class", to_string(c.cls)}});
  j["collisions"] = col;
  json gaps = json::array();
  for (const auto& x : rep.gaps) gaps.push_back(to_string(x));
  j["gaps"] = gaps;
  if (o.list) {
    json arr = json::array();
    for (const auto& r : involutive_reps(o.n, o.k, g, o.d_bound)) {
      json t = json::array();
      for (auto [a, b] : r.tau.pairs) t.push_back({a, b});
      arr.push_back({{"group_type", to_string(r.group)},
                     {"n", r.n},
                     {"k", r.k},
                     {"tau", t},
                     {"params", {{"family", r.family}, {"signs", r.signs}, {"d", r.d}}},
                     {"window", to_string(r.realized)}});
    }
    j["list"] = arr;
  }
  emit(o, out, j.dump(2));
  return rep.ok() ? ok : negative;
}

// Largest BFS distance over all sources, edges taken as undirected.
std::size_t diameter(const FiniteAction& a) {
  const std::size_t N = a.size();
  std::vector<std::vector<std::uint32_t>> adj(N);
  for (const auto& g : a.generators)
    for (std::size_t x = 0; x < N; ++x) {
      adj[x].push_back(g[x]);
      adj[g[x]].push_back(static_cast<std::uint32_t>(x));
    }
  std::size_t best = 0;
  std::vector<int> dist(N);
  for (std::size_t s = 0; s < N; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      best = std::max(best, static_cast<std::size_t>(dist[x]));
      for (auto y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
  }
  return best;
}

int cmd_schreier(const Options& o, std::ostream& out) {
  ActionSpec s = spec_from(o);
  check_cap(o, model_size_formula(s));
  auto a = build_action(s);
  if (s.group == GroupType::B) a = restrict_to_orbit(a, *a.base);
  const bool connected = orbit_of(a, 0).size() == a.size();
  const std::size_t diam = diameter(a);
  if (o.format == "dot") {
    std::ostringstream d;
    d << "digraph schreier {\n";
    d << "  graph [model=\"" << o.model << "\", nodes=" << a.size() << ", diameter=" << diam << "];\n";
    for (std::size_t x = 0; x < a.size(); ++x) d << "  n" << x << " [label=\"" << a.labels[x] << "\"];\n";
    for (std::size_t g = 0; g < a.generators.size(); ++g)
      for (std::size_t x = 0; x < a.size(); ++x)
        d << "  n" << x << " -> n" << a.generators[g][x] << " [label=\"s" << g << "\"];\n";
    d << "}\n";
    emit(o, out, d.str());
  } else {
    json j;
    j["model"] = o.model;
    j["params"] = params_json(o);
    j["nodes"] = a.labels;
    json edges = json::array();
    for (std::size_t g = 0; g < a.generators.size(); ++g)
      for (std::size_t x = 0; x < a.size(); ++x) edges.push_back({x, g, a.generators[g][x]});
    j["generators"] = a.generator_names;
    j["edges"] = edges;
    j["metadata"] = {{"node_count", a.size()}, {"out_degree", a.generators.size()},
                     {"connected", connected}, {"diameter", diam}};
    emit(o, out, j.dump(2));
  }
  return ok;
}

void add_common(CLI::App* sub, Options& o, bool with_model) {
  sub->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(2, 20));
  sub->add_option("--k", o.k, "number of zero trits");
  sub->add_option("--m", o.m, "modulus for b");
  if (with_model)
    sub->add_option("--model", o.model, "omega, omega_signed, arc, ctft, lf, gc")
        ->check(CLI::IsMember({"omega", "omega_signed", "arc", "ctft", "lf", "gc"}));
  sub->add_option("--group", o.group, "C or B")->check(CLI::IsMember({"C", "B"}));
  sub->add_flag("--signed", o.is_signed, "pass to the signed (or iota) quotient");
  sub->add_option("--out", o.out, "write output to a file");
  sub->add_option("--max-nodes", o.max_nodes, "state cap");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flip actions of affine Weyl groups and multiplicity-free checks", "afflip"};
  app.require_subcommand(1);
  Options o;

  auto* orbit = app.add_subcommand("orbit", "enumerate Omega_{n,k,m} and check transitivity");
  add_common(orbit, o, false);
  orbit->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* counts = app.add_subcommand("counts", "compare enumeration sizes with the closed formulas");
  add_common(counts, o, true);
  counts->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* act = app.add_subcommand("act", "apply a generator word to a state");
  add_common(act, o, true);
  act->add_option("--word", o.word, "generator indices, e.g. \"0 1 2\"")->required();
  act->add_option("--state", o.state, "model element in text form");
  act->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* equiv = app.add_subcommand("equivariance", "exhaustive bijection and involution checks");
  add_common(equiv, o, true);

  auto* gel = app.add_subcommand("gelfand", "orbital algebra certificate");
  add_common(gel, o, true);
  gel->add_option("--max-pairs", o.max_pairs, "cap on |X|^2");

  auto* reps = app.add_subcommand("coset-reps", "validate involutive coset representatives");
  add_common(reps, o, false);
  reps->add_option("--d-bound", o.d_bound, "largest |d|")->check(CLI::NonNegativeNumber);
  reps->add_option("--margin", o.margin, "coverage margin")->check(CLI::NonNegativeNumber);
  reps->add_flag("--list", o.list, "include every representative");

  auto* sch = app.add_subcommand("schreier", "export the Schreier graph");
  add_common(sch, o, true);
  sch->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (o.model == "omega_signed") o.is_signed = true;
    if (*orbit) return cmd_orbit(o, out);
    if (*counts) return cmd_counts(o, out);
    if (*act) return cmd_act(o, out);
    if (*equiv) return cmd_equivariance(o, out);
    if (*gel) return cmd_gelfand(o, out);
    if (*reps) return cmd_coset_reps(o, out);
    if (*sch) return cmd_schreier(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace afflip::cli
