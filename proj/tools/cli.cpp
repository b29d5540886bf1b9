#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "hyperdual/oracle.hpp"

namespace hyperdual::cli
{

Json exact(BigInt const &v)
{
  static BigInt const limit = BigInt(1) << 53;
  if (v <= limit && v >= -limit)
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

Json to_json(DualityReport const &r)
{
  Json gens = Json::array();
  for (auto const &g : r.duality_group_generators)
    gens.push_back(print_cycles(g));
  return Json{
    {"type_triple", {{"l", exact(r.type.l)}, {"m", exact(r.type.m)}, {"n", exact(r.type.n)}}},
    {"duality_type", Json::array({exact(r.duality_type.first), exact(r.duality_type.second)})},
    {"self_dual", r.self_dual},
    {"duality_index", exact(r.duality_index)},
    {"duality_group_generators", gens},
    {"extreme", r.extreme},
    {"monodromy_class", natural_class_name(r.monodromy_class)},
    {"monodromy_order", exact(r.monodromy_order)},
  };
}

Json to_json(ConstructionCertificate const &c)
{
  Json witnesses = Json::array();
  for (auto const &w : c.witnesses)
    witnesses.push_back({{"description", w.description}, {"permutation", print_cycles(w.permutation)}});
  return Json{
    {"case_tag", case_tag_name(c.case_tag)},
    {"ambient_degree", c.ambient_degree},
    {"claimed_class", natural_class_name(c.claimed_class)},
    {"claimed_extreme", c.claimed_extreme},
    {"witnesses", witnesses},
  };
}

namespace
{

struct Envelope
{
  std::string command;
  Json inputs = Json::object();
  Json report = Json::object();
  Json certificates = Json::array();
  int status = ok;
};

Json hypermap_report(Hypermap const &h, DualityReport const &r)
{
  Json res{{"degree", h.degree()}, {"x", print_cycles(h.x())}, {"y", print_cycles(h.y())}};
  res.update(to_json(r));
  return res;
}

// Plain-text rendering: one "key: value" line per scalar, nested objects
// indented, arrays of scalars joined on one line.
void print_text(std::ostream &out, Json const &j, int indent)
{
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](Json const &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto const &[key, value] : j.items()) {
    bool flat = value.is_array() &&
                std::all_of(value.begin(), value.end(), [](Json const &e) { return e.is_primitive(); });
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_text(out, value, indent + 2);
    } else if (value.is_array() && value.empty()) {
      out << pad << key << ": []\n";
    } else if (flat) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < value.size(); ++i)
        out << (i ? ", " : "") << scalar(value[i]);
      out << '\n';
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (auto const &e : value) {
        if (e.is_object()) {
          out << pad << "  -\n";
          print_text(out, e, indent + 4);
        } else {
          out << pad << "  - " << scalar(e) << '\n';
        }
      }
    } else {
      out << pad << key << ": " << scalar(value) << '\n';
    }
  }
}

// ---------------------------------------------------------------- sweeps

struct Outcome
{
  std::string key;
  std::string status; // "pass", "fail" or "skip"
  std::string detail;
};

// Runs f(0..n-1) on a thread pool; results come back in index order. An
// exception fails the instance and keeps the key produced by key(i).
template <class K, class F>
std::vector<Outcome> sweep(std::size_t n, K key, F f)
{
  std::vector<Outcome> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = f(i);
      } catch (std::exception const &e) {
        results[i].status = "fail";
        results[i].detail = e.what();
      }
      results[i].key = key(i);
    }
  };
  std::size_t threads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  return results;
}

std::vector<Permutation> symmetric_generators(std::size_t n)
{
  if (n < 2)
    return {Permutation(std::max<std::size_t>(n, 1))};
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>(i);
  return {Permutation::from_cycles(n, {cycle}), Permutation::from_cycles(n, {{0, 1}})};
}

std::vector<Permutation> alternating_generators(std::size_t n)
{
  if (n < 3)
    return {Permutation(std::max<std::size_t>(n, 1))};
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return gens;
}

std::string pair_key(std::string const &group, Permutation const &x, Permutation const &y)
{
  return group + " x=" + print_cycles(x) + " y=" + print_cycles(y);
}

std::vector<Outcome> suite_sn_classification(int max_n)
{
  std::vector<std::pair<std::size_t, std::pair<Permutation, Permutation>>> pairs;
  for (int n = 2; n <= max_n; ++n) {
    auto d = static_cast<std::size_t>(n);
    auto table = oracle::enumerate_elements(symmetric_generators(d));
    for (auto &p : oracle::generating_pairs(table))
      pairs.emplace_back(d, std::move(p));
  }
  auto key = [&](std::size_t i) {
    return pair_key("S" + std::to_string(pairs[i].first), pairs[i].second.first, pairs[i].second.second);
  };
  return sweep(pairs.size(), key, [&](std::size_t i) {
    auto const &[d, p] = pairs[i];
    Hypermap h(p.first, p.second);
    auto prediction = classify_sn_pair(h);
    auto idx = duality_index(h);
    auto allowed = predicted_indices(prediction, d);
    Outcome o{"", "pass", ""};
    if (!allowed.contains(idx)) {
      o.status = "fail";
      o.detail = "prediction " + sn_prediction_name(prediction) + " but index " + idx.str();
    }
    return o;
  });
}

std::string grid_key(int l, int n) { return "{" + std::to_string(l) + "," + std::to_string(n) + "}"; }

std::vector<Outcome> suite_main_theorem_grid(int max_n)
{
  std::size_t side = static_cast<std::size_t>(max_n - 1);
  auto key = [&](std::size_t i) {
    return grid_key(static_cast<int>(i / side) + 2, static_cast<int>(i % side) + 2);
  };
  return sweep(side * side, key, [&](std::size_t i) {
    int l = static_cast<int>(i / side) + 2;
    int n = static_cast<int>(i % side) + 2;
    Outcome o{"", "fail", ""};
    auto c = duality_type_extreme(l, n);
    auto const &r = c.report;
    auto full = factorial(c.hypermap.degree());
    bool order_ok = (r.monodromy_class == NaturalClass::symmetric && r.monodromy_order == full) ||
                    (r.monodromy_class == NaturalClass::alternating && r.monodromy_order == full / 2);
    std::ostringstream detail;
    detail << case_tag_name(c.certificate.case_tag) << ", degree " << c.hypermap.degree() << ", "
           << natural_class_name(r.monodromy_class) << ", index " << r.duality_index;
    o.detail = detail.str();
    if (order(c.hypermap.x()) == l && order(c.hypermap.y()) == n && r.extreme && order_ok)
      o.status = "pass";
    return o;
  });
}

std::vector<Outcome> suite_oracle_agreement(std::uint64_t seed, int samples)
{
  std::vector<std::pair<std::string, std::pair<Permutation, Permutation>>> pairs;
  auto s4 = oracle::enumerate_elements(symmetric_generators(4));
  for (auto &p : oracle::generating_pairs(s4))
    pairs.emplace_back("S4", std::move(p));

  std::mt19937_64 rng(seed);
  for (auto [name, gens] : {std::pair{"S5", symmetric_generators(5)},
                            std::pair{"A5", alternating_generators(5)}}) {
    auto table = oracle::enumerate_elements(gens);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int found = 0; found < samples;) {
      auto const &a = table.elements()[pick(rng)];
      auto const &b = table.elements()[pick(rng)];
      Permutation const pair[] = {a, b};
      if (oracle::enumerate_elements(pair, table.size()).size() != table.size())
        continue;
      pairs.emplace_back(name, std::pair{a, b});
      ++found;
    }
  }

  auto key = [&](std::size_t i) {
    return pair_key(pairs[i].first, pairs[i].second.first, pairs[i].second.second);
  };
  return sweep(pairs.size(), key, [&](std::size_t i) {
    auto const &[name, p] = pairs[i];
    Outcome o{"", "pass", ""};
    auto engine = oracle::closure(duality_group(Hypermap(p.first, p.second)).generators());
    auto brute = oracle::brute_duality_group(p.first, p.second);
    if (engine != brute) {
      o.status = "fail";
      o.detail = "engine |D| = " + std::to_string(engine.size()) + ", oracle |D| = " +
                 std::to_string(brute.size());
    }
    return o;
  });
}

std::vector<Outcome> suite_jordan_miller(int max_n)
{
  std::size_t side = static_cast<std::size_t>(max_n - 1);
  auto key = [&](std::size_t i) {
    return grid_key(static_cast<int>(i / side) + 2, static_cast<int>(i % side) + 2);
  };
  return sweep(side * side, key, [&](std::size_t i) {
    int l = static_cast<int>(i / side) + 2;
    int n = static_cast<int>(i % side) + 2;
    Outcome o{"", "skip", ""};
    std::optional<Construction> c;
    try {
      c = duality_type_extreme(l, n);
    } catch (VerificationError const &e) {
      o.detail = std::string("no construction: ") + e.what();
      return o;
    }
    auto tag = c->certificate.case_tag;
    auto degree = c->hypermap.degree();
    auto g = c->hypermap.monodromy();
    if ((tag == CaseTag::case_a || tag == CaseTag::case_e) && degree > 8) {
      bool witness = std::any_of(c->certificate.witnesses.begin(), c->certificate.witnesses.end(),
                                 [&](Witness const &w) {
                                   return support(w.permutation).size() <= 4 && g.contains(w.permutation);
                                 });
      bool alternating = g.classify_natural() == NaturalClass::alternating;
      o.status = witness && alternating ? "pass" : "fail";
      o.detail = "Miller: support<=4 witness " + std::string(witness ? "present" : "missing") +
                 ", class " + natural_class_name(g.classify_natural());
    } else if (tag == CaseTag::case_c || tag == CaseTag::case_d) {
      auto big = static_cast<std::size_t>(std::max(l, n));
      auto small = static_cast<std::size_t>(std::min(l, n));
      auto const &cyc = l >= n ? c->hypermap.x() : c->hypermap.y();
      bool has_cycle = cyc.cycles().size() == 1 && cyc.cycles().front().size() == big;
      bool ktrans = g.is_k_transitive(small);
      o.status = has_cycle && degree == big + small - 1 && ktrans ? "pass" : "fail";
      o.detail = "Jordan: " + std::to_string(big) + "-cycle on " + std::to_string(degree) +
                 " points, " + std::to_string(small) + "-transitive " + (ktrans ? "yes" : "no");
    } else {
      o.detail = "no certificate theorem applies (" + case_tag_name(tag) + ")";
    }
    return o;
  });
}

// ---------------------------------------------------------------- census

Json census(char family, int n)
{
  auto d = static_cast<std::size_t>(std::max(n, 1));
  auto group_gens = family == 'S' ? symmetric_generators(d) : alternating_generators(d);
  auto group = oracle::enumerate_elements(group_gens);
  auto ambient = oracle::enumerate_elements(symmetric_generators(d));
  auto pairs = oracle::generating_pairs(group);

  struct Row
  {
    BigInt index;
    std::pair<BigInt, BigInt> type;
    std::pair<Permutation, Permutation> canonical;
  };
  std::vector<Row> rows(pairs.size());
  auto failures = sweep(pairs.size(), [](std::size_t) { return std::string(); }, [&](std::size_t i) {
    auto const &[x, y] = pairs[i];
    Hypermap h(x, y);
    auto canon = pairs[i];
    for (auto const &s : ambient.elements()) {
      auto si = s.inverse();
      std::pair<Permutation, Permutation> conj{s * x * si, s * y * si};
      if (conj < canon)
        canon = std::move(conj);
    }
    rows[i] = Row{duality_index(h), duality_type(h), std::move(canon)};
    return Outcome{};
  });
  for (auto const &f : failures)
    if (f.status == "fail")
      throw VerificationError("census: " + f.detail);

  using Key = std::tuple<BigInt, BigInt, BigInt>;
  std::map<Key, std::pair<std::size_t, std::set<std::pair<Permutation, Permutation>>>> counts;
  std::set<std::pair<Permutation, Permutation>> classes;
  std::set<BigInt> indices;
  for (auto const &r : rows) {
    auto &entry = counts[{r.type.first, r.type.second, r.index}];
    ++entry.first;
    entry.second.insert(r.canonical);
    classes.insert(r.canonical);
    indices.insert(r.index);
  }

  Json table = Json::array();
  for (auto const &[key, entry] : counts)
    table.push_back({{"duality_type", Json::array({exact(std::get<0>(key)), exact(std::get<1>(key))})},
                     {"duality_index", exact(std::get<2>(key))},
                     {"raw", entry.first},
                     {"canonical", entry.second.size()}});
  Json index_list = Json::array();
  for (auto const &i : indices)
    index_list.push_back(exact(i));

  return Json{
    {"group", std::string(1, family) + std::to_string(n)},
    {"order", group.size()},
    {"generating_pairs", pairs.size()},
    {"conjugacy_classes_of_pairs", classes.size()},
    {"indices", index_list},
    {"table", table},
  };
}

// ---------------------------------------------------------------- commands

std::pair<int, int> parse_duality_type(std::string const &text)
{
  static std::regex const re(R"(\s*\{?\s*(\d+)\s*,\s*(\d+)\s*\}?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw ConstructionError("expected l,n: " + text);
  return {std::stoi(m[1]), std::stoi(m[2])};
}

Envelope cmd_analyze(std::string const &xs, std::string const &ys, std::optional<std::size_t> degree)
{
  Envelope env{"analyze"};
  env.inputs = {{"x", xs}, {"y", ys}, {"degree", degree ? Json(*degree) : Json(nullptr)}};
  auto x = parse_cycles(xs, degree);
  auto y = parse_cycles(ys, degree);
  auto d = std::max(x.degree(), y.degree());
  Hypermap h(x.embed(d), y.embed(d));
  env.report = hypermap_report(h, analyze(h));
  return env;
}

Envelope cmd_construct(std::string const &variant, std::string const &value)
{
  Envelope env{"construct"};
  env.inputs = {{"variant", variant}, {"value", value}};
  auto to_int = [&](std::string const &s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw ConstructionError("expected an integer: " + s);
    return v;
  };
  auto c = [&] {
    if (variant == "duality_type") {
      auto [l, n] = parse_duality_type(value);
      return duality_type_extreme(l, n);
    }
    if (variant == "lemma1_sym")
      return lemma1_sym_certified(to_int(value));
    if (variant == "lemma1_alt")
      return lemma1_alt_certified(to_int(value));
    return theorem2_alt_extreme(to_int(value));
  }();
  env.report = hypermap_report(c.hypermap, c.report);
  env.certificates.push_back(to_json(c.certificate));
  return env;
}

Envelope cmd_verify(std::string const &suite, int max_n, std::uint64_t seed, int samples, bool verbose)
{
  Envelope env{"verify"};
  env.inputs = {{"suite", suite}, {"max_n", max_n}, {"seed", seed}, {"samples", samples}};

  std::vector<Outcome> outcomes;
  if (suite == "sn_classification") {
    if (max_n < 2 || max_n > 6)
      throw std::invalid_argument("sn_classification needs 2 <= max-n <= 6");
    outcomes = suite_sn_classification(max_n);
  } else if (suite == "main_theorem_grid" || suite == "jordan_miller") {
    if (max_n < 2 || max_n > 16)
      throw std::invalid_argument(suite + " needs 2 <= max-n <= 16");
    outcomes = suite == "jordan_miller" ? suite_jordan_miller(max_n) : suite_main_theorem_grid(max_n);
  } else {
    if (samples < 0)
      throw std::invalid_argument("samples must be non-negative");
    outcomes = suite_oracle_agreement(seed, samples);
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  Json instances = Json::array();
  for (auto const &o : outcomes) {
    (o.status == "pass" ? passed : o.status == "fail" ? failed : skipped)++;
    if (verbose || o.status != "pass")
      instances.push_back({{"instance", o.key}, {"status", o.status}, {"detail", o.detail}});
  }
  env.report = {{"suite", suite},   {"instances_total", outcomes.size()},
                {"passed", passed}, {"failed", failed},
                {"skipped", skipped}, {"instances", instances}};
  env.status = failed ? verification_failure : ok;
  return env;
}

Envelope cmd_census(std::string const &group)
{
  Envelope env{"census"};
  env.inputs = {{"group", group}};
  static std::regex const re(R"(([SA])(\d+))");
  std::smatch m;
  if (!std::regex_match(group, m, re))
    throw std::invalid_argument("group must be Sn or An, got " + group);
  int n = std::stoi(m[2]);
  if (n < 1 || n > 5)
    throw std::invalid_argument("census needs 1 <= n <= 5");
  env.report = census(m[1].str()[0], n);
  return env;
}

void emit(Envelope const &env, std::string const &format, double ms, std::ostream &out)
{
  Json j{{"command", env.command},
         {"inputs", env.inputs},
         {"report", env.report},
         {"certificates", env.certificates},
         {"timing_ms", std::round(ms * 1000.0) / 1000.0}};
  if (format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  print_text(out, j, 0);
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Duality of oriented regular hypermaps"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"text", "json"}))
    ->capture_default_str();

  auto *analyze_cmd = app.add_subcommand("analyze", "Analyze the hypermap (<x,y>, x, y)");
  std::string x_text, y_text;
  std::optional<std::size_t> degree;
  analyze_cmd->add_option("--x", x_text, "x in 1-based cycle notation")->required();
  analyze_cmd->add_option("--y", y_text, "y in 1-based cycle notation")->required();
  analyze_cmd->add_option("--degree", degree, "Common ambient degree");

  auto *construct_cmd = app.add_subcommand("construct", "Emit a certified construction");
  std::string dtype, sym, alt, thm2;
  auto *o1 = construct_cmd->add_option("--duality-type", dtype, "Extreme hypermap of duality-type l,n");
  auto *o2 = construct_cmd->add_option("--lemma1-sym", sym, "(1..n), (1,2)");
  auto *o3 = construct_cmd->add_option("--lemma1-alt", alt, "(1..n) or (2..n), (1,2,3)");
  auto *o4 = construct_cmd->add_option("--theorem2", thm2, "Extreme hypermap with monodromy A_n");

  auto *verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  std::string suite;
  int max_n = 12;
  std::uint64_t seed = 20261017;
  int samples = 200;
  bool verbose = false;
  verify_cmd->add_option("--suite", suite)
    ->required()
    ->check(CLI::IsMember({"sn_classification", "main_theorem_grid", "oracle_agreement", "jordan_miller"}));
  auto *max_n_opt = verify_cmd->add_option("--max-n", max_n, "Upper bound (default 5 or 12)");
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--samples", samples, "Random pairs per group (oracle_agreement)")
    ->capture_default_str();
  verify_cmd->add_flag("--verbose", verbose, "List passing instances too");

  auto *census_cmd = app.add_subcommand("census", "Duality indices over all generating pairs");
  std::string group;
  census_cmd->add_option("--group", group, "Sn or An with n <= 5")->required();

  for (auto *sub : {analyze_cmd, construct_cmd, verify_cmd, census_cmd})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return ok;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  for (auto *sub : app.get_subcommands())
    if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
      out << sub->help();
      return ok;
    }

  auto start = std::chrono::steady_clock::now();
  try {
    Envelope env;
    if (analyze_cmd->parsed()) {
      env = cmd_analyze(x_text, y_text, degree);
    } else if (construct_cmd->parsed()) {
      if (o1->count() + o2->count() + o3->count() + o4->count() != 1) {
        err << "error: construct needs exactly one of --duality-type, --lemma1-sym, --lemma1-alt, "
               "--theorem2\n";
        return usage_error;
      }
      if (o1->count())
        env = cmd_construct("duality_type", dtype);
      else if (o2->count())
        env = cmd_construct("lemma1_sym", sym);
      else if (o3->count())
        env = cmd_construct("lemma1_alt", alt);
      else
        env = cmd_construct("theorem2", thm2);
    } else if (verify_cmd->parsed()) {
      if (!max_n_opt->count())
        max_n = suite == "sn_classification" ? 5 : 12;
      env = cmd_verify(suite, max_n, seed, samples, verbose);
    } else {
      env = cmd_census(group);
    }
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    emit(env, format, ms.count(), out);
    return env.status;
  } catch (VerificationError const &e) {
    err << "verification failure: " << e.what() << '\n';
    return verification_failure;
  } catch (oracle::CutoffExceeded const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (std::exception const &e) {
    err << "internal failure: " << e.what() << '\n';
    return verification_failure;
  }
}

} // namespace hyperdual::cli
