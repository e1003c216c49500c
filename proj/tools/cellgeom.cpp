// cellgeom: command line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cellgeom/kashiwara_saito.hpp"
#include "cellgeom/posbasis.hpp"
#include "cellgeom/repro.hpp"
#include "cellgeom/version.hpp"
#include "json_out.hpp"

using namespace cellgeom;
using json_out::json;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct SystemArgs {
  std::string family = "A";
  int n = 4;

  CoxeterSystem make() const {
    if (family == "A" || family == "a") {
      if (n < 2 || n > kMaxStringDegree) throw Error("type A needs 2 <= n <= 35");
      return CoxeterSystem::type_a(n);
    }
    if (family == "B" || family == "b") {
      if (n < 1 || n > 20) throw Error("type B needs 1 <= n <= 20");
      return CoxeterSystem::type_b(n);
    }
    throw Error("unknown family '" + family + "' (expected A or B)");
  }
};

void add_system(CLI::App* cmd, SystemArgs& s) {
  cmd->add_option("--family", s.family, "Coxeter type: A or B")->capture_default_str();
  cmd->add_option("--n", s.n, "degree: S_n for A, signed permutations of n for B")->capture_default_str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json elements_json(const std::vector<CoxeterElement>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_string(e));
  return a;
}

int run_kl(const SystemArgs& sa, const std::string& xs, const std::string& ws, bool all, bool as_json) {
  const auto sys = sa.make();
  KLCache cache(sys);
  if (all) {
    const auto t0 = std::chrono::steady_clock::now();
    cache.build_all();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t entries = 0;
    Integer max_mu = 0;
    for (int w = 0; w < cache.size(); ++w) {
      entries += cache.row(w).size();
      for (const auto& e : cache.row(w))
        if (e.x != w && e.h.coeff(1) > max_mu) max_mu = e.h.coeff(1);
    }
    if (as_json)
      print_json({{"system", sys.name()}, {"elements", cache.size()}, {"entries", entries},
                  {"max_mu", max_mu.get_str()}, {"seconds", secs}});
    else
      std::cout << sys.name() << ": " << cache.size() << " elements, " << entries << " nonzero h_{x,w}, max mu "
                << max_mu << ", " << secs << " s\n";
    return 0;
  }
  if (ws.empty()) throw Error("--w is required unless --all is given");
  const auto w = parse_element(sys, ws);
  json rows = json::array();
  auto emit = [&](const CoxeterElement& x) {
    const auto h = cache.kl_poly(x, w);
    const Integer mu = x == w ? Integer(0) : h.coeff(1);
    if (as_json)
      rows.push_back({{"x", to_string(x)}, {"h", json_out::laurent(h)}, {"mu", mu.get_str()}});
    else
      std::cout << "h_{" << to_string(x) << "," << to_string(w) << "} = " << h.to_string() << "   mu = " << mu
                << "\n";
  };
  if (!xs.empty()) {
    emit(parse_element(sys, xs));
  } else {
    for (const auto& [xi, h] : cache.row(cache.index_of(w))) emit(cache.element(xi));
  }
  if (as_json) print_json({{"system", sys.name()}, {"w", to_string(w)}, {"entries", rows}});
  return 0;
}

int run_rsk(const std::string& s, bool as_json) {
  const int n = static_cast<int>(s.size());
  const auto tp = rsk(parse_perm(s, n));
  if (as_json) {
    print_json({{"perm", s},
                {"shape", tp.P.shape()},
                {"P", tp.P.to_string()},
                {"Q", tp.Q.to_string()},
                {"P_rows", tp.P.rows},
                {"Q_rows", tp.Q.rows}});
  } else {
    std::cout << "P =\n" << tp.P.to_string() << "\n\nQ =\n" << tp.Q.to_string() << "\n";
  }
  return 0;
}

CellKind parse_kind(const std::string& k) {
  if (k == "left") return CellKind::Left;
  if (k == "right") return CellKind::Right;
  if (k == "two-sided") return CellKind::TwoSided;
  throw Error("unknown cell kind '" + k + "'");
}

int run_cells(const SystemArgs& sa, const std::string& kind, bool as_json) {
  KLCache cache(sa.make());
  const auto cells = compute_cells(cache, parse_kind(kind));
  if (as_json) {
    json a = json::array();
    for (const auto& c : cells) a.push_back(elements_json(c));
    print_json({{"system", cache.system().name()}, {"kind", kind}, {"count", cells.size()}, {"cells", a}});
    return 0;
  }
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << to_string(c[i]);
    std::cout << "\n";
  }
  return 0;
}

std::vector<CoxeterElement> left_cell_of(KLCache& cache, const CoxeterElement& w) {
  CellStructure cs(cache);
  const int id = cs.cell_id(cache.index_of(w), CellKind::Left);
  std::vector<CoxeterElement> cell;
  for (int i = 0; i < cache.size(); ++i)
    if (cs.cell_id(i, CellKind::Left) == id) cell.push_back(cache.element(i));
  sort_cell(cell);
  return cell;
}

int run_wgraph(const SystemArgs& sa, const std::string& repr, bool as_json) {
  KLCache cache(sa.make());
  const auto g = wgraph_of_cell(cache, left_cell_of(cache, parse_element(cache.system(), repr)));
  if (as_json) {
    print_json(json_out::wgraph(g));
    return 0;
  }
  for (const auto& v : g.vertices) {
    std::cout << to_string(v.elt) << " {";
    for (std::size_t i = 0; i < v.descents.size(); ++i) std::cout << (i ? "," : "") << v.descents[i];
    std::cout << "}\n";
  }
  for (const auto& e : g.edges)
    std::cout << to_string(g.vertices[e.lower].elt) << " -- " << to_string(g.vertices[e.upper].elt) << "  mu=" << e.mu
              << "\n";
  return 0;
}

int run_posbasis(const SystemArgs& sa, const std::string& partition, const std::string& repr, bool report,
                 const SearchConfig& cfg, bool as_json) {
  KLCache cache(sa.make());
  if (report) {
    const auto rep = report_candidates(cache, cfg);
    if (as_json) {
      print_json(json_out::candidate_report(rep));
      return 0;
    }
    for (const auto& c : rep.cells) {
      std::cout << "two-sided " << c.two_sided << "  " << c.label << "  cell of " << to_string(c.cell.front())
                << " (" << c.cell.size() << " elements): " << c.bases.size() << " bases";
      if (!c.right_cell_pairs.empty()) std::cout << "  [nontrivial pair within a right cell]";
      std::cout << "\n";
      for (std::size_t i = 1; i < c.bases.size(); ++i) std::cout << "    " << c.bases[i].to_string() << "\n";
    }
    return 0;
  }
  std::vector<CoxeterElement> cell;
  if (!partition.empty())
    cell = cell_of_partition(cache, parse_partition(partition));
  else if (!repr.empty())
    cell = left_cell_of(cache, parse_element(cache.system(), repr));
  else
    throw Error("give --partition, --cell or --report");
  const auto module = cell_module(cache, cell);
  const auto bases = enumerate_bases(module, cfg);
  if (as_json) {
    json bs = json::array();
    for (const auto& b : bases) bs.push_back(json_out::basis(b));
    print_json({{"system", cache.system().name()},
                {"cell", elements_json(module.vertices)},
                {"max_degree", cfg.max_degree},
                {"max_coeff", cfg.max_coeff},
                {"descent_filter", cfg.descent_filter},
                {"count", bases.size()},
                {"bases", bs}});
    return 0;
  }
  std::cout << "cell:";
  for (const auto& e : module.vertices) std::cout << " " << to_string(e);
  std::cout << "\n" << bases.size() << " admissible bases\n";
  for (const auto& b : bases) std::cout << "  " << b.to_string() << "\n";
  return 0;
}

int run_slice(int n, const std::string& xs, const std::string& ys, bool essential, int max_minors, bool as_json) {
  const auto x = parse_perm(xs, n), y = parse_perm(ys, n);
  const auto chart = slice_chart(x);
  std::vector<std::string> warnings;
  const auto conds = rank_conditions(x, y, essential, &warnings);
  auto name = [&](int k) { return chart.var_name(k); };
  std::vector<std::string> grid;
  for (int i = 0; i < n; ++i) {
    std::string row;
    for (int j = 0; j < n; ++j) {
      const auto& s = chart.grid[i][j];
      const std::string cell = s.kind == SlotKind::Var ? chart.var_name(s.var) : s.kind == SlotKind::One ? "1" : "0";
      row += (j ? " " : "") + std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') + cell;
    }
    grid.push_back(row);
  }
  json jconds = json::array();
  for (const auto& c : conds) {
    const auto minors = condition_minors(chart, c);
    json j = json_out::condition(c);
    j["minor_count"] = minors.size();
    json ms = json::array();
    for (std::size_t i = 0; i < minors.size() && static_cast<int>(i) < max_minors; ++i)
      ms.push_back(minors[i].to_string(name));
    j["minors"] = ms;
    jconds.push_back(j);
  }
  if (as_json) {
    json vars = json::array();
    for (int k = 0; k < chart.var_count; ++k) vars.push_back(chart.var_name(k));
    print_json({{"n", n},
                {"x", xs},
                {"y", ys},
                {"essential", essential},
                {"variables", vars},
                {"grid", grid},
                {"conditions", jconds},
                {"warnings", warnings}});
    return 0;
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "N_" << xs << " (" << chart.var_count << " variables):\n";
  for (const auto& r : grid) std::cout << "  " << r << "\n";
  std::cout << conds.size() << (essential ? " essential" : "") << " rank conditions:\n";
  for (const auto& j : jconds) {
    std::cout << "  rank(rows " << j["a"].get<int>() << ".." << n << ", cols 1.." << j["b"].get<int>()
              << ") <= " << j["r"].get<int>() << "   [" << j["minor_count"].get<std::size_t>() << " nonzero minors]\n";
    for (const auto& m : j["minors"]) std::cout << "    " << m.get<std::string>() << " = 0\n";
  }
  return 0;
}

int run_ks_verify(const std::string& target, int samples, std::uint64_t seed, int threads, const std::string& method,
                  int reduction_samples, bool as_json) {
  if (method != "minors" && method != "kernel") throw Error("--method must be minors or kernel");
  const auto rep = verify_embedding(parse_target(target), samples, seed, threads,
                                    method == "minors" ? TangentMethod::Minors : TangentMethod::Kernel);
  json reds = json::object();
  bool reds_ok = true;
  if (reduction_samples > 0)
    for (auto k : all_reductions()) {
      const auto r = reduce_check(k, seed, reduction_samples);
      reds[reduction_name(k)] = json_out::reduction(r);
      reds_ok = reds_ok && r.pass();
    }
  const bool ok = rep.all_pass() && reds_ok;
  if (as_json) {
    json j = json_out::verification(rep);
    j["reductions"] = reds;
    j["pass"] = ok;
    print_json(j);
  } else {
    std::cout << target << ": " << samples << " samples, seed " << seed << "\n"
              << "  inclusion  " << rep.inclusion_pass << "/" << samples << "\n"
              << "  rejection  " << rep.rejection_pass << "/" << samples << "\n";
    for (const auto& [d, c] : rep.slice_tangent_dims) std::cout << "  slice tangent dim " << d << ": " << c << "\n";
    for (const auto& [d, c] : rep.ks_tangent_dims) std::cout << "  source tangent dim " << d << ": " << c << "\n";
    std::cout << "  source tangent dim at 0: " << rep.origin_ks_tangent_dim << "\n";
    for (auto it = reds.begin(); it != reds.end(); ++it)
      std::cout << "  " << it.key() << ": " << (*it)["counterexamples"].get<int>() << " counterexamples\n";
    for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : kCheckFailed;
}

int run_ks_sample(std::uint64_t seed, int bound, bool as_json) {
  const auto p = ks_sample(seed, bound);
  json ms = json::array();
  for (const auto& m : p.M) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) rows.push_back({m(i, 0).get_str(), m(i, 1).get_str()});
    ms.push_back(rows);
  }
  if (as_json) {
    print_json({{"seed", seed}, {"M", ms}, {"member", ks_member(p)}, {"tangent_dim", ks_tangent_dim(p)}});
  } else {
    for (int i = 0; i < 4; ++i) std::cout << "M" << i + 1 << " = " << p.M[i].to_string() << "\n";
    std::cout << "tangent dim " << ks_tangent_dim(p) << "\n";
  }
  return 0;
}

int run_repro(const ReproOptions& opts, bool as_json) {
  if (!opts.only.empty()) {
    const auto& g = repro_groups();
    if (std::find(g.begin(), g.end(), opts.only) == g.end() && opts.only.find('.') == std::string::npos)
      throw Error("unknown --only group '" + opts.only + "'");
  }
  const auto rep = repro_all(opts);
  if (as_json) {
    print_json(json_out::repro(rep));
  } else {
    for (const auto& r : rep.records) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (!r.location.empty()) std::cout << "  [" << r.location << "]";
      std::cout << "\n";
      if (!r.pass) {
        std::cout << "    expected: " << r.expected << "\n    computed: " << r.computed << "\n";
      }
    }
    std::cout << rep.passed() << "/" << rep.records.size() << " checks passed\n";
  }
  return rep.all_pass() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells, positive bases and Schubert slice checks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  bool as_json = false;
  std::function<int()> action;

  SystemArgs sys;
  std::string xs, ws, pair;
  bool all = false;
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials h_{x,w}");
  add_system(kl, sys);
  kl->add_option("--x", xs, "lower element (default: every x <= w)");
  kl->add_option("--w", ws, "upper element; 'w:<word>' accepted");
  kl->add_option("--pair", pair, "x,w in one argument");
  kl->add_flag("--all", all, "build the full table and report its size and time");
  kl->add_flag("--json", as_json);
  kl->callback([&] {
    if (!pair.empty()) {
      // split at the first comma outside brackets so [-1,2],[2,1] works
      int depth = 0;
      std::size_t cut = std::string::npos;
      for (std::size_t i = 0; i < pair.size() && cut == std::string::npos; ++i) {
        if (pair[i] == '[') ++depth;
        if (pair[i] == ']') --depth;
        if (pair[i] == ',' && depth == 0) cut = i;
      }
      if (cut == std::string::npos) throw CLI::ValidationError("--pair", "expected x,w");
      xs = pair.substr(0, cut);
      ws = pair.substr(cut + 1);
    }
    action = [&] { return run_kl(sys, xs, ws, all, as_json); };
  });

  std::string perm;
  auto* rs = app.add_subcommand("rsk", "Robinson-Schensted tableaux of a permutation");
  rs->add_option("perm", perm, "permutation in string notation")->required();
  rs->add_flag("--json", as_json);
  rs->callback([&] { action = [&] { return run_rsk(perm, as_json); }; });

  std::string kind = "left";
  auto* ce = app.add_subcommand("cells", "Kazhdan-Lusztig cells");
  add_system(ce, sys);
  ce->add_option("--kind", kind, "left, right or two-sided")->capture_default_str();
  ce->add_flag("--json", as_json);
  ce->callback([&] { action = [&] { return run_cells(sys, kind, as_json); }; });

  std::string repr;
  auto* wg = app.add_subcommand("wgraph", "W-graph of the left cell containing an element");
  add_system(wg, sys);
  wg->add_option("--cell", repr, "any element of the cell")->required();
  wg->add_flag("--json", as_json);
  wg->callback([&] { action = [&] { return run_wgraph(sys, repr, as_json); }; });

  std::string partition;
  bool report = false, no_filter = false;
  SearchConfig cfg;
  auto* pb = app.add_subcommand("posbasis", "admissible positive bases of a cell module");
  add_system(pb, sys);
  pb->add_option("--partition", partition, "type A: cell of the longest element of W_lambda, e.g. 3,1");
  pb->add_option("--cell", repr, "any element of the left cell");
  pb->add_flag("--report", report, "search every left cell");
  pb->add_option("--deg", cfg.max_degree, "bound on exponents")->capture_default_str()->check(CLI::NonNegativeNumber);
  pb->add_option("--coeff", cfg.max_coeff, "bound on coefficients")->capture_default_str()->check(CLI::NonNegativeNumber);
  pb->add_flag("--no-descent-filter", no_filter, "allow m_{x,y} without descent containment");
  pb->add_flag("--json", as_json);
  pb->callback([&] {
    cfg.descent_filter = !no_filter;
    action = [&] { return run_posbasis(sys, partition, repr, report, cfg, as_json); };
  });

  int n = 4, max_minors = 20;
  std::string ys;
  bool essential = false;
  auto* sl = app.add_subcommand("slice", "normal slice N_x and the rank conditions of Z_y");
  sl->add_option("--n", n)->required();
  sl->add_option("--x", xs)->required();
  sl->add_option("--y", ys)->required();
  sl->add_flag("--essential", essential, "only the essential conditions");
  sl->add_option("--max-minors", max_minors, "minors printed per condition")->capture_default_str();
  sl->add_flag("--json", as_json);
  sl->callback([&] { action = [&] { return run_slice(n, xs, ys, essential, max_minors, as_json); }; });

  auto* ks = app.add_subcommand("ks", "Kashiwara-Saito variety");
  ks->require_subcommand(1);
  std::string target = "gl8", method = "minors";
  int samples = 100, threads = 0, reduction_samples = 1000, bound = 10;
  std::uint64_t seed = 42;
  auto* kv = ks->add_subcommand("verify", "check the slice realization on random points");
  kv->add_option("--target", target, "gl8 or gl12")->capture_default_str();
  kv->add_option("--samples", samples)->capture_default_str()->check(CLI::NonNegativeNumber);
  kv->add_option("--seed", seed)->capture_default_str();
  kv->add_option("--threads", threads, "0: CELLGEOM_THREADS or all cores")->capture_default_str();
  kv->add_option("--method", method, "slice tangent equations: minors or kernel")->capture_default_str();
  kv->add_option("--reduction-samples", reduction_samples, "per direction; 0 skips")->capture_default_str();
  kv->add_flag("--json", as_json);
  kv->callback([&] {
    action = [&] { return run_ks_verify(target, samples, seed, threads, method, reduction_samples, as_json); };
  });
  auto* ksamp = ks->add_subcommand("sample", "draw one point of the variety");
  ksamp->add_option("--seed", seed)->capture_default_str();
  ksamp->add_option("--bound", bound)->capture_default_str()->check(CLI::PositiveNumber);
  ksamp->add_flag("--json", as_json);
  ksamp->callback([&] { action = [&] { return run_ks_sample(seed, bound, as_json); }; });

  ReproOptions ropts;
  auto* rp = app.add_subcommand("repro", "reproduce the published examples");
  rp->require_subcommand(1);
  auto* ra = rp->add_subcommand("all", "run every check");
  ra->add_option("--seed", ropts.seed)->capture_default_str();
  ra->add_option("--only", ropts.only, "group (hecke, b2, s4, n4, gl8, gl12, gl13) or check id prefix");
  ra->add_option("--samples", ropts.ks_samples, "Kashiwara-Saito samples per target")->capture_default_str();
  ra->add_option("--reduction-samples", ropts.reduction_samples)->capture_default_str();
  ra->add_option("--threads", ropts.threads)->capture_default_str();
  ra->add_flag("--json", as_json);
  ra->callback([&] { action = [&] { return run_repro(ropts, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
