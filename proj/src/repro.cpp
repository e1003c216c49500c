#include "cellgeom/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "cellgeom/kashiwara_saito.hpp"
#include "cellgeom/posbasis.hpp"
#include "cellgeom/reference_data.hpp"
#include "cellgeom/version.hpp"

namespace cellgeom {

namespace {

class Runner {
 public:
  Runner(const ReproOptions& opts, ReproReport& report) : opts_(opts), report_(report) {}

  bool wants(const std::string& group, const std::string& id) const {
    return opts_.only.empty() || opts_.only == group || id.rfind(opts_.only, 0) == 0;
  }

  bool wants_group(const std::string& group) const {
    if (opts_.only.empty() || opts_.only == group) return true;
    return opts_.only.rfind(group + ".", 0) == 0;
  }

  // Computes `computed` lazily so filtered checks cost nothing.
  void check(const std::string& group, const std::string& id, const std::string& ref_key, const std::string& expected,
             const std::function<std::string()>& computed) {
    if (!wants(group, id)) return;
    CheckRecord rec{id, group, ref_key.empty() ? "" : reference_entry(ref_key).location, expected, "", false, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rec.computed = computed();
      rec.pass = rec.computed == rec.expected;
    } catch (const std::exception& e) {
      rec.computed = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.records.push_back(std::move(rec));
  }

  const ReproOptions& opts() const { return opts_; }

 private:
  const ReproOptions& opts_;
  ReproReport& report_;
};

std::string b2_name(const CoxeterElement& w) {
  std::string s;
  for (int g : reduced_word(w)) s += g == 0 ? 's' : 't';
  return s.empty() ? "id" : s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string histogram(const std::map<int, int>& h) {
  std::string s = "{";
  for (const auto& [k, v] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ": " + std::to_string(v);
  return s + "}";
}

CoxeterElement perm(const std::string& key) {
  const auto& s = reference_value(key);
  return parse_perm(s, static_cast<int>(s.size()));
}

CoxeterElement from_word(int n, const std::string& key) {
  return word_to_elt(CoxeterSystem::type_a(n), parse_word(reference_value(key)));
}

void hecke_checks(Runner& r) {
  r.check("hecke", "hecke.kl_generator", "hecke.kl_generator", "H_s + v H_id", [] {
    for (const auto& sys : {CoxeterSystem::type_a(2), CoxeterSystem::type_a(3), CoxeterSystem::type_a(4),
                            CoxeterSystem::type_a(5), CoxeterSystem::type_b(2), CoxeterSystem::type_b(3)}) {
      KLCache cache(sys);
      for (int s : sys.generators()) {
        const auto expect = HeckeElt::standard(CoxeterElement::generator(sys, s)) +
                            HeckeElt::standard(CoxeterElement::identity(sys)) * v_pow(1);
        if (!(cache.kl_basis_elt(CoxeterElement::generator(sys, s)) == expect))
          return "mismatch in " + sys.name() + " at s" + std::to_string(s);
      }
    }
    return std::string("H_s + v H_id");
  });
}

void b2_checks(Runner& r) {
  if (!r.wants_group("b2")) return;
  KLCache cache(CoxeterSystem::type_b(2));
  const auto sys = cache.system();
  const auto s = CoxeterElement::generator(sys, 0), t = CoxeterElement::generator(sys, 1);
  std::vector<CoxeterElement> cell = {s, mult(t, s), mult(s, mult(t, s))};
  r.check("b2", "b2.cell", "b2.cell", "true", [&] {
    for (const auto& c : left_cells(cache)) {
      auto sorted = cell;
      sort_cell(sorted);
      if (c == sorted) return std::string("true");
    }
    return std::string("false");
  });
  r.check("b2", "b2.wgraph.descents", "b2.wgraph.descents", reference_value("b2.wgraph.descents"), [&] {
    std::string out;
    for (const auto& v : wgraph_of_cell(cache, cell).vertices) {
      if (!out.empty()) out += ",";
      for (int g : v.descents) out += g == 0 ? 's' : 't';
    }
    return out;
  });
  const auto module = cell_module(cache, cell);
  const auto bases = enumerate_bases(module, {});
  r.check("b2", "b2.bases.count", "b2.bases", reference_value("b2.bases"), [&] { return std::to_string(bases.size()); });
  r.check("b2", "b2.bases.nontrivial", "b2.nontrivial", reference_value("b2.nontrivial"), [&] {
    if (bases.size() < 2) return std::string("none");
    std::string out;
    for (const auto& [ij, p] : bases[1].coeffs) {
      const auto y = b2_name(bases[1].cell[ij.second]);
      out += "M'_" + y + " = M_" + y + " + " + (p == LaurentPoly(1) ? "" : "(" + p.to_string() + ") ") + "M_" +
             b2_name(bases[1].cell[ij.first]);
    }
    return out;
  });
}

void s4_checks(Runner& r) {
  if (!r.wants_group("s4")) return;
  KLCache cache(CoxeterSystem::type_a(4));
  for (const std::string lam : {"3,1", "2,1,1"}) {
    const auto part = parse_partition(lam);
    const std::string key = "s4.bases." + partition_to_string(part);
    r.check("s4", key, key, reference_value(key), [&] {
      return std::to_string(enumerate_bases(cell_module(cache, cell_of_partition(cache, part)), {}).size());
    });
  }
}

void n4_checks(Runner& r) {
  if (!r.wants_group("n4")) return;
  const auto x = perm("n4.x"), y = perm("n4.y");
  r.check("n4", "n4.conditions", "n4.equation", "[(a=3, b=2, r=1)]", [&] {
    std::string out = "[";
    for (const auto& c : rank_conditions(x, y, true))
      out += (out.size() > 1 ? ", " : "") + std::string("(a=") + std::to_string(c.a) + ", b=" + std::to_string(c.b) +
             ", r=" + std::to_string(c.bound) + ")";
    return out + "]";
  });
  r.check("n4", "n4.minor", "n4.equation", "ad-bc", [&] {
    const auto chart = slice_chart(x);
    const auto conds = rank_conditions(x, y, true);
    if (conds.size() != 1) return std::string("expected one condition");
    const auto minors = condition_minors(chart, conds[0]);
    if (minors.size() != 1) return std::to_string(minors.size()) + " minors";
    // Chart variables are numbered down columns: a, c, b, d.
    const char* names = "acbd";
    auto m = minors[0];
    auto name = [&](int k) { return std::string(1, names[k]); };
    auto ad_bc = SymPoly::variable(0) * SymPoly::variable(3) - SymPoly::variable(2) * SymPoly::variable(1);
    if (m == -ad_bc) m = -m;
    return m == ad_bc ? std::string("ad-bc") : m.to_string(name);
  });
}

void gl8_checks(Runner& r) {
  if (!r.wants_group("gl8")) return;
  const auto u = perm("gl8.u"), v = perm("gl8.v");
  r.check("gl8", "gl8.u.parabolic", "gl8.u.parabolic", reference_value("gl8.u"), [&] {
    std::vector<int> gens;
    for (const auto& g : parse_partition(reference_value("gl8.u.parabolic"))) gens.push_back(g);
    return to_string(longest_parabolic_elt(u.system(), gens));
  });
  r.check("gl8", "gl8.u.length", "gl8.u.length", reference_value("gl8.u.length"),
          [&] { return std::to_string(length(u)); });
  r.check("gl8", "gl8.v.length", "gl8.v.length", reference_value("gl8.v.length"),
          [&] { return std::to_string(length(v)); });
  r.check("gl8", "gl8.bruhat", "gl8.v", "true", [&] { return bool_str(bruhat_leq(u, v)); });
}

void gl12_checks(Runner& r) {
  if (!r.wants_group("gl12")) return;
  const auto x = perm("gl12.x"), y = perm("gl12.y");
  r.check("gl12", "gl12.x.word", "gl12.x.word", reference_value("gl12.x"),
          [&] { return to_string(from_word(12, "gl12.x.word")); });
  r.check("gl12", "gl12.y.word", "gl12.y.word", reference_value("gl12.y"),
          [&] { return to_string(from_word(12, "gl12.y.word")); });
  r.check("gl12", "gl12.x.length", "gl12.x.length", reference_value("gl12.x.length"),
          [&] { return std::to_string(length(x)); });
  r.check("gl12", "gl12.y.length", "gl12.y.length", reference_value("gl12.y.length"),
          [&] { return std::to_string(length(y)); });
  r.check("gl12", "gl12.x.word.reduced", "gl12.x.word", reference_value("gl12.x.length"),
          [&] { return std::to_string(parse_word(reference_value("gl12.x.word")).size()); });
  r.check("gl12", "gl12.y.word.reduced", "gl12.y.word", reference_value("gl12.y.length"),
          [&] { return std::to_string(parse_word(reference_value("gl12.y.word")).size()); });
  r.check("gl12", "gl12.bruhat", "gl12.x", "true", [&] { return bool_str(bruhat_leq(x, y)); });
  for (const auto& [name, w] : {std::pair{"x", x}, std::pair{"y", y}}) {
    const auto tp = rsk(w);
    const std::string base = std::string("gl12.") + name;
    r.check("gl12", base + ".P", base + ".P", reference_value(base + ".P"), [&] { return tp.P.to_string(); });
    r.check("gl12", base + ".Q", base + ".Q", reference_value(base + ".Q"), [&] { return tp.Q.to_string(); });
  }
  r.check("gl12", "gl12.same_right_cell", "gl12.y.P", "true",
          [&] { return bool_str(same_cell(x, y, CellKind::Right)); });
}

void ks_checks(Runner& r, Target t) {
  const std::string g = target_name(t);
  if (!r.wants_group(g)) return;
  const int n = r.opts().ks_samples;
  const std::string key = g == "gl8" ? "gl8.layout" : "gl12.layout";
  r.check(g, g + ".layout", key, "true", [&] {
    realization(t);  // throws on a pattern mismatch
    return std::string("true");
  });
  VerificationReport rep;
  bool ran = false;
  auto report = [&]() -> const VerificationReport& {
    if (!ran) rep = verify_embedding(t, n, r.opts().seed, r.opts().threads);
    ran = true;
    return rep;
  };
  const std::string all = std::to_string(n) + "/" + std::to_string(n);
  const std::string dims = n ? "{8: " + std::to_string(n) + "}" : "{}";
  r.check(g, g + ".ks.inclusion", "ks.dim", all, [&] {
    return std::to_string(report().inclusion_pass) + "/" + std::to_string(n);
  });
  r.check(g, g + ".ks.rejection", "ks.dim", all, [&] {
    return std::to_string(report().rejection_pass) + "/" + std::to_string(n);
  });
  r.check(g, g + ".ks.slice_tangent", "ks.dim", dims, [&] { return histogram(report().slice_tangent_dims); });
  r.check(g, g + ".ks.source_tangent", "ks.dim", dims, [&] { return histogram(report().ks_tangent_dims); });
  r.check(g, g + ".ks.origin_tangent", "ks.dim", "16", [&] { return std::to_string(report().origin_ks_tangent_dim); });
  if (t != Target::GL8) return;
  for (auto k : all_reductions()) {
    r.check(g, "gl8.reduction." + reduction_name(k), "gl8.layout", "0 counterexamples", [&] {
      const auto res = reduce_check(k, r.opts().seed, r.opts().reduction_samples);
      return std::to_string(res.counterexamples) + " counterexamples";
    });
  }
}

void gl13_checks(Runner& r) {
  if (!r.wants_group("gl13")) return;
  const auto x = from_word(13, "gl13.x.word"), y = from_word(13, "gl13.y.word");
  r.check("gl13", "gl13.same_right_cell", "gl13.x.word", "true",
          [&] { return bool_str(rsk(x).P == rsk(y).P); });
  r.check("gl13", "gl13.bruhat", "gl13.y.word", "true", [&] { return bool_str(bruhat_leq(x, y)); });
  r.check("gl13", "gl13.x.reduced", "gl13.x.word", "true", [&] {
    return bool_str(length(x) == static_cast<int>(parse_word(reference_value("gl13.x.word")).size()));
  });
  r.check("gl13", "gl13.y.reduced", "gl13.y.word", "true", [&] {
    return bool_str(length(y) == static_cast<int>(parse_word(reference_value("gl13.y.word")).size()));
  });
}

}  // namespace

int ReproReport::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

const std::vector<std::string>& repro_groups() {
  static const std::vector<std::string> g = {"hecke", "b2", "s4", "n4", "gl8", "gl12", "gl13"};
  return g;
}

ReproReport repro_all(const ReproOptions& opts) {
  ReproReport report{kVersion, opts.seed, opts.only, {}};
  Runner r(opts, report);
  hecke_checks(r);
  b2_checks(r);
  s4_checks(r);
  n4_checks(r);
  gl8_checks(r);
  ks_checks(r, Target::GL8);
  gl12_checks(r);
  ks_checks(r, Target::GL12);
  gl13_checks(r);
  return report;
}

}  // namespace cellgeom
