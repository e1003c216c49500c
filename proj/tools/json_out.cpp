#include "json_out.hpp"

namespace cellgeom::json_out {

json laurent(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms.push_back({it->first, it->second.get_str()});
  return {{"text", p.to_string()}, {"terms", terms}};
}

json wgraph(const WGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"elt", to_string(v.elt)}, {"descents", v.descents}});
  for (const auto& e : g.edges)
    es.push_back({to_string(g.vertices[e.lower].elt), to_string(g.vertices[e.upper].elt), e.mu.get_si()});
  return {{"vertices", vs}, {"edges", es}};
}

json basis(const CandidateBasis& b) {
  json coeffs = json::array();
  for (const auto& [ij, p] : b.coeffs)
    coeffs.push_back({{"x", to_string(b.cell[ij.first])}, {"y", to_string(b.cell[ij.second])}, {"m", laurent(p)}});
  return {{"trivial", b.is_trivial()}, {"coeffs", coeffs}};
}

json candidate_report(const CandidateReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json elts = json::array(), bases = json::array(), flags = json::array();
    for (const auto& e : c.cell) elts.push_back(to_string(e));
    for (const auto& b : c.bases) bases.push_back(basis(b));
    for (const auto& [x, y] : c.right_cell_pairs) flags.push_back({to_string(x), to_string(y)});
    cells.push_back({{"label", c.label},
                     {"two_sided", c.two_sided},
                     {"cell", elts},
                     {"count", c.bases.size()},
                     {"bases", bases},
                     {"right_cell_pairs", flags}});
  }
  return {{"system", r.system.name()},
          {"max_degree", r.cfg.max_degree},
          {"max_coeff", r.cfg.max_coeff},
          {"descent_filter", r.cfg.descent_filter},
          {"two_sided_cells", r.two_sided_cells.size()},
          {"cells", cells}};
}

json condition(const RankCondition& c) { return {{"a", c.a}, {"b", c.b}, {"r", c.bound}}; }

json verification(const VerificationReport& r) {
  auto hist = [](const std::map<int, int>& h) {
    json o = json::object();
    for (const auto& [k, v] : h) o[std::to_string(k)] = v;
    return o;
  };
  return {{"target", target_name(r.target)},
          {"samples", r.samples},
          {"seed", r.seed},
          {"inclusion_pass", r.inclusion_pass},
          {"rejection_pass", r.rejection_pass},
          {"roundtrip_pass", r.roundtrip_pass},
          {"tangent_dims", {{"slice", hist(r.slice_tangent_dims)}, {"source", hist(r.ks_tangent_dims)}}},
          {"origin_source_tangent_dim", r.origin_ks_tangent_dim},
          {"origin_inclusion", r.origin_inclusion},
          {"param_jacobian_rank", r.param_jacobian_rank},
          {"tangent_method", r.method == TangentMethod::Minors ? "minors" : "kernel"},
          {"checked",
           "forward inclusion of mapped samples, rejection of det-perturbed samples, tangent dimension of the "
           "scheme cut out by the essential minors (equals the variety's tangent space only where that scheme "
           "is reduced); no ideal equality is claimed"},
          {"failures", r.failures},
          {"pass", r.all_pass()}};
}

json reduction(const ReductionResult& r) {
  return {{"forward", r.forward},
          {"backward", r.backward},
          {"mixed", r.mixed},
          {"mixed_positive", r.mixed_positive},
          {"counterexamples", r.counterexamples},
          {"pass", r.pass()}};
}

json repro(const ReproReport& r) {
  json recs = json::array();
  for (const auto& c : r.records)
    recs.push_back({{"id", c.id},
                    {"group", c.group},
                    {"location", c.location},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"pass", c.pass},
                    {"seconds", c.seconds}});
  return {{"version", r.version},
          {"seed", r.seed},
          {"only", r.only},
          {"records", recs},
          {"summary", {{"total", r.records.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

}  // namespace cellgeom::json_out
