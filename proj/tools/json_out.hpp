#pragma once

#include <json.hpp>

#include "cellgeom/kashiwara_saito.hpp"
#include "cellgeom/posbasis.hpp"
#include "cellgeom/repro.hpp"

namespace cellgeom::json_out {

using nlohmann::json;

json laurent(const LaurentPoly& p);
json wgraph(const WGraph& g);
json basis(const CandidateBasis& b);
json candidate_report(const CandidateReport& r);
json condition(const RankCondition& c);
json verification(const VerificationReport& r);
json reduction(const ReductionResult& r);
json repro(const ReproReport& r);

}  // namespace cellgeom::json_out
