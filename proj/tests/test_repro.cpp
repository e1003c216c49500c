#include <doctest.h>

#include <set>

#include "cellgeom/repro.hpp"

using namespace cellgeom;

namespace {

ReproOptions small(const std::string& only) {
  ReproOptions o;
  o.only = only;
  o.ks_samples = 4;
  o.reduction_samples = 20;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("groups filter") {
  for (const auto& g : repro_groups()) {
    const auto rep = repro_all(small(g));
    CHECK(!rep.records.empty());
    for (const auto& r : rep.records) CHECK(r.group == g);
  }
  const auto one = repro_all(small("gl12.bruhat"));
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].pass);
  CHECK(repro_all(small("nothing")).records.empty());
}

TEST_CASE("small groups pass") {
  for (auto g : {"hecke", "b2", "n4", "gl8", "gl12", "gl13"}) {
    const auto rep = repro_all(small(g));
    for (const auto& r : rep.records) {
      INFO(r.id << ": expected " << r.expected << ", computed " << r.computed);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("s4 record") {
  const auto rep = repro_all(small("s4"));
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.records[0].pass);  // (3,1)
  // Generator positivity admits only the trivial basis for (2,1,1).
  CHECK_FALSE(rep.records[1].pass);
  CHECK(rep.records[1].computed == "1");
}

TEST_CASE("record ids are unique") {
  ReproOptions o = small("");
  const auto rep = repro_all(o);
  std::set<std::string> ids;
  for (const auto& r : rep.records) CHECK(ids.insert(r.id).second);
  CHECK(rep.passed() + rep.failed() == static_cast<int>(rep.records.size()));
  CHECK(rep.failed() == 1);
}
