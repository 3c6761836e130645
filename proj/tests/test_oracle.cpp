#include <doctest.h>

#include "arbor/oracle.hpp"

using namespace arbor;

namespace {
const std::string kData = TEST_DATA_DIR;
}

TEST_CASE("trial seeds are deterministic and spread") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("crosschecks pass on the (3,3)-biregular code") {
  Code c = Code::load(kData + "/bireg33.txt");
  CrosscheckOptions o;
  o.radius = 10;
  o.trials = 150;
  o.seed = 11;
  for (auto* fn : {crosscheck_rot_rot, crosscheck_offaxis, crosscheck_onaxis}) {
    auto s = fn(c, o);
    CHECK(s.ok());
    CHECK(s.matches > 0);
    CHECK(s.matches + s.skipped + s.mismatches == s.trials);
    CHECK(s.line().find("mismatches=0") != std::string::npos);
  }
}

TEST_CASE("crosscheck results are independent of the job count") {
  Code c = Code::load(kData + "/bireg33.txt");
  CrosscheckOptions o1;
  o1.radius = 10;
  o1.trials = 100;
  o1.seed = 3;
  CrosscheckOptions o4 = o1;
  o4.jobs = 4;
  CHECK(crosscheck_rot_rot(c, o1).line() == crosscheck_rot_rot(c, o4).line());
  CHECK(crosscheck_onaxis(c, o1).line() == crosscheck_onaxis(c, o4).line());
}

TEST_CASE("crosschecks pass on an almost-biregular code") {
  Code c = Code::load(kData + "/almost34k2.txt");
  CrosscheckOptions o;
  o.radius = 10;
  o.trials = 150;
  o.seed = 19;
  o.jobs = 2;
  CHECK(crosscheck_rot_rot(c, o).ok());
  CHECK(crosscheck_offaxis(c, o).ok());
  CHECK(crosscheck_onaxis(c, o).ok());
}

TEST_CASE("lemma39 exhaustive bound check") {
  auto s = crosscheck_lemma39();
  CHECK(s.ok());
  CHECK(s.trials > 500);
  CHECK(s.skipped == 0);
  CHECK(s.scenario == "lemma39");
}
