#include "doctest.h"
#include "helmsens/json_io.hpp"

using namespace helmsens;
using jsonio::Writer;

TEST_CASE("format_double is byte-stable at 17 significant digits") {
  CHECK(jsonio::format_double(0.1) == "0.10000000000000001");
  CHECK(jsonio::format_double(1.0) == "1");
  CHECK(jsonio::format_double(-2.5e-3) == "-0.0025000000000000001");
  CHECK(jsonio::format_double(0.0) == "0");
}

TEST_CASE("writer nests objects and arrays with stable commas") {
  Writer w;
  w.begin_object();
  w.key("a").value(1);
  w.key("b").begin_array();
  w.value(2.0);
  w.begin_object();
  w.key("c").value("x");
  w.end_object();
  w.end_array();
  w.key("d").value(true);
  w.end_object();
  CHECK(w.str() == R"({"a":1,"b":[2,{"c":"x"}],"d":true})");
}

TEST_CASE("identical reports serialize identically") {
  StudyReport rep;
  rep.ts = {1e-2, 1e-3};
  rep.remainders = {3.2e-5, 3.2e-7};
  rep.slope = 2.0000123;
  rep.reference_scale = 0.77;
  Writer w1, w2;
  jsonio::write_study(w1, rep);
  jsonio::write_study(w2, rep);
  CHECK(w1.str() == w2.str());
  CHECK(jsonio::study_csv(rep) ==
        "t,remainder\n0.01,3.1999999999999999e-05\n0.001,"
        "3.2000000000000001e-07\n");
}

TEST_CASE("regularity report serialization is deterministic") {
  reg::RegularityQuery q;
  q.r = SobolevIndex::integer(2);
  q.q = SobolevIndex::integer(2);
  q.k = SobolevIndex::integer(1);
  q.beta = reg::ProblemKind::Neumann;
  q.mode = reg::ShiftMode::Sharp;
  Writer w1, w2;
  jsonio::write_regularity(w1, reg::full_report(q));
  jsonio::write_regularity(w2, reg::full_report(q));
  CHECK(w1.str() == w2.str());
  CHECK(w1.str().find("\"schema\":1") != std::string::npos);
  CHECK(w1.str().find("\"md\":{\"index\":\"1\"") != std::string::npos);
}
