#include "burgess/report.hpp"

#include <sstream>

#include "doctest.h"

using namespace burgess;

TEST_CASE("fmt_g is deterministic and honors significant digits") {
  CHECK(fmt_g(1.0 / 3.0, 17) == fmt_g(1.0 / 3.0, 17));
  CHECK(fmt_g(1.0 / 3.0, 6) == "0.333333");
  CHECK(fmt_g(46.3814, 6) == "46.3814");
  CHECK(fmt_g(0.0, 17) == "0");
  CHECK(fmt_g(std::numeric_limits<double>::quiet_NaN(), 6) == "nan");
}

TEST_CASE("csv and json escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(json_escape("tab\there") == "tab\\there");
  CHECK(json_escape("q\"q") == "q\\\"q");
}

TEST_CASE("inequality status transitions at the slack boundary") {
  InequalityReport r;
  r.name = "demo";
  r.lhs = 1.0;
  r.rhs = 1.5;
  r.slack = 1e-9;
  CHECK(r.status() == CheckStatus::pass);
  r.lhs = 1.5 + 5e-10;
  CHECK(r.status() == CheckStatus::float_ambiguous);
  CHECK_FALSE(r.holds());
  r.lhs = 1.5 + 1e-8;
  CHECK(r.status() == CheckStatus::fail);
}

TEST_CASE("sweep summary counts and worst tracking") {
  SweepSummary s;
  InequalityReport ok{"a", "x=1", 1.0, 2.0, 0.0};
  InequalityReport amb{"b", "x=2", 2.0 + 1e-10, 2.0, 1e-9};
  InequalityReport bad{"c", "x=3", 3.0, 2.0, 1e-9};
  s.absorb(ok);
  s.absorb(amb);
  s.absorb(bad);
  CHECK(s.checks == 3);
  CHECK(s.failures == 1);
  CHECK(s.ambiguous == 1);
  CHECK(s.min_margin == doctest::Approx(-1.0));
  CHECK(s.worst == "c x=3");
  CHECK_FALSE(s.pass());

  SweepSummary t;
  t.absorb(ok);
  t.merge(s);
  CHECK(t.checks == 4);
  CHECK(t.failures == 1);
}

TEST_CASE("report writers are byte-identical across runs") {
  std::vector<InequalityReport> reports{{"alpha", "x=2", 1.0 / 3.0, 0.5, 1e-9},
                                        {"beta", "y=\"q\"", 2.0, 1.0, 0.0}};
  std::ostringstream a1, a2, b1, b2;
  write_reports_csv(a1, reports);
  write_reports_csv(a2, reports);
  CHECK(a1.str() == a2.str());
  write_reports_json(b1, reports);
  write_reports_json(b2, reports);
  CHECK(b1.str() == b2.str());
  CHECK(a1.str().rfind("name,params,lhs,rhs,margin,holds,status\n", 0) == 0);
  CHECK(b1.str().find("\"lhs\": 0.33333333333333331") != std::string::npos);
}
