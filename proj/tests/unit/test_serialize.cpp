#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "tubelift/elliptic.hpp"
#include "tubelift/jacobi.hpp"
#include "tubelift/lift.hpp"
#include "tubelift/serialize.hpp"

using namespace tubelift;
using nlohmann::json;

TEST(Serialize, QSeriesRoundTrip) {
  const auto f = elliptic::eigenform(22, 30);
  std::stringstream ss;
  io::write_qseries(ss, f.series());
  EXPECT_EQ(io::read_qseries(ss), f.series());
}

TEST(Serialize, ExpansionRoundTrip) {
  const auto e = siegel::eisenstein_expand(9, 8, siegel::EisensteinNormalization::kLValue);
  std::stringstream ss;
  io::write_expansion(ss, e);
  EXPECT_EQ(ss.str().rfind("# tubelift expansion v1\n", 0), 0u);
  EXPECT_EQ(io::read_expansion(ss), e);
}

TEST(Serialize, ComponentRoundTrip) {
  const auto e = siegel::eisenstein_expand(11, 10, siegel::EisensteinNormalization::kLValue);
  const auto c = jacobi::fj_component(e, jacobi::JacobiIndex(1), Rational(1, 2));
  std::stringstream ss;
  io::write_component(ss, c);
  const auto back = io::read_component(ss);
  EXPECT_EQ(back.xi, c.xi);
  EXPECT_EQ(back.weight, c.weight);
  EXPECT_EQ(back.offset_denominator, c.offset_denominator);
  EXPECT_EQ(back.max_numerator_exponent, c.max_numerator_exponent);
  EXPECT_EQ(back.coefficients, c.coefficients);
}

TEST(Serialize, StructuredFormatIsVersionedJson) {
  const auto f = elliptic::eigenform(18, 20);
  std::stringstream ss;
  io::write_qseries(ss, f.series(), io::Format::kStructured);
  const auto j = json::parse(ss.str());
  EXPECT_EQ(j["format"], "tubelift-qseries");
  EXPECT_EQ(j["version"], io::kFormatVersion);
  EXPECT_EQ(j["coefficients"].size(), 21u);

  const auto lifted = lift::lift_expand(elliptic::eigenform(18, 40), 4);
  std::stringstream pv;
  io::write_provenance(pv, lifted, io::Format::kStructured);
  const auto jp = json::parse(pv.str());
  EXPECT_EQ(jp["format"], "tubelift-provenance");
  EXPECT_EQ(jp["indices"].size(), lifted.provenance.size());
}

TEST(Serialize, ReportStatus) {
  io::Report r{"demo", {{"a", true, {{"x", "1"}}}, {"b", false, {}}}};
  EXPECT_FALSE(r.all_passed());
  std::stringstream ss;
  io::write_report(ss, r);
  EXPECT_NE(ss.str().find("status=FAIL"), std::string::npos);
  std::stringstream js;
  io::write_report(js, r, io::Format::kStructured);
  EXPECT_EQ(json::parse(js.str())["checks"][1]["status"], "FAIL");
}

TEST(Serialize, RejectsWrongHeader) {
  std::stringstream ss("# tubelift expansion v1\n");
  EXPECT_ANY_THROW(io::read_qseries(ss));
  EXPECT_THROW(io::parse_format("xml"), std::invalid_argument);
  EXPECT_EQ(io::parse_format("json"), io::Format::kStructured);
  EXPECT_EQ(io::parse_format("table-text"), io::Format::kText);
}
