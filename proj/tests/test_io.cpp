#include <gtest/gtest.h>

#include <sstream>

#include "cct/families.hpp"
#include "cct/io.hpp"
#include "cct/variants.hpp"

using namespace cct;

namespace {

json wrap(const json& complex) {
  json doc = document("cct", complex.at("width").get<int>(), "exact");
  doc["complex"] = complex;
  return doc;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Json, FieldElementRoundTrip) {
  FieldElement x(Rational(3, 7), Rational(-1, 2), Rational(0), Rational(5));
  json j = to_json(x);
  EXPECT_EQ(j.at("a"), "3/7");
  EXPECT_EQ(j.at("b"), "-1/2");
  EXPECT_EQ(j.at("c"), "0");
  EXPECT_EQ(field_from_json(j), x);
  EXPECT_EQ(field_from_json(json::parse(j.dump())), x);
}

TEST(Json, FieldElementSchemaErrors) {
  for (const char* bad : {R"("1/2")", R"({"a":"1","b":"0","c":"0"})", R"({"a":"x","b":"0","c":"0","d":"0"})",
                          R"({"a":1,"b":"0","c":"0","d":"0"})"}) {
    try {
      field_from_json(json::parse(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Schema) << bad;
    }
  }
}

TEST(Json, ExactComplexRoundTrip) {
  auto t = cts(4);
  json doc = wrap(complex_to_json(t));
  EXPECT_NO_THROW(require_schema(doc));
  auto back = exact_complex_from_json(json::parse(doc.dump()));
  EXPECT_EQ(back.width, t.width);
  EXPECT_EQ(back.ambient, t.ambient);
  EXPECT_EQ(back.seeds, t.seeds);
  EXPECT_EQ(back.vertices(), t.vertices());
}

TEST(Json, ControlComplexKeepsAmbient) {
  auto c = control_cct(cts(2));
  auto back = exact_complex_from_json(wrap(complex_to_json(c)));
  EXPECT_EQ(back.ambient, Ambient::S3eq);
  EXPECT_EQ(back.seeds, c.seeds);
}

TEST(Json, FloatComplexRoundTrip) {
  auto r = build_inscribed(3, 256);
  json doc = wrap(complex_to_json(r.complex));
  auto back = float_complex_from_json(json::parse(doc.dump()), 256);
  ASSERT_EQ(back.seeds.size(), r.complex.seeds.size());
  BigFloat tol = pow(BigFloat(2L, 256), Rational(-200));
  for (std::size_t l = 0; l < back.seeds.size(); ++l)
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(abs(back.seeds[l][i] - r.complex.seeds[l][i]) < tol) << l << "," << i;
}

TEST(Json, SchemaErrors) {
  json doc = wrap(complex_to_json(cts(2)));
  json wrong = doc;
  wrong["schema"] = "cct/0";
  EXPECT_THROW(require_schema(wrong), Error);
  EXPECT_THROW(require_schema(json::array()), Error);

  json missing = doc;
  missing["complex"].erase("seeds");
  try {
    exact_complex_from_json(missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Schema);
  }

  json short_seeds = doc;
  short_seeds["complex"]["seeds"].erase(2);
  EXPECT_THROW(exact_complex_from_json(short_seeds), Error);

  json ambient = doc;
  ambient["complex"]["ambient"] = "S7";
  EXPECT_THROW(exact_complex_from_json(ambient), Error);
}

// Reloading re-expands the orbits, so a seed off the mirror is caught.
TEST(Json, LoadRechecksSymmetry) {
  json doc = wrap(complex_to_json(cts(2)));
  doc["complex"]["seeds"][1] = vec_to_json(Point{1, 1, 0, 0, 1});
  EXPECT_THROW(exact_complex_from_json(doc), Error);
}

TEST(Csv, ExactTable) {
  auto l = lines(csv_table(cts(4)));
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[0], "vertex,first,second,third,lambda");
  EXPECT_EQ(l[1], "kappa_0,-1+√2,1-√2,2,1.8420e+00");
  EXPECT_EQ(l[3], "kappa_2,(11-7√2)/23,(9+11√2)/23,(16-6√2)/23,1.7094e-01");
}

TEST(Csv, RationalTable) {
  auto l = lines(csv_table(extend_to(rational1(), 3)));
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[2].substr(0, l[2].rfind(',')), "kappa_1,-1,0,3/5");
  EXPECT_EQ(l[4].substr(0, l[4].rfind(',')), "kappa_3,179/165,-7/165,4/275");
}

TEST(Csv, FloatTable) {
  auto l = lines(csv_table(build_inscribed(2, 256).complex));
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "vertex,first,second,third,lambda,norm");
  EXPECT_EQ(l[2].substr(0, 40), "kappa_1,-1.1000000,-1.0226363,0.1468968,");
}

TEST(Csv, RejectsEntriesOutsideQSqrt2) {
  auto c = build_symmetric<FieldElement>({Point{FieldElement::sqrt3(), 0, 1, 0, 1}}, Ambient::S4);
  EXPECT_THROW(csv_table(c), Error);
}

TEST(Off, HeaderAndCounts) {
  auto t = cts(3);
  auto l = lines(off_file(t));
  ASSERT_GE(l.size(), 2u);
  EXPECT_EQ(l[0], "4OFF");
  EXPECT_EQ(l[1], "48 72 0");
  EXPECT_EQ(l.size(), 2u + 48 + 72);
  EXPECT_EQ(l.back().substr(0, 2), "4 ");
  EXPECT_THROW(off_file(control_cct(t)), Error);
}
