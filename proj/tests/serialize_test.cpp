#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "divpoly/error.hpp"
#include "divpoly/parse.hpp"
#include "divpoly/serialize.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace divpoly;
using namespace divpoly::testing;

namespace {

const AlgebraPtr H = quaternion_algebra();

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::DimensionOne;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("divpoly_serialize_" + name)).string();
}

}  // namespace

TEST(Serialize, Rationals) {
  EXPECT_EQ(rational_to_json(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_EQ(kind_of([] { rational_from_json(Json(0.5)); }), ErrorKind::InvalidFormat);
}

TEST(Serialize, AlgebraRoundTrip) {
  Json j = algebra_to_json(*H);
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["constants"][1][2][3], "1");  // i j = k
  auto back = algebra_from_json(j);
  EXPECT_TRUE(back->same_algebra(*H));
  EXPECT_TRUE(back->is_quaternion());
  EXPECT_EQ(back->labels(), H->labels());

  j.erase("labels");
  EXPECT_EQ(algebra_from_json(j)->labels(), (std::vector<std::string>{"e1", "e2", "e3", "e4"}));
  EXPECT_EQ(load_algebra("quaternion"), H);
  EXPECT_EQ(load_algebra(""), H);
}

TEST(Serialize, AlgebraErrors) {
  Json j = algebra_to_json(*H);
  j["constants"][0][0][0] = "0";
  EXPECT_EQ(kind_of([&] { algebra_from_json(j); }), ErrorKind::UnitMissing);
  EXPECT_EQ(kind_of([] { algebra_from_json(Json{{"m", 1}, {"constants", {{{"1"}}}}}); }), ErrorKind::DimensionOne);
  EXPECT_EQ(kind_of([] { algebra_from_json(Json{{"m", 2}}); }), ErrorKind::InvalidFormat);
  EXPECT_EQ(kind_of([] { algebra_from_json(Json{{"m", 2}, {"constants", {{{"1"}}}}}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { load_algebra("/nonexistent/algebra.json"); }), ErrorKind::InvalidFormat);
}

TEST(Serialize, FreePolyRoundTrip) {
  Rng rng(70);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_freepoly(rng, H, 2, 3, 4);
    EXPECT_EQ(freepoly_from_json(freepoly_to_json(p), H, 2), p);
  }
  Json one_term = Json::parse(R"([{"coef": "2/3", "basis": [2, 1], "vars": [1]}])");
  EXPECT_EQ(freepoly_from_json(one_term, H, 1), parse("2/3*i*x1", H, 1));
  Json bad_basis = Json::parse(R"([{"coef": "1", "basis": [5], "vars": []}])");
  EXPECT_EQ(kind_of([&] { freepoly_from_json(bad_basis, H, 1); }), ErrorKind::InvalidFormat);
  Json bad_shape = Json::parse(R"([{"coef": "1", "basis": [1], "vars": [1]}])");
  EXPECT_EQ(kind_of([&] { freepoly_from_json(bad_shape, H, 1); }), ErrorKind::InvalidFormat);
  Json bad_var = Json::parse(R"([{"coef": "1", "basis": [1, 1], "vars": [2]}])");
  EXPECT_EQ(kind_of([&] { freepoly_from_json(bad_var, H, 1); }), ErrorKind::InvalidFormat);
}

TEST(Serialize, ScalarAndCentral) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_scalarpoly(rng, 8, 3, 4);
    EXPECT_EQ(scalarpoly_from_json(scalarpoly_to_json(s), 8), s);
  }
  Json c = centralpoly_to_json(parse_central("i*y1_2^2 + 3", H, 1));
  EXPECT_EQ(c.dump(), R"([{"coef":["0","1","0","0"],"exp":[0,2,0,0]},{"coef":["3","0","0","0"],"exp":[0,0,0,0]}])");
}

TEST(Serialize, CertificateRoundTrip) {
  auto gens = gpi_generators(H, 1);
  Rng rng(72);
  FreePoly p = random_kernel_element(rng, gens, 2, 1);
  GpiCertificate c = gpi_certificate(p, gens);
  Json j = certificate_to_json(c);
  EXPECT_EQ(j["n"], 1);
  for (const auto& s : j["steps"]) EXPECT_GE(s["gen"].get<int>(), 13);  // sort family, 1-based
  GpiCertificate back = certificate_from_json(j, H);
  EXPECT_EQ(back.target, c.target);
  EXPECT_EQ(back.steps.size(), c.steps.size());
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(certificate_to_json(back).dump(), j.dump());
  j["steps"][0]["gen"] = 0;
  EXPECT_EQ(kind_of([&] { certificate_from_json(j, H); }), ErrorKind::InvalidFormat);
}

TEST(Serialize, IdealRoundTripAndValidation) {
  IdealHandle ideal = make_ideal(H, 1, {parse("x1 - i", H, 1)});
  Json j = ideal_to_json(ideal);
  EXPECT_EQ(j["groebner"].size(), 4u);
  IdealHandle back = ideal_from_json(j, H);
  EXPECT_EQ(back.gb, ideal.gb);
  EXPECT_EQ(back.scalar_generators, ideal.scalar_generators);

  Json tampered = j;
  tampered["groebner"].erase(0);
  EXPECT_EQ(kind_of([&] { ideal_from_json(tampered, H); }), ErrorKind::InvalidFormat);
  tampered = j;
  tampered["scalar_generators"][0][0]["coef"] = "2";
  EXPECT_EQ(kind_of([&] { ideal_from_json(tampered, H); }), ErrorKind::InvalidFormat);
  Json bare = j;
  bare.erase("groebner");
  bare.erase("scalar_generators");
  EXPECT_EQ(ideal_from_json(bare, H).gb, ideal.gb);
}

TEST(Serialize, RadicalCertificate) {
  RadicalCertificate c{parse("x1 - i", H, 1), 2, {parse("x1", H, 1)}};
  Json j = radical_certificate_to_json(c);
  auto back = radical_certificate_from_json(j, H, 1);
  EXPECT_EQ(back.f, c.f);
  EXPECT_EQ(back.m, 2u);
  EXPECT_EQ(back.witnesses, c.witnesses);
  j["m"] = 0;
  EXPECT_EQ(kind_of([&] { radical_certificate_from_json(j, H, 1); }), ErrorKind::BadExponent);
  j.erase("witnesses");
  j["m"] = 1;
  EXPECT_TRUE(radical_certificate_from_json(j, H, 1).witnesses.empty());
}

TEST(Serialize, Points) {
  Json j = Json::parse(R"([[["0","1","0","0"]], [[1, 0, "1/2", 0]]])");
  auto pts = points_from_json(j, *H, 1);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].coords[0], H->basis(1));
  EXPECT_EQ(pts[1].coords[0], (AlgebraElement{{1, 0, Rational(1, 2), 0}}));
  EXPECT_EQ(point_to_json(pts[1]).dump(), R"([["1","0","1/2","0"]])");
  EXPECT_EQ(kind_of([&] { points_from_json(j, *H, 2); }), ErrorKind::InvalidFormat);
  EXPECT_EQ(kind_of([] { points_from_json(Json::parse("[[[1,2]]]"), *H, 1); }), ErrorKind::InvalidFormat);
}

TEST(Serialize, Files) {
  const auto path = temp_file("ideal.json");
  IdealHandle ideal = make_ideal(H, 1, {parse("x1^2 + 1", H, 1)});
  write_json_file(path, ideal_to_json(ideal));
  EXPECT_EQ(ideal_from_json(read_json_file(path), H).gb, ideal.gb);
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(kind_of([&] { read_json_file(path); }), ErrorKind::InvalidFormat);
  std::filesystem::remove(path);
}
