#include <gtest/gtest.h>

#include "divpoly/error.hpp"
#include "divpoly/nullstellensatz.hpp"
#include "divpoly/transport.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace divpoly;
using namespace divpoly::testing;

namespace {

const AlgebraPtr H = quaternion_algebra();

FreePoly x(std::size_t i, std::size_t n = 1) { return FreePoly::variable(H, n, i); }
FreePoly u(std::size_t s, std::size_t n = 1) { return FreePoly::constant(H, n, H->basis(s)); }
CentralPoly y(std::size_t i, std::size_t j, std::size_t n = 1) { return CentralPoly::variable(H, n, i, j); }
CentralPoly cu(std::size_t s, std::size_t n = 1) { return CentralPoly::constant(H, n, H->basis(s)); }

const std::array<Mat2, 4> kUnitFirst = {Mat2{1, 0, 0, 1}, Mat2{0, 1, 0, 0}, Mat2{0, 0, 1, 0}, Mat2{1, 0, 0, -1}};

std::vector<AlgebraPtr> ambients() {
  return {H, make_algebra(4, generalized_quaternion_constants(-1, -3), {}),
          make_algebra(4, mat2_structure_constants(kUnitFirst), {})};
}

std::vector<Rational> flatten(const Point& a) {
  std::vector<Rational> out;
  for (const auto& c : a.coords) out.insert(out.end(), c.coords.begin(), c.coords.end());
  return out;
}

}  // namespace

TEST(Transport, YFixtures) {
  auto table = coordinate_functionals(*H);
  const Rational q(1, 4);
  EXPECT_EQ(make_Y(H, table, 1, 0, 0), q * (x(0) - u(1) * x(0) * u(1) - u(2) * x(0) * u(2) - u(3) * x(0) * u(3)));
  EXPECT_EQ(make_Y(H, table, 1, 0, 3), q * (u(1) * x(0) * u(2) - x(0) * u(3) - u(3) * x(0) - u(2) * x(0) * u(1)));
  AlgebraElement a{{3, 5, 0, -2}};
  EXPECT_EQ(fp_eval(make_Y(H, table, 1, 0, 1), Point{{a}}), H->scalar(5));
  try {
    make_Y(H, table, 1, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
  EXPECT_THROW(make_Y(H, table, 1, 0, 4), Error);
}

TEST(Transport, YExtractsCoordinates) {
  Rng rng(40);
  for (const auto& spec : ambients()) {
    auto table = coordinate_functionals(*spec);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_point(rng, *spec, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < spec->dim(); ++j)
          EXPECT_EQ(fp_eval(make_Y(spec, table, 2, i, j), a), spec->scalar(a.coords[i].coords[j]));
    }
  }
}

TEST(Transport, PhiFixtures) {
  EXPECT_EQ(phi(x(0)), y(0, 0) + cu(1) * y(0, 1) + cu(2) * y(0, 2) + cu(3) * y(0, 3));
  // (y1 + i y2 + j y3 + k y4) i - i (...) = y3 (ji - ij) + y4 (ki - ik) = -2k y3 + 2j y4
  EXPECT_EQ(phi(x(0) * u(1) - u(1) * x(0)), Rational(-2) * (cu(3) * y(0, 2)) + Rational(2) * (cu(2) * y(0, 3)));
  auto gens = gpi_generators(H, 1);
  EXPECT_TRUE(phi(gens[18]).is_zero());
  EXPECT_TRUE(phi(FreePoly(H, 1)).is_zero());
}

TEST(Transport, PsiFixtures) {
  auto table = coordinate_functionals(*H);
  EXPECT_EQ(psi(y(0, 0)), make_Y(H, table, 1, 0, 0));
  EXPECT_EQ(psi(cu(1) * y(0, 1) + cu(2)), u(1) * make_Y(H, table, 1, 0, 1) + u(2));
}

TEST(Transport, PhiIsAHomomorphism) {
  Rng rng(41);
  for (const auto& spec : ambients())
    for (int trial = 0; trial < 100; ++trial) {
      auto p = random_freepoly(rng, spec, 2, 2, 3), q = random_freepoly(rng, spec, 2, 2, 3);
      EXPECT_EQ(phi(p * q), phi(p) * phi(q));
      EXPECT_EQ(phi(p + q), phi(p) + phi(q));
    }
}

TEST(Transport, SubstitutionFormula) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(rng, 1, 2);
    auto f = random_freepoly(rng, H, n, 3, 4);
    auto a = random_point(rng, *H, n);
    std::vector<Quat> qa;
    for (const auto& c : a.coords) qa.push_back(to_quat(c));
    EXPECT_EQ(rho(a, *H), flatten(a));
    EXPECT_EQ(to_quat(eval_central_direct(phi(f), rho(a, *H))), eval_hamilton(f, qa));
  }
  for (const auto& spec : ambients())
    for (int trial = 0; trial < 50; ++trial) {
      auto f = random_freepoly(rng, spec, 2, 3, 4);
      auto a = random_point(rng, *spec, 2);
      EXPECT_EQ(fp_eval(f, a), cp_eval(phi(f), flatten(a)));
    }
}

TEST(Transport, InverseLaws) {
  Rng rng(43);
  for (const auto& spec : ambients()) {
    for (int trial = 0; trial < 100; ++trial) {
      auto q = random_centralpoly(rng, spec, 2, 3, 3);
      EXPECT_EQ(phi(psi(q)), q);
    }
    for (int trial = 0; trial < 60; ++trial) {
      auto p = random_freepoly(rng, spec, 2, 3, 3);
      EXPECT_EQ(phi(psi(phi(p))), phi(p));
      EXPECT_TRUE(is_identity(p - psi(phi(p))));
    }
  }
}

TEST(Transport, IsIdentityFixtures) {
  auto table = coordinate_functionals(*H);
  std::vector<FreePoly> ys;
  for (std::size_t j = 0; j < 4; ++j) ys.push_back(make_Y(H, table, 1, 0, j));
  EXPECT_TRUE(is_identity(x(0) - (ys[0] + u(1) * ys[1] + u(2) * ys[2] + u(3) * ys[3])));
  EXPECT_TRUE(is_identity(ys[0] * ys[1] - ys[1] * ys[0]));
  FreePoly p = x(0) * u(1) - u(1) * x(0);
  EXPECT_FALSE(is_identity(p));
  EXPECT_NE(fp_eval(p, Point{{H->basis(2)}}), H->zero());
}

TEST(Transport, NormIsCentral) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_freepoly(rng, H, 2, 2, 3);
    auto g = components(phi(p));
    ScalarPoly sum(8);
    for (const auto& gt : g) sum += gt * gt;
    auto parts = components(phi(fp_norm(p)));
    EXPECT_EQ(parts[0], sum);
    for (std::size_t t = 1; t < 4; ++t) EXPECT_TRUE(parts[t].is_zero());
  }
  // x1 x1bar -> y11^2 + y12^2 + y13^2 + y14^2
  ScalarPoly expected(4);
  for (std::size_t j = 0; j < 4; ++j) expected += ScalarPoly::variable(4, j) * ScalarPoly::variable(4, j);
  EXPECT_EQ(phi(fp_norm(x(0))), CentralPoly::from_scalar(H, 1, expected));
}

TEST(Transport, GeneratorCounts) {
  auto one = gpi_generators(H, 1);
  EXPECT_EQ(one.size(), 19u);
  auto two = gpi_generators(H, 2);
  EXPECT_EQ(two.size(), 2u * 4 * 3 + 28 + 2);
  for (const auto* set : {&one, &two})
    for (std::size_t k = 0; k < set->size(); ++k) EXPECT_TRUE(is_identity((*set)[k])) << set->generators[k].label;
  auto m2 = make_algebra(4, mat2_structure_constants(kUnitFirst), {});
  EXPECT_EQ(gpi_generators(m2, 3).size(), 3u * 12 + 66 + 3);
  try {
    gpi_generators(H, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Transport, GeneratorLayout) {
  auto gens = gpi_generators(H, 2);
  for (std::size_t k = 0; k < 24; ++k) EXPECT_EQ(gens.generators[k].family, GpiFamily::Commute);
  for (std::size_t k = 24; k < 52; ++k) EXPECT_EQ(gens.generators[k].family, GpiFamily::Sort);
  for (std::size_t k = 52; k < 54; ++k) EXPECT_EQ(gens.generators[k].family, GpiFamily::Substitute);
  std::size_t k = 24;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) {
      EXPECT_EQ(gens.sort_index(a, b), k);
      EXPECT_EQ(gens.generators[k].indices, (std::vector<std::size_t>{a, b}));
      ++k;
    }
  EXPECT_THROW(gens.sort_index(3, 3), Error);
  EXPECT_EQ(gens.generators[0].label, "i*Y1_1 - Y1_1*i");
  EXPECT_EQ(gens.generators[53].label, "x2 - (Y2_1*1 + Y2_2*i + Y2_3*j + Y2_4*k)");
}

TEST(Transport, CommuteAndSubstituteGeneratorsVanishInTheFreeProduct) {
  // The degree-one part of the free product is D (x) D, which already
  // identifies these elements with zero.
  for (const auto& spec : ambients()) {
    auto gens = gpi_generators(spec, 2);
    for (const auto& g : gens.generators) {
      if (g.family == GpiFamily::Sort)
        EXPECT_FALSE(g.element.is_zero());
      else
        EXPECT_TRUE(g.element.is_zero()) << g.label;
    }
  }
}

TEST(Transport, CertificateFixtures) {
  auto gens = gpi_generators(H, 1);
  // Substitute generator: zero target, so the empty certificate and the
  // single step (1, g, 1) both verify.
  GpiCertificate c3 = gpi_certificate(gens[18]);
  EXPECT_TRUE(verify_certificate(c3));
  GpiCertificate single{gens[18], {{FreePoly::scalar(H, 1, 1), 18, FreePoly::scalar(H, 1, 1)}}};
  EXPECT_TRUE(verify_certificate(single));

  // i g j for a sort generator
  FreePoly p = u(1) * gens[12] * u(2);
  GpiCertificate c = gpi_certificate(p);
  EXPECT_FALSE(c.steps.empty());
  EXPECT_TRUE(verify_certificate(c));
  for (const auto& s : c.steps) EXPECT_EQ(gens.generators[s.generator].family, GpiFamily::Sort);

  EXPECT_TRUE(verify_certificate(GpiCertificate{FreePoly(H, 1), {}}));
  EXPECT_FALSE(verify_certificate(GpiCertificate{x(0), {}}));
  EXPECT_FALSE(verify_certificate(GpiCertificate{FreePoly(H, 1), {{x(0), 99, x(0)}}}));
}

TEST(Transport, CertificateRejectsNonIdentity) {
  try {
    gpi_certificate(x(0) * u(1) - u(1) * x(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnIdentity);
  }
  EXPECT_THROW(gpi_certificate(FreePoly::scalar(H, 0, 1)), Error);
  EXPECT_TRUE(verify_certificate(gpi_certificate(FreePoly(H, 0))));
}

TEST(Transport, CertificatesForRandomKernelElements) {
  Rng rng(45);
  for (const auto& spec : ambients())
    for (std::size_t n : {1, 2}) {
      auto gens = gpi_generators(spec, n);
      for (int trial = 0; trial < 8; ++trial) {
        FreePoly p = random_kernel_element(rng, gens, uniform(rng, 1, 3), 2);
        ASSERT_TRUE(is_identity(p));
        GpiCertificate c = gpi_certificate(p, gens);
        EXPECT_TRUE(verify_certificate(c, gens));
        if (c.steps.empty()) continue;
        c.steps[0].left += FreePoly::scalar(spec, n, 1);
        EXPECT_FALSE(verify_certificate(c, gens));
      }
    }
}
