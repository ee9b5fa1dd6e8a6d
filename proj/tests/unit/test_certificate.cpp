#include <gtest/gtest.h>

#include "ncfactor/errors.hpp"
#include "ncfactor/factorizer.hpp"
#include "ncfactor/parser.hpp"
#include "test_support.hpp"

using namespace ncfactor;
using ncfactor::testing::P;

namespace {

FactorizationCertificate quintic_certificate() { return factor(P("x*y*x*y*x - 4*x*y*x + 3*x")); }

bool mentions(const VerifyReport& r, const std::string& needle) {
  for (const auto& p : r.problems)
    if (p.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Certificate, JsonRoundTrip) {
  const auto c = quintic_certificate();
  const auto j = certificate_to_json(c);
  EXPECT_EQ(j["input"], "3*x - 4*x*y*x + x*y*x*y*x");
  EXPECT_EQ(j["atoms"].size(), 3U);
  EXPECT_EQ(j["atoms"][0]["status"], "atom");
  EXPECT_TRUE(j["product_check"].get<bool>());
  EXPECT_EQ(j["nodes"][0]["path"], "r");
  EXPECT_EQ(j["nodes"][0]["ideals"][0]["status"], "rational-point");
  EXPECT_EQ(j["nodes"][0]["ideals"][0]["basis"].size(), j["nodes"][0]["ideals"][0]["basis_size"].get<std::size_t>());

  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.input, c.input);
  ASSERT_EQ(back.atoms.size(), c.atoms.size());
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    EXPECT_EQ(back.atoms[i].poly, c.atoms[i].poly);
    EXPECT_EQ(back.atoms[i].als, c.atoms[i].als);
    EXPECT_EQ(back.atoms[i].status, c.atoms[i].status);
  }
  EXPECT_EQ(certificate_to_json(back).dump(), j.dump());
}

TEST(Certificate, VerifiesGenuineCertificates) {
  for (const char* text : {"x*y*x*y*x - 4*x*y*x + 3*x", "x^2 - 2", "x*y - 2", "x^3 - 10*x^2 + 31*x - 30", "5"}) {
    const auto r = verify_certificate(factor(P(text)));
    EXPECT_TRUE(r.ok) << text << ": " << (r.problems.empty() ? "" : r.problems.front());
  }
}

TEST(Certificate, TamperedCoefficientFails) {
  auto j = certificate_to_json(quintic_certificate());
  const std::string orig = j["atoms"][1]["poly"].get<std::string>();
  const NcPolynomial changed = P(orig) + P("y*x");
  j["atoms"][1]["poly"] = print_poly(changed);
  const auto r = verify_certificate(certificate_from_json(nlohmann::json::parse(j.dump())));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "differs from input by")) << r.problems.front();
}

TEST(Certificate, TamperedSystemFails) {
  auto c = quintic_certificate();
  Als a = c.atoms[2].als.als();
  a.v().back() += 1;
  c.atoms[2].als = PreStandardAls(a);
  const auto r = verify_certificate(c);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "system solves to"));
}

TEST(Certificate, EmptyAtomListOnNonConstantInputFails) {
  auto c = quintic_certificate();
  c.atoms.clear();
  const auto r = verify_certificate(c);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "empty atom list"));
}

TEST(Certificate, ReducibleAtomFails) {
  // Claim x - x*y*x is a single atom.
  auto c = factor(P("x - x*y*x"));
  FactorizationCertificate fake{c.input, 1, {{c.input, als_from_poly(c.input), AtomStatus::Atom}}, true, {}, 0};
  const auto r = verify_certificate(fake);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "re-check gives reducible"));
}

TEST(Certificate, WrongClosureFlagFails) {
  auto c = factor(P("x^2 - 2"));
  c.atoms[0].status = AtomStatus::Atom;
  EXPECT_FALSE(verify_certificate(c).ok);
}

TEST(Certificate, MalformedDocuments) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse("{}")), InvalidAls);
  auto j = certificate_to_json(quintic_certificate());
  j["atoms"][0]["status"] = "maybe";
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(j.dump())), InvalidAls);
  j = certificate_to_json(quintic_certificate());
  j["input"] = "x + (";
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(j.dump())), ParseError);
}
