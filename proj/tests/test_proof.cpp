#include <doctest.h>

#include <set>

#include "lienil/lie_series.hpp"
#include "lienil/proof.hpp"
#include "support.hpp"

using namespace lienil;
using testing::throws_code;

namespace {

Elem square(const Group &G, Elem x) { return G.mul(x, x); }

} // namespace

TEST_CASE("abelian groups have no witness") {
  for (auto c : {Condition::II, Condition::III, Condition::IV})
    CHECK(throws_code([&] { find_witness_pair(*testing::group("C2xC4"), c); }, Errc::NoWitness));
  CHECK(throws_code([] { find_witness_pair(*testing::group("D4xD4"), Condition::I); },
                    Errc::NoWitness));
  CHECK(find_all_witnesses(*testing::group("C2wrC4"), Condition::IV).empty());
}

TEST_CASE("p=3 witness pattern") {
  for (const char *name : {"C3wrC3", "G81_cl3_C3xC3"}) {
    CAPTURE(name);
    const auto G = testing::group(name);
    const auto series = lower_central_series(*G);
    const auto w = find_witness_pair(*G, Condition::IV);
    CHECK(w.a == group_commutator(*G, w.g, w.h));
    CHECK(w.b == group_commutator(*G, w.a, w.h));
    CHECK(subgroup_generated(*G, std::vector<Elem>{w.a, w.b}) == series[1]);
    CHECK(w.t == group_commutator(*G, w.a, w.g));
    const std::set<Elem> powers_of_b{Group::identity, w.b, square(*G, w.b)};
    CHECK(powers_of_b.count(w.t) == 1);
  }
}

TEST_CASE("p=2 witness pattern") {
  for (const auto &[name, cond] : std::vector<std::pair<const char *, Condition>>{
           {"C2wrC4", Condition::III}, {"G64_cl4_C4xC2", Condition::II}}) {
    CAPTURE(name);
    const auto G = testing::group(name);
    const auto s = lower_central_series(*G);
    const auto w = find_witness_pair(*G, cond);
    CHECK(w.b == group_commutator(*G, w.a, w.h));
    CHECK(w.c == group_commutator(*G, w.b, w.h));
    CHECK(subgroup_generated(*G, std::vector<Elem>{w.a, w.b, w.c}) == s[1]);
    CHECK(subgroup_generated(*G, std::vector<Elem>{w.b, w.c}) == s[2]);
    CHECK(subgroup_generated(*G, std::vector<Elem>{w.c}) == s[3]);
    if (cond == Condition::II)
      CHECK(w.c == square(*G, w.a));
    CHECK(w.relations_hold());
  }
}

TEST_CASE("condition (ii) relations hold for every witness and the cases are exhaustive") {
  const auto G = testing::group("G64_cl4_C4xC2");
  const auto gamma3 = lower_central_series(*G)[2];
  const auto ws = find_all_witnesses(*G, Condition::II);
  REQUIRE_FALSE(ws.empty());
  std::set<CaseTag> tags;
  for (const auto &w : ws) {
    CHECK(w.relations_hold());
    CHECK(w.t == w.z2);
    CHECK(gamma3.contains(w.f));
    const Elem a2 = square(*G, w.a);
    const bool case1 = w.f == w.b || w.f == G->mul(a2, w.b);
    const bool case2 = w.f == Group::identity || w.f == a2;
    CHECK(case1 != case2);
    CHECK(w.case_tag == (case1 ? CaseTag::P2Case1 : CaseTag::P2Case2));
    tags.insert(w.case_tag);
  }
  CHECK(tags.size() == 2);
}

TEST_CASE("eval_form") {
  const auto ctx = testing::algebra("C3wrC3", 3);
  const auto w = find_witness_pair(ctx.group(), Condition::IV);
  const Group &G = ctx.group();
  CHECK(eval_form(ctx, w, "1") == ctx.one());
  CHECK(eval_form(ctx, w, "g3h") == ctx.basis(G.product({w.g, w.g, w.g, w.h})));
  CHECK(eval_form(ctx, w, "hat(a)") == hat(ctx, w.a));
  CHECK(eval_form(ctx, w, "(1+a+a2)") == hat(ctx, w.a));
  CHECK(eval_form(ctx, w, "-(b-1)") == ctx.combination({{1, 0}, {-1, w.b}}));
  CHECK(eval_form(ctx, w, "g * (1 - a2)") ==
        ga_mul(ctx, ctx.basis(w.g), ctx.combination({{1, 0}, {-1, G.mul(w.a, w.a)}})));
  CHECK(throws_code([&] { eval_form(ctx, w, "x2"); }, Errc::ParseError));
  CHECK(throws_code([&] { eval_form(ctx, w, "(1+a"); }, Errc::ParseError));
  CHECK(parse_chain_word(G, w, "[gh,g,g]") == std::vector<Elem>{G.mul(w.g, w.h), w.g, w.g});
}

TEST_CASE("verify_chain_p2 rejects p=3 input") {
  const auto ctx3 = testing::algebra("C3wrC3", 3);
  const auto w3 = find_witness_pair(ctx3.group(), Condition::IV);
  CHECK(throws_code([&] { verify_chain_p2(ctx3, w3); }, Errc::CaseMismatch));
  const auto ctx2 = testing::algebra("C2wrC4", 2);
  const auto w2 = find_witness_pair(ctx2.group(), Condition::III);
  CHECK(throws_code([&] { verify_chain_p3(ctx2, w2); }, Errc::CaseMismatch));
  CHECK(throws_code([&] { verify_chain_p2(testing::algebra("C2wrC4", 3), w2); }, Errc::CaseMismatch));
}

TEST_CASE("condition (iii) chain: final element nonzero in L_7, intermediate forms not checked") {
  const auto ctx = testing::algebra("C2wrC4", 2);
  const auto L = lower_chain_terms(ctx);
  for (const auto &w : find_all_witnesses(ctx.group(), Condition::III)) {
    auto r = verify_chain_p2(ctx, w);
    check_lower_membership(r, L[6]);
    REQUIRE(r.final_nonzero);
    CHECK(r.implied_lower_bound == 8);
    CHECK(r.final_form_matched);
    CHECK(r.in_lower_term == true);
    for (std::size_t i = 0; i + 1 < r.steps.size(); ++i)
      CHECK_FALSE(r.steps[i].matched.has_value());
    CHECK_NOTHROW(certify(r));
  }
}

TEST_CASE("condition (ii) chain: final element is the displayed monomial times hat(a) hat(b)") {
  const auto ctx = testing::algebra("G64_cl4_C4xC2", 2);
  const auto L = lower_chain_terms(ctx);
  std::set<CaseTag> seen;
  for (const auto &w : find_all_witnesses(ctx.group(), Condition::II)) {
    if (!seen.insert(w.case_tag).second)
      continue;
    auto r = verify_chain_p2(ctx, w);
    check_lower_membership(r, L[6]);
    CHECK(r.final_nonzero);
    CHECK(r.implied_lower_bound == 8);
    CHECK(r.steps.back().matched == true);
    CHECK(r.final_form_matched);
    CHECK(r.in_lower_term == true);
    const char *eta = w.case_tag == CaseTag::P2Case1 ? "h2ghg2h2*hat(a)*hat(b)"
                                                     : "h2g2hg2hgh*hat(a)*hat(b)";
    CHECK(r.steps.back().value == eval_form(ctx, w, eta));
    CHECK_NOTHROW(certify(r));
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("final nonvanishing does not depend on the witness for p=2") {
  for (const auto &[name, cond] : std::vector<std::pair<const char *, Condition>>{
           {"C2wrC4", Condition::III}, {"G64_cl4_C4xC2", Condition::II}}) {
    CAPTURE(name);
    const auto ctx = testing::algebra(name, 2);
    std::set<bool> nonzero;
    for (const auto &w : find_all_witnesses(ctx.group(), cond))
      nonzero.insert(verify_chain_p2(ctx, w).final_nonzero);
    CHECK(nonzero == std::set<bool>{true});
  }
}

TEST_CASE("p=3 chain for t = b reproduces every display") {
  for (const char *name : {"C3wrC3", "G81_cl3_C3xC3"}) {
    CAPTURE(name);
    const auto ctx = testing::algebra(name, 3);
    const auto ws = find_all_witnesses(ctx.group(), Condition::IV);
    const auto it = std::find_if(ws.begin(), ws.end(),
                                 [](const WitnessProfile &w) { return w.case_tag == CaseTag::P3Tb; });
    REQUIRE(it != ws.end());
    auto r = verify_chain_p3(ctx, *it);
    check_lower_membership(r, lower_chain_terms(ctx)[6]);
    for (const auto &s : r.steps) {
      CAPTURE(s.word);
      CHECK(s.matched == true);
    }
    CHECK(r.final_nonzero);
    CHECK(r.implied_lower_bound == 8);
    CHECK(r.in_lower_term == true);
    CHECK_NOTHROW(certify(r));
  }
}

TEST_CASE("p=3 chain for t = 1 opens with the displayed forms") {
  const auto ctx = testing::algebra("C3wrC3", 3);
  const auto w = find_witness_pair(ctx.group(), Condition::IV);
  REQUIRE(w.case_tag == CaseTag::P3T1);
  const auto r = verify_chain_p3(ctx, w);
  REQUIRE(r.steps.size() >= 2);
  CHECK(r.steps[0].word == "[gh,g,g]");
  CHECK(r.steps[0].matched == true);
  CHECK(r.steps[0].value == eval_form(ctx, w, "g3h*hat(a)"));
  CHECK(r.steps[1].matched == true);
}

TEST_CASE("certify reports both sides") {
  const auto ctx = testing::algebra("C3wrC3", 3);
  const auto w = find_witness_pair(ctx.group(), Condition::IV);
  auto r = verify_chain_p3(ctx, w);
  r.final_nonzero = true;
  r.final_form_matched = true;
  r.steps.back().matched = true;
  r.steps[0].matched = false;
  r.steps[0].actual = "computed";
  try {
    certify(r);
    FAIL("expected a mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::StepMismatch);
    const std::string msg = e.what();
    CHECK(msg.find("computed") != std::string::npos);
    CHECK(msg.find(r.steps[0].expected) != std::string::npos);
  }
  r.final_nonzero = false;
  CHECK(throws_code([&] { certify(r); }, Errc::ChainVanished));
}

TEST_CASE("case tags have stable names") {
  CHECK(to_string(CaseTag::P2Case1) == "p2-case1");
  CHECK(to_string(CaseTag::P3Tb2) == "p3-tb2");
}
