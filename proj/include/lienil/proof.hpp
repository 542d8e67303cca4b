#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/algebra.hpp"
#include "lienil/classify.hpp"
#include "lienil/echelon.hpp"
#include "lienil/group.hpp"

namespace lienil {

enum class CaseTag { P2Case1, P2Case2, P3T1, P3Tb, P3Tb2 };

std::string_view to_string(CaseTag c);

/// A pair (g, h) realizing the commutator pattern of a classified group,
/// with the derived elements the chains are expressed in.
///
/// p = 2: a = (g,h), b = (a,h), c = (b,h), f = (a,g), t = (b,g),
/// z1 = (f,g), z2 = (f,h); gamma_2 = <a,b,c>, gamma_3 = <b,c>, gamma_4 = <c>,
/// and c = a^2 when gamma_2 is C4 x C2.
/// p = 3: a = (g,h), b = (a,h), t = (a,g) in <b>; gamma_2 = <a,b>.
struct WitnessProfile {
  Condition condition = Condition::None;
  Elem g = 0, h = 0;
  Elem a = 0, b = 0, c = 0;
  Elem f = 0, t = 0, z1 = 0, z2 = 0;
  CaseTag case_tag = CaseTag::P2Case1;
  /// Commutator relations checked at discovery time.
  std::vector<Check> relations;

  bool relations_hold() const;
};

/// Every witness of the pattern for `condition`, in (g, h) element order.
/// Empty when G does not satisfy the condition.
std::vector<WitnessProfile> find_all_witnesses(const Group &G, Condition condition);

/// First witness in (g, h) element order. Throws Errc::NoWitness.
WitnessProfile find_witness_pair(const Group &G, Condition condition);

struct ChainStep {
  std::string word;     // e.g. "[h,gh,g]"
  AlgebraElement value; // left-normed bracket of the word
  std::string expected; // displayed closed form; alternatives joined by " | "
  std::optional<bool> matched; // nullopt: not checked
  std::string actual;   // value rendered against the displayed monomial
};

struct ChainReport {
  CaseTag case_tag = CaseTag::P2Case1;
  std::string final_word;
  std::vector<ChainStep> steps; // the last step is the final chain
  bool final_nonzero = false;
  /// Final element equals +-m * (product of the hat elements) for some m in G.
  bool final_form_matched = false;
  std::string final_form; // e.g. "m*hat(a)*hat(b)"
  int implied_lower_bound = 0; // weight + 1 when final_nonzero, else 0
  /// Final element lies in the weight-n term of the lower chain, when checked.
  std::optional<bool> in_lower_term;
  /// Intermediate mismatches are errors (p = 3) or only recorded (p = 2).
  bool strict_steps = false;

  bool steps_matched() const;
};

/// Evaluates the weight-7 chain of the witness's case over GF(2). For
/// gamma_2 = C4 x C2 the displayed intermediate forms are compared; for
/// elementary abelian gamma_2 only the final element is checked, against
/// m * hat(a) * hat(b) * hat(c). Throws Errc::CaseMismatch for p != 2 or a
/// non-p=2 witness.
ChainReport verify_chain_p2(const AlgebraContext &ctx, const WitnessProfile &w);

/// Evaluates every displayed step of the witness's case over GF(3), signs
/// included. Throws Errc::CaseMismatch for p != 3 or a non-p=3 witness.
ChainReport verify_chain_p3(const AlgebraContext &ctx, const WitnessProfile &w);

/// Dispatches on ctx.p().
ChainReport verify_chain(const AlgebraContext &ctx, const WitnessProfile &w);

/// Marks whether the final element lies in `lower_term` (the span L_n of the
/// lower chain with n = chain weight).
void check_lower_membership(ChainReport &report, const EchelonBasis &lower_term);

/// Throws Errc::ChainVanished if the final element is zero and
/// Errc::StepMismatch if the final form disagrees, or a checked intermediate
/// step disagrees under strict_steps. The message carries both sides.
void certify(const ChainReport &report);

/// Parses and evaluates a closed form in the witness letters g, h, a, b, c, f, t.
/// Factors are joined by '*'; a factor is a word ("h2ghg2h2"), a signed sum
/// in parentheses ("(a2b2+ab-a2-a)"), or hat(x). A leading '-' negates.
/// Throws Errc::ParseError.
AlgebraElement eval_form(const AlgebraContext &ctx, const WitnessProfile &w,
                         std::string_view form);

/// Parses "[w1,w2,...]" into group elements (each wi a word as above).
std::vector<Elem> parse_chain_word(const Group &G, const WitnessProfile &w,
                                   std::string_view word);

} // namespace lienil
