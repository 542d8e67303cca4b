#include "lienil/proof.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "lienil/error.hpp"

namespace lienil {

std::string_view to_string(CaseTag c) {
  switch (c) {
  case CaseTag::P2Case1: return "p2-case1";
  case CaseTag::P2Case2: return "p2-case2";
  case CaseTag::P3T1: return "p3-t1";
  case CaseTag::P3Tb: return "p3-tb";
  case CaseTag::P3Tb2: return "p3-tb2";
  }
  return "?";
}

bool WitnessProfile::relations_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const Check &c) { return c.pass; });
}

bool ChainReport::steps_matched() const {
  return std::none_of(steps.begin(), steps.end(),
                      [](const ChainStep &s) { return s.matched == false; });
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

unsigned prime_of(Condition c) { return c == Condition::IV ? 3 : 2; }

bool subgroup_is(const Group &G, std::vector<Elem> seed, const Subgroup &target) {
  return subgroup_generated(G, seed) == target;
}

template <typename Visit>
void scan_pairs(const Group &G, Condition condition, Visit visit) {
  if (condition != Condition::II && condition != Condition::III && condition != Condition::IV)
    return;
  const unsigned p = prime_of(condition);
  if (!lie_nilpotency_status(G, p).lie_nilpotent || classify_theorem1(G, p).condition != condition)
    return;

  const auto series = lower_central_series(G);
  const auto comm = [&](Elem x, Elem y) { return group_commutator(G, x, y); };
  const std::size_t n = G.order();

  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      WitnessProfile w;
      w.condition = condition;
      w.g = g;
      w.h = h;
      w.a = comm(g, h);
      w.b = comm(w.a, h);
      if (series[2].contains(w.a) || w.b == Group::identity)
        continue;

      if (p == 3) {
        if (!subgroup_is(G, {w.a, w.b}, series[1]))
          continue;
        w.t = comm(w.a, g);
        const Elem b2 = G.mul(w.b, w.b);
        if (w.t == Group::identity)
          w.case_tag = CaseTag::P3T1;
        else if (w.t == w.b)
          w.case_tag = CaseTag::P3Tb;
        else if (w.t == b2)
          w.case_tag = CaseTag::P3Tb2;
        else
          continue;
        w.relations.push_back({"t in <b>", true, ""});
      } else {
        w.c = comm(w.b, h);
        if (condition == Condition::II && w.c != G.mul(w.a, w.a))
          continue;
        if (w.c == Group::identity || !subgroup_is(G, {w.c}, series[3]) ||
            !subgroup_is(G, {w.b, w.c}, series[2]) || !subgroup_is(G, {w.a, w.b, w.c}, series[1]))
          continue;
        w.f = comm(w.a, g);
        w.t = comm(w.b, g);
        w.z1 = comm(w.f, g);
        w.z2 = comm(w.f, h);
        const bool case1 = w.f == w.b || w.f == G.mul(w.b, w.c);
        w.case_tag = case1 ? CaseTag::P2Case1 : CaseTag::P2Case2;
        const Elem g2 = G.mul(g, g);
        w.relations = {
            {"f in gamma_3", series[2].contains(w.f), ""},
            {"t in gamma_3", series[2].contains(w.t), ""},
            {"z1 in gamma_4", series[3].contains(w.z1), ""},
            {"z2 in gamma_4", series[3].contains(w.z2), ""},
            {"t = z2", w.t == w.z2, ""},
            {"(g^2,h) = a^2 f", comm(g2, h) == G.product({w.a, w.a, w.f}), ""},
        };
      }
      if (!visit(std::move(w)))
        return;
    }
  }
}

} // namespace

std::vector<WitnessProfile> find_all_witnesses(const Group &G, Condition condition) {
  std::vector<WitnessProfile> out;
  scan_pairs(G, condition, [&](WitnessProfile w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

WitnessProfile find_witness_pair(const Group &G, Condition condition) {
  std::optional<WitnessProfile> first;
  scan_pairs(G, condition, [&](WitnessProfile w) {
    first = std::move(w);
    return false;
  });
  if (!first)
    throw Error(Errc::NoWitness, "no pair (g,h) realizes the commutator pattern of condition " +
                                     std::string(to_string(condition)));
  return *first;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

class FormParser {
public:
  FormParser(const AlgebraContext &ctx, const WitnessProfile &w, std::string_view text)
      : ctx_(ctx), w_(w) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        s_.push_back(ch);
  }

  AlgebraElement form() {
    bool negate = eat('-');
    AlgebraElement acc = factor();
    while (eat('*'))
      acc = ga_mul(ctx_, acc, factor());
    expect_end();
    if (negate)
      acc = ctx_.scale(ctx_.field().neg(1), acc);
    return acc;
  }

  std::vector<Elem> chain() {
    std::vector<Elem> out;
    if (!eat('['))
      fail("expected '['");
    do
      out.push_back(word());
    while (eat(','));
    if (!eat(']'))
      fail("expected ']'");
    expect_end();
    return out;
  }

  Elem single_word() {
    const Elem x = word();
    expect_end();
    return x;
  }

  Elem word() {
    const Group &G = ctx_.group();
    if (eat('1'))
      return Group::identity;
    Elem acc = Group::identity;
    bool any = false;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) &&
           s_.compare(pos_, 4, "hat(") != 0) {
      const Elem x = letter(s_[pos_++]);
      unsigned e = 0;
      bool digits = false;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + unsigned(s_[pos_++] - '0');
        digits = true;
      }
      acc = G.mul(acc, G.pow(x, digits ? e : 1));
      any = true;
    }
    if (!any)
      fail("expected a word");
    return acc;
  }

private:
  AlgebraElement factor() {
    if (eat('(')) {
      auto v = sum();
      if (!eat(')'))
        fail("expected ')'");
      return v;
    }
    if (s_.compare(pos_, 4, "hat(") == 0) {
      pos_ += 4;
      if (pos_ >= s_.size())
        fail("expected a letter");
      const Elem x = letter(s_[pos_++]);
      if (!eat(')'))
        fail("expected ')'");
      return hat(ctx_, x);
    }
    return ctx_.basis(word());
  }

  AlgebraElement sum() {
    auto acc = ctx_.zero();
    bool negate = eat('-');
    if (!negate)
      eat('+');
    for (;;) {
      const Elem x = word();
      const Coeff c = negate ? ctx_.field().neg(1) : Coeff(1);
      acc.coords[x] = ctx_.field().add(acc.coords[x], c);
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        return acc;
    }
  }

  Elem letter(char ch) {
    switch (ch) {
    case 'g': return w_.g;
    case 'h': return w_.h;
    case 'a': return w_.a;
    case 'b': return w_.b;
    case 'c': return w_.c;
    case 'f': return w_.f;
    case 't': return w_.t;
    default: fail(std::string("unknown letter '") + ch + "'");
    }
  }

  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (pos_ != s_.size())
      fail("trailing input");
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  const AlgebraContext &ctx_;
  const WitnessProfile &w_;
  std::string s_;
  std::size_t pos_ = 0;
};

} // namespace

AlgebraElement eval_form(const AlgebraContext &ctx, const WitnessProfile &w,
                         std::string_view form) {
  return FormParser(ctx, w, form).form();
}

std::vector<Elem> parse_chain_word(const Group &G, const WitnessProfile &w,
                                   std::string_view word) {
  // The parser only needs the group; p is irrelevant for words.
  const AlgebraContext ctx(std::shared_ptr<const Group>(&G, [](const Group *) {}), 2);
  return FormParser(ctx, w, word).chain();
}

// ---------------------------------------------------------------------------
// Chains

namespace {

struct Display {
  const char *word;
  const char *monomial; // used to render the computed value
  std::vector<const char *> forms; // empty: not checked
};

struct Chain {
  std::vector<Display> steps; // last entry is the final chain
};

// gamma_2 = C4 x C2. Alternatives are the displayed two-element sets.
const Chain p2_case1{{
    {"[h,gh]", "g2h2", {"g2h2*(a3b+1)"}},
    {"[h,gh,g]", "g2h2", {"g2h2*(1+a2)", "g2h2*(1+ab+a2b+a3b)"}},
    {"[h,gh,g,h]", "hg2h2", {"hg2h2*(1+a2)", "hg2h2*(1+a2)*b"}},
    {"[h,gh,g,h,g]", "ghg2h2", {"ghg2h2*(1+ab)*(1+a2)"}},
    {"[h,gh,g,h,g,h]", "hghg2h2", {"hghg2h2*a*(1+b)*(1+a2)"}},
    {"[h,gh,g,h,g,h,h]", "h2ghg2h2", {"h2ghg2h2*hat(a)*hat(b)"}},
}};

const Chain p2_case2{{
    {"[gh,g]", "g2h", {"g2h*(a3+1)"}},
    {"[gh,g,gh]", "g2hgh", {"g2hgh*(abf+a3)"}},
    {"[gh,g,gh,gh]", "ghg2hgh", {"ghg2hgh*(a2+a2bf+abf+a3)"}},
    {"[gh,g,gh,gh,g]", "g2hg2hgh", {"g2hg2hgh*(1+a+a2+a3)", "g2hg2hgh*(1+a2)*(1+ab)"}},
    {"[gh,g,gh,gh,g,h]", "hg2hg2hgh", {"hg2hg2hgh*(1+a2)*(1+b)", "hg2hg2hgh*a*(1+a2)*(1+b)"}},
    {"[gh,g,gh,gh,g,h,h]", "h2g2hg2hgh", {"h2g2hg2hgh*hat(a)*hat(b)"}},
}};

const Chain p3_t1{{
    {"[gh,g,g]", "g3h", {"g3h*hat(a)"}},
    {"[gh,g,g,h]", "hg3h", {"hg3h*(a2b2+ab-a2-a)"}},
    {"[gh,g,g,h,g]", "gh2g3h", {"gh2g3h*(a+b+a2b2-b2-a2-ab)"}},
    {"[gh,g,g,h,gh,h]", "hgh2g3h", {"hgh2g3h*(1-a2)*(1+b+b2)"}},
    {"[gh,g,g,h,gh,gh,h]", "h2gh2g3h", {"h2gh2g3h*hat(a)*hat(b)"}},
}};

const Chain p3_tb{{
    {"[h,g,gh]", "ghgh", {"ghgh*a2*(b-1)"}},
    {"[h,g,gh,g]", "g2hgh", {"g2hgh*(1-a2)*(b-1)"}},
    {"[h,g,gh,g,gh]", "ghg2hgh", {"ghg2hgh*(a2+ab-1-b2)*(b-1)"}},
    {"[h,g,gh,g,gh,h]", "hghg2hgh", {"hghg2hgh*(a2b+ab-ab2-a2)*(b-1)"}},
    {"[h,g,gh,g,gh,h,g]", "ghghg2hgh", {"-ghghg2hgh*hat(a)*hat(b)"}},
}};

const Chain p3_tb2{{
    {"[g,gh,g]", "g2hg", {"g2hg*(-1-a-a2b)"}},
    {"[g,gh,g,h]", "hg2hg", {"hg2hg*(a2b+1-b2-a2b2)"}},
    {"[g,gh,g,h,gh]", "gh2g2hg", {"gh2g2hg*(a+b+a2b2-ab2-a2b-1)"}},
    {"[g,gh,g,h,gh,h]", "hgh2g2hg", {"hgh2g2hg*(a-a2)*(1+b+b2)"}},
    {"[g,gh,g,h,gh,h,h]", "h2gh2g2hg", {"-h2gh2g2hg*hat(a)*hat(b)"}},
}};

/// Names for the elements of <a,b> or <a,b,c> as a^i b^j c^k.
class Lettering {
public:
  Lettering(const Group &G, const WitnessProfile &w, bool use_c) : G_(G) {
    const std::size_t oa = G.element_order(w.a), ob = G.element_order(w.b);
    const std::size_t oc = use_c ? G.element_order(w.c) : 1;
    for (std::size_t i = 0; i < oa; ++i)
      for (std::size_t j = 0; j < ob; ++j)
        for (std::size_t k = 0; k < oc; ++k) {
          const Elem x = G.product({G.pow(w.a, i), G.pow(w.b, j), G.pow(w.c, k)});
          if (names_.count(x))
            continue;
          std::string s;
          const auto put = [&](char ch, std::size_t e) {
            if (e)
              s += e == 1 ? std::string(1, ch) : ch + std::to_string(e);
          };
          put('a', i);
          put('b', j);
          put('c', k);
          names_.emplace(x, std::make_pair(std::make_tuple(i, j, k), s.empty() ? "1" : s));
        }
  }

  /// Renders u as "mono*(sum)" when its support lies in mono*<a,b,...>.
  std::string render(const AlgebraContext &ctx, Elem mono, const std::string &mono_name,
                     const AlgebraElement &u) const {
    if (u.is_zero())
      return "0";
    const Elem mi = G_.inv(mono);
    std::vector<std::pair<std::tuple<std::size_t, std::size_t, std::size_t>, std::string>> terms;
    std::string outside;
    for (std::size_t y = 0; y < u.coords.size(); ++y) {
      const Coeff c = u.coords[y];
      if (!c)
        continue;
      const auto it = names_.find(G_.mul(mi, Elem(y)));
      const std::string coef = c == 1 ? "+" : c == ctx.p() - 1 ? "-" : "+" + std::to_string(c);
      if (it == names_.end())
        outside += coef + G_.name_of(Elem(y)) + "(group)";
      else
        terms.emplace_back(it->second.first, coef + it->second.second);
    }
    std::sort(terms.begin(), terms.end());
    std::string inner;
    for (const auto &t : terms)
      inner += t.second;
    if (!inner.empty() && inner[0] == '+')
      inner.erase(0, 1);
    std::string out = mono_name + "*(" + inner + ")";
    if (!outside.empty())
      out += " " + outside;
    return out;
  }

private:
  const Group &G_;
  std::map<Elem, std::pair<std::tuple<std::size_t, std::size_t, std::size_t>, std::string>> names_;
};

std::string join_forms(const std::vector<const char *> &forms) {
  std::string s;
  for (const auto *f : forms)
    s += (s.empty() ? "" : " | ") + std::string(f);
  return s;
}

/// True when u = +-m * target for some group element m.
bool is_signed_monomial_multiple(const AlgebraContext &ctx, const AlgebraElement &u,
                                 const AlgebraElement &target) {
  if (u.is_zero())
    return false;
  const Coeff minus = ctx.field().neg(1);
  for (std::size_t m = 0; m < ctx.dim(); ++m) {
    const auto v = ctx.left_mul(Elem(m), target);
    if (v == u || ctx.scale(minus, v) == u)
      return true;
  }
  return false;
}

ChainReport run_chain(const AlgebraContext &ctx, const WitnessProfile &w, const Chain &chain,
                      bool check_steps, std::vector<char> hat_letters) {
  const Group &G = ctx.group();
  const Lettering names(G, w, std::count(hat_letters.begin(), hat_letters.end(), 'c') > 0);

  ChainReport r;
  r.case_tag = w.case_tag;
  r.strict_steps = ctx.p() == 3;
  for (const auto &d : chain.steps) {
    ChainStep s;
    s.word = d.word;
    const auto elems = parse_chain_word(G, w, d.word);
    s.value = left_normed(ctx, std::span<const Elem>(elems));
    s.expected = join_forms(d.forms);
    if (check_steps && !d.forms.empty()) {
      bool any = false;
      for (const auto *f : d.forms)
        any = any || eval_form(ctx, w, f) == s.value;
      s.matched = any;
    }
    s.actual = names.render(ctx, FormParser(ctx, w, d.monomial).single_word(), d.monomial, s.value);
    r.steps.push_back(std::move(s));
  }

  auto &last = r.steps.back();
  r.final_word = last.word;
  const std::size_t weight = parse_chain_word(G, w, last.word).size();
  r.final_nonzero = !last.value.is_zero();
  r.implied_lower_bound = r.final_nonzero ? int(weight) + 1 : 0;

  r.final_form = "m";
  auto target = ctx.one();
  for (char x : hat_letters) {
    r.final_form += std::string("*hat(") + x + ")";
    target = ga_mul(ctx, target, eval_form(ctx, w, std::string("hat(") + x + ")"));
  }
  r.final_form_matched = is_signed_monomial_multiple(ctx, last.value, target);
  if (!check_steps) {
    // Only the generic shape of the final element is certified.
    last.expected = "+-" + r.final_form;
    last.matched = r.final_form_matched;
  }
  return r;
}

} // namespace

ChainReport verify_chain_p2(const AlgebraContext &ctx, const WitnessProfile &w) {
  if (ctx.p() != 2)
    throw Error(Errc::CaseMismatch, "p=2 chain requested over GF(" + std::to_string(ctx.p()) + ")");
  if (w.case_tag != CaseTag::P2Case1 && w.case_tag != CaseTag::P2Case2)
    throw Error(Errc::CaseMismatch, "witness is tagged " + std::string(to_string(w.case_tag)));
  const Chain &chain = w.case_tag == CaseTag::P2Case1 ? p2_case1 : p2_case2;
  if (w.condition == Condition::II)
    return run_chain(ctx, w, chain, true, {'a', 'b'});
  return run_chain(ctx, w, chain, false, {'a', 'b', 'c'});
}

ChainReport verify_chain_p3(const AlgebraContext &ctx, const WitnessProfile &w) {
  if (ctx.p() != 3)
    throw Error(Errc::CaseMismatch, "p=3 chain requested over GF(" + std::to_string(ctx.p()) + ")");
  const Chain *chain = nullptr;
  switch (w.case_tag) {
  case CaseTag::P3T1: chain = &p3_t1; break;
  case CaseTag::P3Tb: chain = &p3_tb; break;
  case CaseTag::P3Tb2: chain = &p3_tb2; break;
  default:
    throw Error(Errc::CaseMismatch, "witness is tagged " + std::string(to_string(w.case_tag)));
  }
  return run_chain(ctx, w, *chain, true, {'a', 'b'});
}

ChainReport verify_chain(const AlgebraContext &ctx, const WitnessProfile &w) {
  return ctx.p() == 3 ? verify_chain_p3(ctx, w) : verify_chain_p2(ctx, w);
}

void check_lower_membership(ChainReport &report, const EchelonBasis &lower_term) {
  report.in_lower_term = lower_term.contains(report.steps.back().value);
}

void certify(const ChainReport &report) {
  const auto &last = report.steps.back();
  if (!report.final_nonzero)
    throw Error(Errc::ChainVanished, last.word + " = 0, expected " + last.expected);
  for (const auto &s : report.steps)
    if (s.matched == false && (report.strict_steps || &s == &last))
      throw Error(Errc::StepMismatch, s.word + ": expected " + s.expected + ", got " + s.actual);
  if (!report.final_form_matched)
    throw Error(Errc::StepMismatch,
                last.word + ": expected +-" + report.final_form + ", got " + last.actual);
  if (report.in_lower_term == false)
    throw Error(Errc::StepMismatch, last.word + " is not in the lower chain term of its weight");
}

} // namespace lienil
