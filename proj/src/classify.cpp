#include "lienil/classify.hpp"

#include <algorithm>

#include "lienil/error.hpp"

namespace lienil {

std::string_view to_string(NilpotencyReason r) {
  switch (r) {
  case NilpotencyReason::Ok: return "Ok";
  case NilpotencyReason::GNotNilpotent: return "GNotNilpotent";
  case NilpotencyReason::DerivedNotPGroup: return "DerivedNotPGroup";
  case NilpotencyReason::CharZero: return "CharZero";
  }
  return "?";
}

std::string_view to_string(Condition c) {
  switch (c) {
  case Condition::I: return "I";
  case Condition::II: return "II";
  case Condition::III: return "III";
  case Condition::IV: return "IV";
  case Condition::None: return "None";
  }
  return "?";
}

std::string_view to_string(PredictionKind k) {
  switch (k) {
  case PredictionKind::Maximal: return "Maximal";
  case PredictionKind::AlmostMaximal: return "AlmostMaximal";
  case PredictionKind::Below: return "Below";
  case PredictionKind::Commutative: return "Commutative";
  }
  return "?";
}

std::optional<NilpotencyReason> parse_reason(std::string_view s) {
  for (auto r : {NilpotencyReason::Ok, NilpotencyReason::GNotNilpotent,
                 NilpotencyReason::DerivedNotPGroup, NilpotencyReason::CharZero})
    if (to_string(r) == s)
      return r;
  return std::nullopt;
}

std::optional<Condition> parse_condition(std::string_view s) {
  for (auto c : {Condition::I, Condition::II, Condition::III, Condition::IV, Condition::None})
    if (to_string(c) == s)
      return c;
  return std::nullopt;
}

std::optional<PredictionKind> parse_prediction_kind(std::string_view s) {
  for (auto k : {PredictionKind::Maximal, PredictionKind::AlmostMaximal, PredictionKind::Below,
                 PredictionKind::Commutative})
    if (to_string(k) == s)
      return k;
  return std::nullopt;
}

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

GroupInvariants group_invariants(const Group &G) {
  GroupInvariants inv;
  inv.order = G.order();
  const auto series = lower_central_series(G);
  inv.nilpotency_class = nilpotency_class(series);
  for (const auto &s : series)
    inv.gamma_orders.push_back(s.order());
  if (series.size() > 1) {
    try {
      inv.derived_type = abelian_type(G, series[1]);
    } catch (const Error &e) {
      if (e.code() != Errc::NotAbelian)
        throw;
      inv.derived_abelian = false;
    }
  }
  if (series.size() > 2 && inv.derived_abelian)
    inv.gamma3_type = abelian_type(G, series[2]);
  return inv;
}

NilpotencyStatus lie_nilpotency_status(const Group &G, unsigned p) {
  if (p == 0)
    return {false, NilpotencyReason::CharZero};
  const auto series = lower_central_series(G);
  if (!is_nilpotent(series))
    return {false, NilpotencyReason::GNotNilpotent};
  const std::size_t derived = series.size() > 1 ? series[1].order() : 1;
  if (!is_power_of(derived, p))
    return {false, NilpotencyReason::DerivedNotPGroup};
  return {true, NilpotencyReason::Ok};
}

namespace {

using Type = std::vector<std::uint64_t>;

Classification classify_invariants(const GroupInvariants &inv, bool abelian, unsigned p) {
  const auto derived = std::int64_t(inv.derived_order());
  const std::int64_t ip = p;
  if (abelian)
    return {Condition::None, {PredictionKind::Commutative, 2}};

  const int cl = inv.nilpotency_class;
  const Type &t2 = inv.derived_type;
  const Type &t3 = inv.gamma3_type;

  Condition cond = Condition::None;
  if (p == 2 && cl == 2 && t2 == Type{2, 2})
    cond = Condition::I;
  else if (p == 2 && cl == 4 && t2 == Type{4, 2} && t3 == Type{2, 2})
    cond = Condition::II;
  else if (p == 2 && cl == 4 && t2 == Type{2, 2, 2})
    cond = Condition::III;
  else if (p == 3 && cl == 3 && t2 == Type{3, 3})
    cond = Condition::IV;

  const bool cyclic_derived = inv.derived_abelian && t2.size() <= 1;
  const bool klein_with_gamma3 = p == 2 && t2 == Type{2, 2} && cl >= 3;
  if (cyclic_derived || klein_with_gamma3)
    return {cond, {PredictionKind::Maximal, derived + 1}};
  if (cond != Condition::None)
    return {cond, {PredictionKind::AlmostMaximal, derived - ip + 2}};
  return {cond, {PredictionKind::Below, derived - ip + 1}};
}

std::string show(std::int64_t tl, std::int64_t tu) {
  return "t_L=" + std::to_string(tl) + " t^L=" + std::to_string(tu);
}

} // namespace

Classification classify_theorem1(const Group &G, unsigned p) {
  const auto status = lie_nilpotency_status(G, p);
  if (!status.lie_nilpotent)
    throw Error(Errc::NotLieNilpotent, std::string(to_string(status.reason)));
  return classify_invariants(group_invariants(G), G.is_abelian(), p);
}

CheckReport cross_check(std::shared_ptr<const Group> G, const std::string &name, unsigned p) {
  CheckReport report;
  report.group_name = name;
  report.p = p;
  const auto inv = group_invariants(*G);
  report.order = inv.order;
  report.nilpotency_class = inv.nilpotency_class;
  report.gamma_orders = inv.gamma_orders;
  report.derived_type = inv.derived_type;
  report.status = lie_nilpotency_status(*G, p);
  if (!report.status.lie_nilpotent)
    return report;

  const Classification cls = classify_invariants(inv, G->is_abelian(), p);
  report.classification = cls;

  const AlgebraContext ctx(G, p);
  SeriesReport series;
  try {
    series = compute_series(ctx, name);
  } catch (const Error &e) {
    report.checks.push_back({"chain", false, e.what()});
    return report;
  }
  report.computed = series;

  const std::int64_t tl = series.t_lower, tu = series.t_upper;
  const auto derived = std::int64_t(inv.derived_order());
  const std::int64_t almost = derived - std::int64_t(p) + 2;
  const std::string vals = show(tl, tu);
  auto add = [&](std::string check, bool pass, std::string detail) {
    report.checks.push_back({std::move(check), pass, std::move(detail)});
  };

  add("bound", tl <= tu && tu <= derived + 1,
      vals + " |G'|+1=" + std::to_string(derived + 1));

  const bool maximal_predicted = cls.predicted.kind == PredictionKind::Maximal ||
                                 cls.predicted.kind == PredictionKind::Commutative;
  add("prop1", maximal_predicted == (tu == derived + 1) && (!maximal_predicted || tl == tu),
      std::string("predicted ") + std::string(to_string(cls.predicted.kind)) + ", " + vals);

  add("prop2_gap", tu == derived + 1 || tu <= almost,
      vals + " almost=" + std::to_string(almost));

  add("prop2", (cls.condition != Condition::None) == (tu == almost),
      "condition " + std::string(to_string(cls.condition)) + ", " + vals);

  add("thm1", (cls.condition != Condition::None) == (tl == almost),
      "condition " + std::string(to_string(cls.condition)) + ", " + vals);

  add("cor1", (tl == almost) == (tu == almost), vals + " almost=" + std::to_string(almost));

  if (p == 3) {
    add("cor3", tl != derived, vals + " |G'|=" + std::to_string(derived));
  } else {
    add("cor3", true, "n/a for p=" + std::to_string(p));
  }

  if (p > 3)
    add("bp", tl == tu, vals);
  else
    add("bp", true, "n/a for p=" + std::to_string(p));

  bool predicted_ok = false;
  switch (cls.predicted.kind) {
  case PredictionKind::Maximal:
  case PredictionKind::AlmostMaximal:
  case PredictionKind::Commutative:
    predicted_ok = tl == cls.predicted.value && tu == cls.predicted.value;
    break;
  case PredictionKind::Below:
    predicted_ok = tl <= cls.predicted.value;
    break;
  }
  add("predicted", predicted_ok,
      std::string(to_string(cls.predicted.kind)) + "=" + std::to_string(cls.predicted.value) +
          ", " + vals);
  return report;
}

bool units_in_scale(std::size_t order, unsigned p, std::uint64_t max_units) {
  if (order == 0)
    return false;
  std::uint64_t v = 1;
  for (std::size_t i = 0; i + 1 < order; ++i) {
    v *= p;
    if (v > max_units)
      return false;
  }
  return true;
}

namespace {

/// Units of GF(p)G encoded as base-p integers, coordinate 0 most significant
/// (numeric order = lexicographic order of coordinate vectors).
class UnitArith {
public:
  explicit UnitArith(const AlgebraContext &ctx)
      : ctx_(ctx), n_(ctx.dim()), p_(ctx.p()), weight_(n_) {
    std::uint64_t w = 1;
    for (std::size_t i = n_; i-- > 0;) {
      weight_[i] = w;
      w *= p_;
    }
    space_ = w;
    // (1 + x)^(p^k) = 1 once p^k >= |G|, the nilpotency bound of the augmentation ideal.
    std::uint64_t pk = 1;
    while (pk < n_)
      pk *= p_;
    inverse_exponent_ = pk - 1;
  }

  std::uint64_t space() const { return space_; }

  std::vector<Coeff> decode(std::uint64_t code) const {
    std::vector<Coeff> v(n_);
    for (std::size_t i = n_; i-- > 0;) {
      v[i] = Coeff(code % p_);
      code /= p_;
    }
    return v;
  }

  std::uint64_t encode(const std::vector<Coeff> &v) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n_; ++i)
      code += v[i] * weight_[i];
    return code;
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return encode(ga_mul(ctx_, AlgebraElement{decode(x)}, AlgebraElement{decode(y)}).coords);
  }

  std::uint64_t one() const { return weight_[0]; }

  std::uint64_t inv(std::uint64_t x) const {
    std::uint64_t r = one(), base = x, k = inverse_exponent_;
    while (k) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  std::uint64_t commutator(std::uint64_t x, std::uint64_t y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

private:
  const AlgebraContext &ctx_;
  std::size_t n_;
  unsigned p_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t space_ = 1;
  std::uint64_t inverse_exponent_ = 0;
};

/// Subgroup of units grown one generator at a time.
class UnitSubgroup {
public:
  explicit UnitSubgroup(const UnitArith &arith)
      : arith_(arith), in_(arith.space(), 0), members_{arith.one()} {
    in_[arith.one()] = 1;
  }

  bool contains(std::uint64_t x) const { return in_[x] != 0; }
  std::size_t order() const { return members_.size(); }
  const std::vector<std::uint64_t> &generators() const { return gens_; }

  bool add_generator(std::uint64_t x) {
    if (contains(x))
      return false;
    gens_.push_back(x);
    const std::size_t old = members_.size();
    for (std::size_t i = 0; i < old; ++i)
      visit(arith_.mul(members_[i], x));
    for (std::size_t i = old; i < members_.size(); ++i)
      for (std::uint64_t s : gens_)
        visit(arith_.mul(members_[i], s));
    return true;
  }

private:
  void visit(std::uint64_t y) {
    if (!in_[y]) {
      in_[y] = 1;
      members_.push_back(y);
    }
  }

  const UnitArith &arith_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint64_t> members_;
  std::vector<std::uint64_t> gens_;
};

} // namespace

int unit_group_class(const AlgebraContext &ctx, std::uint64_t max_units) {
  const std::size_t n = ctx.dim();
  const unsigned p = ctx.p();
  if (!is_power_of(n, p))
    throw Error(Errc::NotPGroup, "|G|=" + std::to_string(n) + " is not a power of " +
                                     std::to_string(p));
  if (!units_in_scale(n, p, max_units))
    throw Error(Errc::ScaleExceeded, "normalized unit group of order " + std::to_string(p) +
                                         "^" + std::to_string(n - 1) + " exceeds " +
                                         std::to_string(max_units));
  if (n == 1)
    return 0;

  const UnitArith arith(ctx);
  std::uint64_t target = 1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    target *= p;

  // Greedy generating set of V = {u : augmentation(u) = 1}.
  UnitSubgroup V(arith);
  for (std::uint64_t code = 0; code < arith.space() && V.order() < target; ++code) {
    const auto v = arith.decode(code);
    unsigned aug = 0;
    for (Coeff c : v)
      aug += c;
    if (aug % p == 1)
      V.add_generator(code);
  }
  const std::vector<std::uint64_t> S = V.generators();
  std::vector<std::uint64_t> S_inv;
  for (std::uint64_t s : S)
    S_inv.push_back(arith.inv(s));

  // gamma_{i+1}(V) = normal closure of {[x, s] : x in gens(gamma_i), s in S}.
  std::vector<std::uint64_t> gens = S;
  std::size_t previous = V.order();
  for (int i = 1;; ++i) {
    UnitSubgroup next(arith);
    for (std::uint64_t x : gens)
      for (std::uint64_t s : S)
        next.add_generator(arith.commutator(x, s));
    if (next.order() == 1)
      return i;
    for (std::size_t j = 0; j < next.generators().size(); ++j)
      for (std::size_t k = 0; k < S.size(); ++k) {
        const std::uint64_t y = next.generators()[j];
        next.add_generator(arith.mul(arith.mul(S_inv[k], y), S[k]));
      }
    if (next.order() == previous)
      throw Error(Errc::NotPGroup, "unit group lower central series stalled");
    previous = next.order();
    gens = next.generators();
  }
}

} // namespace lienil
