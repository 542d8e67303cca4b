#include "lienil/report.hpp"

#include <json.hpp>

#include "lienil/error.hpp"

namespace lienil {

using ojson = nlohmann::ordered_json;

namespace {

ojson checks_json(const std::vector<Check> &checks) {
  ojson arr = ojson::array();
  for (const auto &c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

template <typename T> T field(const ojson &j, const char *key) {
  if (!j.contains(key))
    throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const ojson::exception &e) {
    throw Error(Errc::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename E, typename Parse> E enum_field(const ojson &j, const char *key, Parse parse) {
  const auto s = field<std::string>(j, key);
  const auto v = parse(s);
  if (!v)
    throw Error(Errc::ParseError, std::string("field \"") + key + "\": unknown value " + s);
  return *v;
}

} // namespace

std::string to_json(const CheckReport &r) {
  ojson j;
  j["name"] = r.group_name;
  j["p"] = r.p;
  j["order"] = r.order;
  j["class"] = r.nilpotency_class;
  j["gamma_orders"] = r.gamma_orders;
  j["derived_type"] = r.derived_type;
  j["status"] = to_string(r.status.reason);
  if (r.computed) {
    j["t_lower"] = r.computed->t_lower;
    j["t_upper"] = r.computed->t_upper;
    j["lower_dims"] = r.computed->lower_dims;
    j["upper_dims"] = r.computed->upper_dims;
  } else {
    j["t_lower"] = nullptr;
    j["t_upper"] = nullptr;
    j["lower_dims"] = nullptr;
    j["upper_dims"] = nullptr;
  }
  if (r.classification) {
    j["condition"] = to_string(r.classification->condition);
    j["predicted"] = {{"kind", to_string(r.classification->predicted.kind)},
                      {"value", r.classification->predicted.value}};
  } else {
    j["condition"] = nullptr;
    j["predicted"] = nullptr;
  }
  j["checks"] = checks_json(r.checks);
  return j.dump();
}

CheckReport parse_report(std::string_view line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const ojson::parse_error &e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_object())
    throw Error(Errc::ParseError, "report is not an object");

  CheckReport r;
  r.group_name = field<std::string>(j, "name");
  r.p = field<unsigned>(j, "p");
  r.order = field<std::size_t>(j, "order");
  r.nilpotency_class = field<int>(j, "class");
  r.gamma_orders = field<std::vector<std::size_t>>(j, "gamma_orders");
  r.derived_type = field<std::vector<std::uint64_t>>(j, "derived_type");
  r.status.reason = enum_field<NilpotencyReason>(j, "status", parse_reason);
  r.status.lie_nilpotent = r.status.reason == NilpotencyReason::Ok;

  if (field<ojson>(j, "t_lower").is_null() != field<ojson>(j, "t_upper").is_null())
    throw Error(Errc::ParseError, "t_lower and t_upper must both be present or both null");
  if (!j.at("t_lower").is_null()) {
    SeriesReport s;
    s.p = r.p;
    s.group_name = r.group_name;
    s.t_lower = field<int>(j, "t_lower");
    s.t_upper = field<int>(j, "t_upper");
    s.lower_dims = field<std::vector<std::size_t>>(j, "lower_dims");
    s.upper_dims = field<std::vector<std::size_t>>(j, "upper_dims");
    r.computed = s;
  }
  if (!field<ojson>(j, "condition").is_null()) {
    Classification c;
    c.condition = enum_field<Condition>(j, "condition", parse_condition);
    const auto pred = field<ojson>(j, "predicted");
    c.predicted.kind = enum_field<PredictionKind>(pred, "kind", parse_prediction_kind);
    c.predicted.value = field<std::int64_t>(pred, "value");
    r.classification = c;
  }
  for (const auto &c : field<ojson>(j, "checks"))
    r.checks.push_back(
        {field<std::string>(c, "name"), field<bool>(c, "pass"), field<std::string>(c, "detail")});
  return r;
}

std::string to_json(const SeriesReport &s) {
  ojson j;
  j["name"] = s.group_name;
  j["p"] = s.p;
  j["t_lower"] = s.t_lower;
  j["t_upper"] = s.t_upper;
  j["lower_dims"] = s.lower_dims;
  j["upper_dims"] = s.upper_dims;
  return j.dump();
}

std::string to_json(const GroupInvariants &inv, const std::string &name) {
  ojson j;
  j["name"] = name;
  j["order"] = inv.order;
  j["class"] = inv.nilpotency_class;
  j["gamma_orders"] = inv.gamma_orders;
  j["derived_type"] = inv.derived_type;
  j["derived_abelian"] = inv.derived_abelian;
  j["gamma3_type"] = inv.gamma3_type;
  return j.dump();
}

std::string to_json(const std::string &name, const WitnessProfile &w, const ChainReport &chain,
                    const Group &G) {
  ojson j;
  j["name"] = name;
  j["condition"] = to_string(w.condition);
  j["case"] = to_string(chain.case_tag);
  ojson letters;
  letters["g"] = G.name_of(w.g);
  letters["h"] = G.name_of(w.h);
  letters["a"] = G.name_of(w.a);
  letters["b"] = G.name_of(w.b);
  if (w.condition != Condition::IV) {
    letters["c"] = G.name_of(w.c);
    letters["f"] = G.name_of(w.f);
    letters["z1"] = G.name_of(w.z1);
    letters["z2"] = G.name_of(w.z2);
  }
  letters["t"] = G.name_of(w.t);
  j["witness"] = letters;
  j["relations"] = checks_json(w.relations);
  ojson steps = ojson::array();
  for (const auto &s : chain.steps) {
    ojson o;
    o["word"] = s.word;
    o["expected"] = s.expected;
    o["actual"] = s.actual;
    if (s.matched)
      o["matched"] = *s.matched;
    else
      o["matched"] = nullptr;
    steps.push_back(std::move(o));
  }
  j["steps"] = steps;
  j["final_nonzero"] = chain.final_nonzero;
  j["final_form"] = "+-" + chain.final_form;
  j["final_form_matched"] = chain.final_form_matched;
  if (chain.in_lower_term)
    j["in_lower_term"] = *chain.in_lower_term;
  else
    j["in_lower_term"] = nullptr;
  j["implied_lower_bound"] = chain.implied_lower_bound;
  return j.dump();
}

} // namespace lienil
