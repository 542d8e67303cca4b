// lienil: Lie nilpotency indices of modular group algebras.
//
// Exit codes: 0 when every executed check passes, 1 on a check failure,
// 2 on an input error.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lienil/catalog.hpp"
#include "lienil/classify.hpp"
#include "lienil/error.hpp"
#include "lienil/lie_series.hpp"
#include "lienil/proof.hpp"
#include "lienil/report.hpp"
#include "lienil/scan.hpp"

#ifndef LIENIL_DEFAULT_CATALOG
#define LIENIL_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace {

using namespace lienil;

struct RunConfig {
  std::string command;
  std::string catalog_path = LIENIL_DEFAULT_CATALOG;
  std::optional<std::string> group;
  std::optional<unsigned> prime;
  std::size_t max_order = default_max_order;
  bool json = false;
  unsigned jobs = 1;
  bool all_witnesses = false;
};

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

template <typename T> std::string join(const std::vector<T> &v, const char *sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? sep : "") << v[i];
  return out.str();
}

std::string type_string(const std::vector<std::uint64_t> &t) {
  return t.empty() ? "1" : "C" + join(t, "xC");
}

struct Entry {
  const GroupSpec *spec;
  std::shared_ptr<const Group> group;
};

/// Selected catalog entries with their groups; throws on input errors.
std::vector<Entry> select(const std::vector<GroupSpec> &catalog, const RunConfig &cfg) {
  std::vector<Entry> out;
  for (const auto &spec : catalog) {
    if (cfg.group && spec.name != *cfg.group)
      continue;
    out.push_back({&spec, std::make_shared<const Group>(build_group(spec.generators, cfg.max_order))});
  }
  if (cfg.group && out.empty())
    throw Error(Errc::ParseError, "no catalog entry named " + *cfg.group);
  return out;
}

std::vector<unsigned> primes_for(const Entry &e, const RunConfig &cfg) {
  return cfg.prime ? std::vector<unsigned>{*cfg.prime} : e.spec->primes;
}

int run_analyze(const std::vector<Entry> &entries, const RunConfig &cfg) {
  if (!cfg.json)
    std::printf("%-22s %6s %5s  %-20s %-14s\n", "group", "order", "class", "gamma orders", "G' type");
  for (const auto &e : entries) {
    const auto inv = group_invariants(*e.group);
    if (cfg.json) {
      std::cout << to_json(inv, e.spec->name) << '\n';
      continue;
    }
    const std::string derived = inv.derived_abelian ? type_string(inv.derived_type) : "nonabelian";
    std::printf("%-22s %6zu %5d  %-20s %-14s\n", e.spec->name.c_str(), inv.order,
                inv.nilpotency_class, join(inv.gamma_orders).c_str(), derived.c_str());
  }
  return exit_ok;
}

int run_indices(const std::vector<Entry> &entries, const RunConfig &cfg) {
  int rc = exit_ok;
  if (!cfg.json)
    std::printf("%-22s %3s %4s %4s  %s\n", "group", "p", "t_L", "t^L", "dims L_n | R^(n)");
  for (const auto &e : entries) {
    for (unsigned p : primes_for(e, cfg)) {
      const auto status = lie_nilpotency_status(*e.group, p);
      if (!status.lie_nilpotent) {
        if (!cfg.json)
          std::printf("%-22s %3u  not Lie nilpotent (%s)\n", e.spec->name.c_str(), p,
                      std::string(to_string(status.reason)).c_str());
        continue;
      }
      try {
        const auto s = compute_series(AlgebraContext(e.group, p), e.spec->name);
        if (cfg.json)
          std::cout << to_json(s) << '\n';
        else
          std::printf("%-22s %3u %4d %4d  %s | %s\n", e.spec->name.c_str(), p, s.t_lower, s.t_upper,
                      join(s.lower_dims).c_str(), join(s.upper_dims).c_str());
      } catch (const Error &err) {
        std::cerr << e.spec->name << " p=" << p << ": " << err.what() << '\n';
        rc = exit_check_failed;
      }
    }
  }
  return rc;
}

int run_classify(const std::vector<Entry> &entries, const RunConfig &cfg) {
  if (!cfg.json)
    std::printf("%-22s %3s  %-10s %-14s %s\n", "group", "p", "condition", "prediction", "value");
  for (const auto &e : entries) {
    for (unsigned p : primes_for(e, cfg)) {
      const auto status = lie_nilpotency_status(*e.group, p);
      std::optional<Classification> c;
      if (status.lie_nilpotent)
        c = classify_theorem1(*e.group, p);
      if (cfg.json) {
        std::cout << "{\"name\":\"" << e.spec->name << "\",\"p\":" << p << ",\"status\":\""
                  << to_string(status.reason) << "\"";
        if (c)
          std::cout << ",\"condition\":\"" << to_string(c->condition) << "\",\"predicted\":{\"kind\":\""
                    << to_string(c->predicted.kind) << "\",\"value\":" << c->predicted.value << "}";
        std::cout << "}\n";
      } else if (c) {
        std::printf("%-22s %3u  %-10s %-14s %lld\n", e.spec->name.c_str(), p,
                    std::string(to_string(c->condition)).c_str(),
                    std::string(to_string(c->predicted.kind)).c_str(),
                    static_cast<long long>(c->predicted.value));
      } else {
        std::printf("%-22s %3u  NotLieNilpotent (%s)\n", e.spec->name.c_str(), p,
                    std::string(to_string(status.reason)).c_str());
      }
    }
  }
  return exit_ok;
}

int run_scan(const std::vector<GroupSpec> &catalog, const RunConfig &cfg) {
  ScanOptions opts;
  opts.group = cfg.group;
  opts.prime = cfg.prime;
  opts.max_order = cfg.max_order;
  opts.jobs = cfg.jobs;
  const auto result = scan_catalog(catalog, opts);
  for (const auto &name : result.skipped)
    std::cerr << name << ": skipped, order exceeds " << cfg.max_order << '\n';

  int rc = exit_ok;
  if (!cfg.json)
    std::printf("%-22s %3s %5s %4s %4s  %-10s %s\n", "group", "p", "|G'|", "t_L", "t^L", "condition",
                "checks");
  for (const auto &r : result.reports) {
    if (!r.all_pass())
      rc = exit_check_failed;
    if (cfg.json) {
      std::cout << to_json(r) << '\n';
      continue;
    }
    const std::size_t derived = r.gamma_orders.size() > 1 ? r.gamma_orders[1] : 1;
    if (!r.status.lie_nilpotent) {
      std::printf("%-22s %3u %5zu  not Lie nilpotent (%s)\n", r.group_name.c_str(), r.p, derived,
                  std::string(to_string(r.status.reason)).c_str());
      continue;
    }
    std::string failed;
    for (const auto &c : r.checks)
      if (!c.pass)
        failed += " " + c.name + "(" + c.detail + ")";
    const std::string tl = r.computed ? std::to_string(r.computed->t_lower) : "-";
    const std::string tu = r.computed ? std::to_string(r.computed->t_upper) : "-";
    std::printf("%-22s %3u %5zu %4s %4s  %-10s %s\n", r.group_name.c_str(), r.p, derived, tl.c_str(),
                tu.c_str(), std::string(to_string(r.classification->condition)).c_str(),
                failed.empty() ? "ok" : ("FAIL" + failed).c_str());
  }
  return rc;
}

int run_verify(const std::vector<Entry> &entries, const RunConfig &cfg) {
  int rc = exit_ok;
  for (const auto &e : entries) {
    for (unsigned p : primes_for(e, cfg)) {
      if (!lie_nilpotency_status(*e.group, p).lie_nilpotent)
        continue;
      const Condition cond = classify_theorem1(*e.group, p).condition;
      if (cond != Condition::II && cond != Condition::III && cond != Condition::IV) {
        if (!cfg.json && cfg.group)
          std::printf("%s p=%u: condition %s has no commutator chain\n", e.spec->name.c_str(), p,
                      std::string(to_string(cond)).c_str());
        continue;
      }
      const AlgebraContext ctx(e.group, p);
      const auto lower = lower_chain_terms(ctx);
      std::vector<WitnessProfile> witnesses;
      if (cfg.all_witnesses)
        witnesses = find_all_witnesses(*e.group, cond);
      else
        witnesses.push_back(find_witness_pair(*e.group, cond));

      std::size_t failures = 0;
      std::string first_failure;
      std::map<std::string, std::size_t> step_failures;
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const auto &w = witnesses[i];
        auto chain = verify_chain(ctx, w);
        const std::size_t weight = parse_chain_word(*e.group, w, chain.final_word).size();
        if (weight - 1 < lower.size())
          check_lower_membership(chain, lower[weight - 1]);
        else
          chain.in_lower_term = false;
        std::string problem;
        try {
          certify(chain);
        } catch (const Error &err) {
          problem = err.what();
        }
        if (!w.relations_hold())
          problem += (problem.empty() ? "" : "; ") + std::string("relation failure");
        if (!problem.empty() && failures++ == 0)
          first_failure = problem;
        for (const auto &s : chain.steps)
          if (s.matched == false)
            ++step_failures[s.word];

        if (cfg.json) {
          if (!cfg.all_witnesses)
            std::cout << to_json(e.spec->name, w, chain, *e.group) << '\n';
          continue;
        }
        if (cfg.all_witnesses)
          continue;
        std::printf("%s p=%u condition %s, witness g=%s h=%s, %s\n", e.spec->name.c_str(), p,
                    std::string(to_string(cond)).c_str(), e.group->name_of(w.g).c_str(),
                    e.group->name_of(w.h).c_str(), std::string(to_string(w.case_tag)).c_str());
        for (const auto &s : chain.steps) {
          const char *mark = !s.matched ? "n/c " : *s.matched ? "ok  " : "FAIL";
          std::printf("  %s %-22s = %s\n", mark, s.word.c_str(), s.actual.c_str());
          if (s.matched == false)
            std::printf("       %-22s   expected %s\n", "", s.expected.c_str());
        }
        std::printf("  final %s, +-%s %s, lower bound %d\n", chain.final_nonzero ? "nonzero" : "ZERO",
                    chain.final_form.c_str(), chain.final_form_matched ? "ok" : "FAIL",
                    chain.implied_lower_bound);
      }
      if (cfg.all_witnesses && !cfg.json)
        std::printf("%s p=%u condition %s: %zu witnesses, %zu failed%s%s\n", e.spec->name.c_str(), p,
                    std::string(to_string(cond)).c_str(), witnesses.size(), failures,
                    failures ? ", first: " : "", first_failure.c_str());
      if (cfg.all_witnesses && !cfg.json)
        for (const auto &[word, count] : step_failures)
          std::printf("  %-22s differs from its display for %zu witnesses\n", word.c_str(), count);
      if (!cfg.all_witnesses && failures && !cfg.json)
        std::printf("  %s\n", first_failure.c_str());
      if (failures)
        rc = exit_check_failed;
    }
  }
  return rc;
}

int run_units(const std::vector<Entry> &entries, const RunConfig &cfg) {
  int rc = exit_ok;
  if (!cfg.json)
    std::printf("%-22s %3s %7s %6s %8s\n", "group", "p", "cl(U)", "t_L-1", "|G'|-p+1");
  for (const auto &e : entries) {
    for (unsigned p : primes_for(e, cfg)) {
      const std::size_t n = e.group->order();
      if (!is_power_of(n, p))
        continue;
      if (!units_in_scale(n, p)) {
        if (!cfg.json)
          std::printf("%-22s %3u  out of scale\n", e.spec->name.c_str(), p);
        continue;
      }
      const AlgebraContext ctx(e.group, p);
      const int cl = unit_group_class(ctx);
      const int tl = lower_chain(ctx).index;
      const auto inv = group_invariants(*e.group);
      const long long almost = static_cast<long long>(inv.derived_order()) - p + 1;
      if (cl != tl - 1)
        rc = exit_check_failed;
      if (cfg.json)
        std::cout << "{\"name\":\"" << e.spec->name << "\",\"p\":" << p << ",\"unit_class\":" << cl
                  << ",\"t_lower\":" << tl << "}\n";
      else
        std::printf("%-22s %3u %7d %6d %8lld%s\n", e.spec->name.c_str(), p, cl, tl - 1, almost,
                    cl == tl - 1 ? "" : "  MISMATCH");
    }
  }
  return rc;
}

int run(const RunConfig &cfg) {
  std::vector<GroupSpec> catalog;
  std::vector<Entry> entries;
  try {
    if (cfg.prime && !is_prime(*cfg.prime))
      throw Error(Errc::InvalidPrime, std::to_string(*cfg.prime) + " is not prime");
    catalog = load_catalog(cfg.catalog_path);
    if (cfg.command != "scan")
      entries = select(catalog, cfg);
  } catch (const Error &e) {
    std::cerr << "lienil: " << e.what() << '\n';
    return exit_input_error;
  }

  try {
    if (cfg.command == "analyze")
      return run_analyze(entries, cfg);
    if (cfg.command == "indices")
      return run_indices(entries, cfg);
    if (cfg.command == "classify")
      return run_classify(entries, cfg);
    if (cfg.command == "scan")
      return run_scan(catalog, cfg);
    if (cfg.command == "verify-proof")
      return run_verify(entries, cfg);
    if (cfg.command == "units-class")
      return run_units(entries, cfg);
  } catch (const Error &e) {
    std::cerr << "lienil: " << e.what() << '\n';
    switch (e.code()) {
    case Errc::ParseError:
    case Errc::DegreeMismatch:
    case Errc::InvalidPermutation:
    case Errc::OrderExceeded:
    case Errc::InvalidPrime:
      return exit_input_error;
    default:
      return exit_check_failed;
    }
  }
  return exit_input_error;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lie nilpotency indices of modular group algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::pair<const char *, const char *>> commands = {
      {"analyze", "Group invariants: order, class, gamma series, G' type"},
      {"indices", "Lower and upper Lie nilpotency indices"},
      {"classify", "Almost-maximal-index classification and predicted index"},
      {"scan", "Cross-check every (group, prime) pair of the catalog"},
      {"verify-proof", "Witness search and commutator chain verification"},
      {"units-class", "Nilpotency class of the unit group (small groups only)"},
  };
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--catalog", cfg.catalog_path, "Catalog JSON file")->capture_default_str();
    sub->add_option("--group", cfg.group, "Only this catalog entry");
    sub->add_option("-p,--prime", cfg.prime, "Use this prime instead of the declared ones");
    sub->add_option("--max-order", cfg.max_order, "Largest group order to build")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "One JSON object per line");
    sub->add_option("--jobs", cfg.jobs, "Concurrent tasks (scan)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    if (std::string(name) == "verify-proof")
      sub->add_flag("--all-witnesses", cfg.all_witnesses, "Verify every witness pair");
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input_error;
  }
  return run(cfg);
}
