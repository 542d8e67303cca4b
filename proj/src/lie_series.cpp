#include "lienil/lie_series.hpp"

#include <deque>

#include "lienil/error.hpp"

namespace lienil {

std::size_t default_chain_bound(const Group &G) {
  const auto series = lower_central_series(G);
  const std::size_t derived = series.size() > 1 ? series[1].order() : 1;
  return derived + 2;
}

namespace {

std::size_t resolve_bound(const AlgebraContext &ctx, std::optional<std::size_t> bound) {
  return bound ? *bound : default_chain_bound(ctx.group());
}

EchelonBasis whole_algebra(const AlgebraContext &ctx) {
  EchelonBasis all(ctx);
  for (std::size_t g = 0; g < ctx.dim(); ++g)
    all.insert(ctx.basis(Elem(g)));
  return all;
}

/// span{[u, g] : u in rows(term), g in G}
EchelonBasis bracket_with_group(const AlgebraContext &ctx, const EchelonBasis &term) {
  EchelonBasis next(ctx);
  for (const auto &u : term.rows()) {
    for (std::size_t g = 0; g < ctx.dim(); ++g) {
      next.insert(lie_bracket(ctx, u, Elem(g)));
      if (next.full())
        return next;
    }
  }
  return next;
}

template <typename Step>
std::vector<EchelonBasis> run_chain(const AlgebraContext &ctx, std::size_t bound,
                                    const char *what, Step step) {
  std::vector<EchelonBasis> terms;
  terms.push_back(whole_algebra(ctx));
  while (!terms.back().empty()) {
    if (terms.size() >= bound)
      throw Error(Errc::BoundExceeded,
                  std::string(what) + " chain still nonzero at term " +
                      std::to_string(terms.size()) + " (dimension " +
                      std::to_string(terms.back().dim()) + ")");
    terms.push_back(step(terms.back()));
  }
  return terms;
}

ChainResult summarize(const std::vector<EchelonBasis> &terms) {
  ChainResult r;
  for (const auto &t : terms)
    r.dims.push_back(t.dim());
  r.index = int(terms.size());
  return r;
}

} // namespace

std::vector<EchelonBasis> lower_chain_terms(const AlgebraContext &ctx,
                                            std::optional<std::size_t> bound) {
  return run_chain(ctx, resolve_bound(ctx, bound), "lower",
                   [&](const EchelonBasis &t) { return bracket_with_group(ctx, t); });
}

ChainResult lower_chain(const AlgebraContext &ctx, std::optional<std::size_t> bound) {
  return summarize(lower_chain_terms(ctx, bound));
}

std::vector<EchelonBasis> upper_chain_terms(const AlgebraContext &ctx,
                                            std::optional<std::size_t> bound) {
  return run_chain(ctx, resolve_bound(ctx, bound), "upper", [&](const EchelonBasis &t) {
    return ideal_closure(ctx, bracket_with_group(ctx, t));
  });
}

ChainResult upper_chain(const AlgebraContext &ctx, std::optional<std::size_t> bound) {
  return summarize(upper_chain_terms(ctx, bound));
}

EchelonBasis ideal_closure(const AlgebraContext &ctx, EchelonBasis seed) {
  const auto &gens = ctx.group().generators();
  std::deque<AlgebraElement> work(seed.rows().begin(), seed.rows().end());
  while (!work.empty() && !seed.full()) {
    const AlgebraElement w = std::move(work.front());
    work.pop_front();
    for (Elem s : gens) {
      for (auto product : {ctx.right_mul(w, s), ctx.left_mul(s, w)}) {
        if (seed.insert(product))
          work.push_back(std::move(product));
      }
    }
  }
  return seed;
}

SeriesReport compute_series(const AlgebraContext &ctx, const std::string &group_name,
                            std::optional<std::size_t> bound) {
  const auto lower = lower_chain(ctx, bound);
  const auto upper = upper_chain(ctx, bound);
  return SeriesReport{ctx.p(), group_name, lower.dims, upper.dims, lower.index, upper.index};
}

std::optional<int> brute_force_t_lower(const AlgebraContext &ctx, std::size_t max_weight) {
  const Group &G = ctx.group();
  if (G.order() > oracle_max_order)
    throw Error(Errc::ScaleExceeded, "brute-force oracle limited to |G| <= " +
                                         std::to_string(oracle_max_order) + ", got " +
                                         std::to_string(G.order()));

  // Tuples (g1..gn) whose commutator enlarged the weight-n span.
  std::vector<std::vector<Elem>> frontier;
  {
    EchelonBasis span(ctx);
    for (std::size_t g = 0; g < G.order(); ++g)
      if (span.insert(left_normed(ctx, std::vector<Elem>{Elem(g)})))
        frontier.push_back({Elem(g)});
  }
  for (std::size_t weight = 2; weight <= max_weight; ++weight) {
    EchelonBasis span(ctx);
    std::vector<std::vector<Elem>> next;
    for (const auto &prefix : frontier) {
      for (std::size_t g = 0; g < G.order(); ++g) {
        auto tuple = prefix;
        tuple.push_back(Elem(g));
        const auto c = left_normed(ctx, tuple);
        if (!c.is_zero() && span.insert(c))
          next.push_back(std::move(tuple));
      }
    }
    if (next.empty())
      return int(weight);
    frontier = std::move(next);
  }
  return std::nullopt;
}

} // namespace lienil
