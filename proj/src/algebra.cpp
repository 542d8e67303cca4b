#include "lienil/algebra.hpp"

#include <algorithm>

#include "lienil/error.hpp"

namespace lienil {

PrimeField::PrimeField(unsigned p) : p_(p), inv_(p, 0) {
  if (!is_prime(p) || p > 251)
    throw Error(Errc::InvalidPrime, "characteristic must be a prime below 256, got " +
                                      std::to_string(p));
  for (unsigned x = 1; x < p; ++x)
    for (unsigned y = 1; y < p; ++y)
      if (x * y % p == 1) {
        inv_[x] = Coeff(y);
        break;
      }
}

Coeff PrimeField::reduce(long long v) const {
  const long long p = p_;
  return Coeff(((v % p) + p) % p);
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Coeff c) { return c == 0; });
}

AlgebraContext::AlgebraContext(std::shared_ptr<const Group> group, unsigned p)
    : group_(std::move(group)), field_(p) {}

AlgebraElement AlgebraContext::zero() const {
  return AlgebraElement{std::vector<Coeff>(dim(), 0)};
}

AlgebraElement AlgebraContext::basis(Elem g) const {
  auto e = zero();
  e.coords[g] = 1;
  return e;
}

AlgebraElement AlgebraContext::monomial(std::initializer_list<Elem> word) const {
  return basis(group_->product(word));
}

AlgebraElement
AlgebraContext::combination(std::initializer_list<std::pair<long long, Elem>> terms) const {
  auto e = zero();
  for (const auto &[c, g] : terms)
    e.coords[g] = field_.add(e.coords[g], field_.reduce(c));
  return e;
}

AlgebraElement AlgebraContext::add(const AlgebraElement &u, const AlgebraElement &v) const {
  auto r = u;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] = field_.add(r.coords[i], v.coords[i]);
  return r;
}

AlgebraElement AlgebraContext::sub(const AlgebraElement &u, const AlgebraElement &v) const {
  auto r = u;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] = field_.sub(r.coords[i], v.coords[i]);
  return r;
}

AlgebraElement AlgebraContext::scale(Coeff c, const AlgebraElement &u) const {
  auto r = u;
  for (auto &x : r.coords)
    x = field_.mul(c, x);
  return r;
}

AlgebraElement AlgebraContext::right_mul(const AlgebraElement &u, Elem g) const {
  auto r = zero();
  for (std::size_t x = 0; x < u.coords.size(); ++x)
    if (u.coords[x])
      r.coords[group_->mul(Elem(x), g)] = u.coords[x];
  return r;
}

AlgebraElement AlgebraContext::left_mul(Elem g, const AlgebraElement &u) const {
  auto r = zero();
  for (std::size_t x = 0; x < u.coords.size(); ++x)
    if (u.coords[x])
      r.coords[group_->mul(g, Elem(x))] = u.coords[x];
  return r;
}

AlgebraElement ga_mul(const AlgebraContext &ctx, const AlgebraElement &u,
                      const AlgebraElement &v) {
  const Group &G = ctx.group();
  const std::size_t n = ctx.dim();
  const unsigned p = ctx.p();
  // Accumulate unreduced; 255*255*512 fits comfortably in 32 bits.
  std::vector<std::uint32_t> acc(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    const std::uint32_t ug = u.coords[g];
    if (!ug)
      continue;
    const Elem *row = G.table().data() + g * n;
    for (std::size_t h = 0; h < n; ++h)
      if (v.coords[h])
        acc[row[h]] += ug * v.coords[h];
  }
  AlgebraElement r;
  r.coords.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    r.coords[k] = Coeff(acc[k] % p);
  return r;
}

AlgebraElement
ga_mul(const AlgebraContext &ctx,
       std::initializer_list<std::reference_wrapper<const AlgebraElement>> factors) {
  auto r = ctx.one();
  for (const AlgebraElement &f : factors)
    r = ga_mul(ctx, r, f);
  return r;
}

AlgebraElement lie_bracket(const AlgebraContext &ctx, const AlgebraElement &u,
                           const AlgebraElement &v) {
  return ctx.sub(ga_mul(ctx, u, v), ga_mul(ctx, v, u));
}

AlgebraElement lie_bracket(const AlgebraContext &ctx, const AlgebraElement &u, Elem g) {
  const Group &G = ctx.group();
  const PrimeField &F = ctx.field();
  auto r = ctx.zero();
  for (std::size_t x = 0; x < u.coords.size(); ++x) {
    const Coeff c = u.coords[x];
    if (!c)
      continue;
    const Elem xg = G.mul(Elem(x), g);
    const Elem gx = G.mul(g, Elem(x));
    r.coords[xg] = F.add(r.coords[xg], c);
    r.coords[gx] = F.sub(r.coords[gx], c);
  }
  return r;
}

AlgebraElement left_normed(const AlgebraContext &ctx, std::span<const AlgebraElement> args) {
  if (args.empty())
    throw Error(Errc::EmptyArguments, "left-normed bracket needs at least one argument");
  AlgebraElement r = args.front();
  for (std::size_t i = 1; i < args.size(); ++i)
    r = lie_bracket(ctx, r, args[i]);
  return r;
}

AlgebraElement left_normed(const AlgebraContext &ctx, std::span<const Elem> args) {
  if (args.empty())
    throw Error(Errc::EmptyArguments, "left-normed bracket needs at least one argument");
  AlgebraElement r = ctx.basis(args.front());
  for (std::size_t i = 1; i < args.size(); ++i)
    r = lie_bracket(ctx, r, ctx.basis(args[i]));
  return r;
}

AlgebraElement hat(const AlgebraContext &ctx, Elem g) {
  const Group &G = ctx.group();
  auto r = ctx.zero();
  Elem x = Group::identity;
  do {
    r.coords[x] = ctx.field().add(r.coords[x], 1);
    x = G.mul(x, g);
  } while (x != Group::identity);
  return r;
}

Coeff augmentation(const AlgebraContext &ctx, const AlgebraElement &u) {
  unsigned s = 0;
  for (Coeff c : u.coords)
    s = (s + c) % ctx.p();
  return Coeff(s);
}

} // namespace lienil
