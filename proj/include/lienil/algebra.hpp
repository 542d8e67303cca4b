#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

using Coeff = std::uint8_t;

/// Prime field GF(p), p < 256.
class PrimeField {
public:
  explicit PrimeField(unsigned p);

  unsigned p() const noexcept { return p_; }
  Coeff add(Coeff x, Coeff y) const { return Coeff((x + y) % p_); }
  Coeff sub(Coeff x, Coeff y) const { return Coeff((x + p_ - y) % p_); }
  Coeff mul(Coeff x, Coeff y) const { return Coeff((unsigned(x) * y) % p_); }
  Coeff neg(Coeff x) const { return Coeff((p_ - x) % p_); }
  Coeff inv(Coeff x) const { return inv_[x]; }
  /// Reduces a signed integer into {0..p-1}.
  Coeff reduce(long long v) const;

private:
  unsigned p_;
  std::vector<Coeff> inv_;
};

/// Element of KG: coordinates over GF(p) indexed by group elements.
struct AlgebraElement {
  std::vector<Coeff> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  bool is_zero() const;
  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;
};

/// The group algebra GF(p)G. Cheap to copy; shares the underlying group.
class AlgebraContext {
public:
  AlgebraContext(std::shared_ptr<const Group> group, unsigned p);

  const Group &group() const noexcept { return *group_; }
  std::shared_ptr<const Group> group_ptr() const noexcept { return group_; }
  const PrimeField &field() const noexcept { return field_; }
  unsigned p() const noexcept { return field_.p(); }
  std::size_t dim() const noexcept { return group_->order(); }

  AlgebraElement zero() const;
  AlgebraElement one() const { return basis(Group::identity); }
  AlgebraElement basis(Elem g) const;
  /// Basis element of the product of a word of group elements.
  AlgebraElement monomial(std::initializer_list<Elem> word) const;
  /// sum of coeff * g over the listed terms; coefficients may be negative.
  AlgebraElement combination(std::initializer_list<std::pair<long long, Elem>> terms) const;

  AlgebraElement add(const AlgebraElement &u, const AlgebraElement &v) const;
  AlgebraElement sub(const AlgebraElement &u, const AlgebraElement &v) const;
  AlgebraElement scale(Coeff c, const AlgebraElement &u) const;

  /// u * g and g * u for a group element g (coordinate permutations).
  AlgebraElement right_mul(const AlgebraElement &u, Elem g) const;
  AlgebraElement left_mul(Elem g, const AlgebraElement &u) const;

private:
  std::shared_ptr<const Group> group_;
  PrimeField field_;
};

/// Group-ring convolution: (uv)_k = sum over g*h = k of u_g v_h.
AlgebraElement ga_mul(const AlgebraContext &ctx, const AlgebraElement &u,
                      const AlgebraElement &v);

/// Product of several elements, left to right.
AlgebraElement ga_mul(const AlgebraContext &ctx,
                      std::initializer_list<std::reference_wrapper<const AlgebraElement>> factors);

/// uv - vu
AlgebraElement lie_bracket(const AlgebraContext &ctx, const AlgebraElement &u,
                           const AlgebraElement &v);

/// [u, g] = ug - gu for a group element g, without a full convolution.
AlgebraElement lie_bracket(const AlgebraContext &ctx, const AlgebraElement &u, Elem g);

/// Left-normed [x1, ..., xn] = [[x1, ..., x(n-1)], xn]. Throws Errc::EmptyArguments.
AlgebraElement left_normed(const AlgebraContext &ctx, std::span<const AlgebraElement> args);

/// Left-normed bracket of group basis elements.
AlgebraElement left_normed(const AlgebraContext &ctx, std::span<const Elem> args);

/// Sum of the elements of the cyclic subgroup <g>.
AlgebraElement hat(const AlgebraContext &ctx, Elem g);

/// Coefficient sum.
Coeff augmentation(const AlgebraContext &ctx, const AlgebraElement &u);

} // namespace lienil
