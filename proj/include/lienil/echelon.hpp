#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lienil/algebra.hpp"

namespace lienil {

/// Fully reduced row-echelon basis of a subspace of GF(p)^n. Rows are kept
/// sorted by pivot; every pivot entry is 1 and every other row is zero in
/// that column.
class EchelonBasis {
public:
  EchelonBasis(unsigned p, std::size_t ambient_dim);
  explicit EchelonBasis(const AlgebraContext &ctx)
      : EchelonBasis(ctx.p(), ctx.dim()) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  bool empty() const noexcept { return rows_.empty(); }
  bool full() const noexcept { return rows_.size() == n_; }
  unsigned p() const noexcept { return field_.p(); }

  const std::vector<AlgebraElement> &rows() const noexcept { return rows_; }
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  /// Remainder of u modulo the span.
  AlgebraElement reduce(AlgebraElement u) const;
  bool contains(const AlgebraElement &u) const;

  /// Adds u to the span; returns whether the dimension grew.
  bool insert(AlgebraElement u);

  friend bool operator==(const EchelonBasis &a, const EchelonBasis &b) {
    return a.p() == b.p() && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  void reduce_in_place(std::span<Coeff> v) const;
  /// v -= f * row
  void axpy(std::span<Coeff> v, Coeff f, std::span<const Coeff> row) const;

  PrimeField field_;
  std::size_t n_;
  std::vector<AlgebraElement> rows_;
  std::vector<std::size_t> pivots_;
  // neg_mul_[f][x] = -f*x mod p
  std::vector<std::vector<Coeff>> neg_mul_;
};

} // namespace lienil
