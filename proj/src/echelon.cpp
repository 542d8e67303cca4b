#include "lienil/echelon.hpp"

#include <algorithm>

namespace lienil {

EchelonBasis::EchelonBasis(unsigned p, std::size_t ambient_dim)
    : field_(p), n_(ambient_dim), neg_mul_(p, std::vector<Coeff>(p, 0)) {
  for (unsigned f = 0; f < p; ++f)
    for (unsigned x = 0; x < p; ++x)
      neg_mul_[f][x] = field_.neg(field_.mul(Coeff(f), Coeff(x)));
}

void EchelonBasis::axpy(std::span<Coeff> v, Coeff f, std::span<const Coeff> row) const {
  const std::size_t n = v.size();
  if (field_.p() == 2) {
    for (std::size_t i = 0; i < n; ++i)
      v[i] ^= row[i];
    return;
  }
  const Coeff p = Coeff(field_.p());
  const Coeff *t = neg_mul_[f].data();
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = unsigned(v[i]) + t[row[i]];
    v[i] = Coeff(s >= p ? s - p : s);
  }
}

void EchelonBasis::reduce_in_place(std::span<Coeff> v) const {
  // Rows vanish at each other's pivots, so v[pivot] is untouched by other
  // rows and the eliminations commute.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Coeff f = v[pivots_[r]];
    if (f)
      axpy(v, f, rows_[r].coords);
  }
}

AlgebraElement EchelonBasis::reduce(AlgebraElement u) const {
  reduce_in_place(u.coords);
  return u;
}

bool EchelonBasis::contains(const AlgebraElement &u) const {
  return reduce(u).is_zero();
}

bool EchelonBasis::insert(AlgebraElement u) {
  if (full())
    return false;
  reduce_in_place(u.coords);
  auto nz = std::find_if(u.coords.begin(), u.coords.end(), [](Coeff c) { return c != 0; });
  if (nz == u.coords.end())
    return false;
  const std::size_t pivot = std::size_t(nz - u.coords.begin());
  const Coeff s = field_.inv(*nz);
  if (s != 1)
    for (auto &x : u.coords)
      x = field_.mul(s, x);

  for (auto &row : rows_) {
    const Coeff f = row.coords[pivot];
    if (f)
      axpy(row.coords, f, u.coords);
  }

  const auto pos = std::size_t(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) -
                               pivots_.begin());
  rows_.insert(rows_.begin() + std::ptrdiff_t(pos), std::move(u));
  pivots_.insert(pivots_.begin() + std::ptrdiff_t(pos), pivot);
  return true;
}

} // namespace lienil
