#include "lienil/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lienil/error.hpp"

namespace lienil {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0)
    throw Error(Errc::InvalidPermutation, "empty image list");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = images_[i];
    if (x < 1 || x > n)
      throw Error(Errc::InvalidPermutation,
                  "image " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    if (seen[x])
      throw Error(Errc::InvalidPermutation, "repeated image " + std::to_string(x));
    seen[x] = true;
  }
}

Subgroup::Subgroup(std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Group::Group(std::vector<Elem> table, std::vector<Elem> inverses,
             std::vector<Elem> generators, std::vector<std::string> names)
    : table_(std::move(table)), inv_(std::move(inverses)),
      gens_(std::move(generators)), names_(std::move(names)) {}

Elem Group::pow(Elem x, std::uint64_t k) const {
  Elem result = identity;
  Elem base = x;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != identity; y = mul(y, x))
    ++k;
  return k;
}

Elem Group::product(std::span<const Elem> word) const {
  Elem r = identity;
  for (Elem x : word)
    r = mul(r, x);
  return r;
}

bool Group::is_abelian() const {
  for (Elem x : gens_)
    for (Elem y : gens_)
      if (mul(x, y) != mul(y, x))
        return false;
  return true;
}

Subgroup Group::whole() const {
  std::vector<Elem> all(order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(all));
}

namespace {

std::string generator_symbol(std::size_t i) {
  if (i < 26)
    return std::string(1, char('a' + i));
  return "x" + std::to_string(i + 1);
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t> &v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v)
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

} // namespace

Group build_group(std::span<const Permutation> generators, std::size_t max_order) {
  if (generators.empty())
    throw Error(Errc::InvalidPermutation, "no generators");
  const std::size_t degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error(Errc::DegreeMismatch, "generators of unequal degree");

  const std::size_t ngens = generators.size();
  using Points = std::vector<std::uint32_t>;
  std::vector<Points> elems;
  std::unordered_map<Points, Elem, VectorHash> index;
  // Right multiplication by each generator, and the BFS tree (parent, letter).
  std::vector<std::vector<Elem>> right(ngens);
  std::vector<Elem> parent;
  std::vector<std::size_t> letter;
  std::vector<std::string> names;

  Points id(degree);
  std::iota(id.begin(), id.end(), 0u);
  elems.push_back(id);
  index.emplace(id, 0);
  parent.push_back(0);
  letter.push_back(0);
  names.emplace_back("1");

  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (std::size_t k = 0; k < ngens; ++k) {
      Points next(degree);
      for (std::size_t i = 0; i < degree; ++i)
        next[i] = generators[k].apply0(elems[cur][i]);
      auto [it, inserted] = index.try_emplace(next, Elem(elems.size()));
      if (inserted) {
        if (elems.size() >= max_order)
          throw Error(Errc::OrderExceeded,
                      "closure exceeds max order " + std::to_string(max_order));
        elems.push_back(std::move(next));
        parent.push_back(Elem(cur));
        letter.push_back(k);
        names.push_back(cur == 0 ? generator_symbol(k)
                                 : names[cur] + generator_symbol(k));
      }
      right[k].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n] = Elem(x);
    // BFS order guarantees parent[y] < y.
    for (std::size_t y = 1; y < n; ++y)
      table[x * n + y] = right[letter[y]][table[x * n + parent[y]]];
  }
  std::vector<Elem> inv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table[x * n + y] == 0) {
        inv[x] = Elem(y);
        break;
      }

  std::vector<Elem> gens;
  for (std::size_t k = 0; k < ngens; ++k)
    gens.push_back(right[k][0]);
  return Group(std::move(table), std::move(inv), std::move(gens), std::move(names));
}

Elem group_commutator(const Group &G, Elem x, Elem y) {
  return G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
}

Elem group_commutator(const Group &G, std::span<const Elem> args) {
  if (args.empty())
    return Group::identity;
  Elem r = args.front();
  for (std::size_t i = 1; i < args.size(); ++i)
    r = group_commutator(G, r, args[i]);
  return r;
}

Subgroup subgroup_generated(const Group &G, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  for (Elem s : seed)
    if (s != Group::identity)
      gens.push_back(s);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<bool> in(G.order(), false);
  std::vector<Elem> members{Group::identity};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      const Elem y = G.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return Subgroup(std::move(members));
}

Subgroup commutator_subgroup(const Group &G, const Subgroup &H, const Subgroup &K) {
  std::vector<bool> hit(G.order(), false);
  std::vector<Elem> seed;
  for (Elem x : H.members())
    for (Elem y : K.members()) {
      const Elem c = group_commutator(G, x, y);
      if (!hit[c]) {
        hit[c] = true;
        seed.push_back(c);
      }
    }
  return subgroup_generated(G, seed);
}

std::vector<Subgroup> lower_central_series(const Group &G) {
  const Subgroup all = G.whole();
  std::vector<Subgroup> series{all};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(G, series.back(), all);
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(std::span<const Subgroup> series) {
  return !series.empty() && series.back().is_trivial();
}

int nilpotency_class(std::span<const Subgroup> series) {
  if (!is_nilpotent(series))
    return -1;
  return int(series.size()) - 1;
}

std::vector<std::uint64_t> abelian_type(const Group &G, const Subgroup &H) {
  const auto &m = H.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (G.mul(m[i], m[j]) != G.mul(m[j], m[i]))
        throw Error(Errc::NotAbelian, "elements " + G.name_of(m[i]) + " and " +
                                          G.name_of(m[j]) + " do not commute");

  std::vector<std::uint64_t> invariants;
  for (std::uint64_t p : prime_divisors(H.order())) {
    // counts[k] = #{x in H : x^(p^k) = 1}; the p-part has log_p(counts[k]/counts[k-1])
    // cyclic factors of order at least p^k.
    std::vector<std::uint64_t> counts{1};
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      std::uint64_t c = 0;
      for (Elem x : m)
        if (G.pow(x, pk) == Group::identity)
          ++c;
      if (c == counts.back())
        break;
      counts.push_back(c);
    }
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::uint64_t ratio = counts[k] / counts[k - 1];
      std::size_t e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    // at_least[k-1] factors have order >= p^k; emit the partition descending.
    for (std::size_t k = at_least.size(); k >= 1; --k) {
      const std::size_t exact = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
      std::uint64_t q = 1;
      for (std::size_t i = 0; i < k; ++i)
        q *= p;
      invariants.insert(invariants.end(), exact, q);
    }
  }
  return invariants;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace lienil
