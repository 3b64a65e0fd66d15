// Exhaustive oracles over explicit group elements. Elements of a group are
// mixed-radix indices against its canonical cyclic decomposition.

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "momentforge/errors.hpp"
#include "momentforge/finab.hpp"

namespace momentforge {

namespace {

class ElementSpace {
public:
  explicit ElementSpace(const FinAbGroup& g) : group_(g), moduli_(g.cyclic_moduli())
  {
    size_ = 1;
    for (std::uint64_t n : moduli_) {
      strides_.push_back(size_);
      size_ *= n;
    }
  }

  const FinAbGroup& group() const { return group_; }
  std::uint64_t size() const { return size_; }
  std::size_t factors() const { return moduli_.size(); }
  std::uint64_t modulus(std::size_t i) const { return moduli_[i]; }
  std::uint64_t generator(std::size_t i) const { return strides_[i]; }
  std::uint64_t digit(std::uint64_t x, std::size_t i) const { return x / strides_[i] % moduli_[i]; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const
  {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      out += (digit(x, i) + digit(y, i)) % moduli_[i] * strides_[i];
    return out;
  }

  std::uint64_t scale(std::uint64_t x, std::uint64_t k) const
  {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      out += digit(x, i) * (k % moduli_[i]) % moduli_[i] * strides_[i];
    return out;
  }

  std::uint64_t element_order(std::uint64_t x) const
  {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const std::uint64_t d = digit(x, i);
      const std::uint64_t n = moduli_[i];
      const std::uint64_t o = n / std::gcd(n, d);
      ord = std::lcm(ord, o);
    }
    return ord;
  }

private:
  FinAbGroup group_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

// Precomputed addition for targets small enough to enumerate.
class AdditionTable {
public:
  explicit AdditionTable(const ElementSpace& s) : n_(s.size()), table_(n_ * n_)
  {
    for (std::uint64_t x = 0; x < n_; ++x)
      for (std::uint64_t y = 0; y < n_; ++y)
        table_[x * n_ + y] = static_cast<std::uint32_t>(s.add(x, y));
  }
  std::uint32_t operator()(std::uint64_t x, std::uint64_t y) const { return table_[x * n_ + y]; }

private:
  std::uint64_t n_;
  std::vector<std::uint32_t> table_;
};

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const
  {
    std::size_t seed = v.size();
    for (std::uint64_t w : v)
      seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

struct Subgroup {
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> elements;
};

class WorkMeter {
public:
  WorkMeter(std::uint64_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}
  void charge(std::uint64_t units)
  {
    used_ += units;
    if (used_ > limit_)
      throw ResourceError(what_ + ": enumeration work exceeds budget of " + std::to_string(limit_));
  }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t x)
{
  return bits[x >> 6] >> (x & 63) & 1;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t x)
{
  bits[x >> 6] |= std::uint64_t{1} << (x & 63);
}

Subgroup trivial_subgroup(std::uint64_t n)
{
  Subgroup h;
  h.bits.assign((n + 63) / 64, 0);
  set_bit(h.bits, 0);
  h.elements.push_back(0);
  return h;
}

// <H, x>
Subgroup join(const Subgroup& h, std::uint32_t x, const AdditionTable& add, WorkMeter& meter)
{
  Subgroup out = h;
  std::uint32_t y = x;
  while (!test_bit(h.bits, y)) {
    for (std::uint32_t e : h.elements) {
      const std::uint32_t z = add(e, y);
      set_bit(out.bits, z);
      out.elements.push_back(z);
    }
    y = add(y, x);
  }
  meter.charge(out.elements.size());
  return out;
}

void check_target(const FinAbGroup& b, const EnumerationBudget& budget, const char* what)
{
  if (b.order() > budget.max_target_order)
    throw ResourceError(std::string(what) + ": group " + b.to_string() + " of order " + std::to_string(b.order())
                        + " exceeds the target budget " + std::to_string(budget.max_target_order));
}

/* Counts tuples (x_1..x_n) of elements of B, x_i drawn from candidates[i],
 * memoized on the generated subgroup <x_1..x_i>.
 *   surjective: count tuples generating B
 *   injective:  count tuples with |<x_1..x_i>| = prod_{j<=i} orders[j] at every step */
class TupleCounter {
public:
  enum class Mode { surjective, injective };

  TupleCounter(const ElementSpace& space, std::vector<std::vector<std::uint32_t>> candidates,
               std::vector<std::uint64_t> orders, Mode mode, WorkMeter& meter)
      : space_(space), add_(space), candidates_(std::move(candidates)), orders_(std::move(orders)), mode_(mode),
        meter_(meter), memo_(candidates_.size() + 1)
  {
    // Saturating suffix products bound the size any completion can reach.
    suffix_.assign(orders_.size() + 1, 1);
    for (std::size_t i = orders_.size(); i-- > 0;) {
      auto next = checked_mul(suffix_[i + 1], orders_[i]);
      suffix_[i] = next ? *next : UINT64_MAX;
    }
  }

  Integer run() { return count(0, trivial_subgroup(space_.size())); }

private:
  Integer count(std::size_t level, const Subgroup& h)
  {
    const std::uint64_t hsize = h.elements.size();
    if (level == candidates_.size())
      return mode_ == Mode::injective || hsize == space_.size() ? 1 : 0;
    if (mode_ == Mode::surjective) {
      auto reach = checked_mul(hsize, suffix_[level]);
      if (reach && *reach < space_.size())
        return 0;
    }
    auto& memo = memo_[level];
    if (auto it = memo.find(h.bits); it != memo.end())
      return it->second;
    Integer total = 0;
    for (std::uint32_t x : candidates_[level]) {
      Subgroup next = join(h, x, add_, meter_);
      if (mode_ == Mode::injective && next.elements.size() != hsize * orders_[level])
        continue;
      total += count(level + 1, next);
    }
    memo.emplace(h.bits, total);
    return total;
  }

  const ElementSpace& space_;
  AdditionTable add_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint64_t> orders_;
  Mode mode_;
  WorkMeter& meter_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::unordered_map<std::vector<std::uint64_t>, Integer, BitsHash>> memo_;
};

std::vector<std::uint32_t> killed_by(const ElementSpace& b, std::uint64_t n)
{
  std::vector<std::uint32_t> out;
  for (std::uint64_t x = 0; x < b.size(); ++x)
    if (b.scale(x, n) == 0)
      out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

// Isomorphism type from the sizes of p^j-torsion: |G[p^j]| = p^{sum_i min(lambda_i, j)}.
// torsion(p^j) returns |G[p^j]|; exponents never exceed those of the ambient space.
template <class Torsion>
FinAbGroup type_from_torsion(const ElementSpace& space, Torsion torsion)
{
  std::map<std::uint64_t, Partition> comps;
  for (const auto& [p, parts] : space.group().components()) {
    const unsigned top = parts.front();
    Partition conj;
    unsigned prev_log = 0;
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= top; ++j) {
      pj *= p;
      std::uint64_t killed = torsion(pj);
      unsigned log = 0;
      while (killed % p == 0 && killed > 1) {
        killed /= p;
        ++log;
      }
      if (killed != 1)
        throw ConsistencyError("torsion count is not a power of " + std::to_string(p));
      if (log > prev_log)
        conj.push_back(log - prev_log);
      prev_log = log;
    }
    Partition lambda(conj.empty() ? 0 : conj.front(), 0);
    for (unsigned c : conj)
      for (unsigned i = 0; i < c; ++i)
        ++lambda[i];
    if (!lambda.empty())
      comps[p] = lambda;
  }
  return FinAbGroup(std::move(comps));
}

FinAbGroup subgroup_type(const ElementSpace& space, const Subgroup& k)
{
  return type_from_torsion(space, [&](std::uint64_t pj) {
    std::uint64_t n = 0;
    for (std::uint64_t x : k.elements)
      if (space.scale(x, pj) == 0)
        ++n;
    return n;
  });
}

// X/K via |(X/K)[p^j]| = #{x : p^j x in K} / |K|.
FinAbGroup quotient_type(const ElementSpace& space, const Subgroup& k)
{
  return type_from_torsion(space, [&](std::uint64_t pj) {
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < space.size(); ++x)
      if (test_bit(k.bits, space.scale(x, pj)))
        ++n;
    return n / k.elements.size();
  });
}

// All subgroups of X whose order is `order`, by growing subgroups one generator at a time.
std::vector<Subgroup> subgroups_of_order(const ElementSpace& xs, const AdditionTable& add, std::uint64_t order,
                                         WorkMeter& meter)
{
  std::vector<Subgroup> layer{trivial_subgroup(xs.size())};
  std::vector<Subgroup> out;
  std::unordered_map<std::vector<std::uint64_t>, bool, BitsHash> seen;
  seen.emplace(layer.front().bits, true);
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : layer) {
      if (h.elements.size() == order) {
        out.push_back(h);
        continue;
      }
      for (std::uint64_t x = 1; x < xs.size(); ++x) {
        if (test_bit(h.bits, x))
          continue;
        Subgroup bigger = join(h, static_cast<std::uint32_t>(x), add, meter);
        if (order % bigger.elements.size() != 0 || !seen.emplace(bigger.bits, true).second)
          continue;
        next.push_back(std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/* Surjections X ->> M grouped by kernel type. Each K <= X with X/K ~ M is
 * the kernel of exactly |Aut M| surjections, so it suffices to enumerate
 * subgroups of index |M|. */
std::map<FinAbGroup, Integer> kernel_types_impl(const FinAbGroup& x, const FinAbGroup& m,
                                                const EnumerationBudget& budget, std::uint64_t source_limit,
                                                const char* what)
{
  check_target(m, budget, what);
  if (x.order() > source_limit)
    throw ResourceError(std::string(what) + ": source " + x.to_string() + " exceeds the source budget "
                        + std::to_string(source_limit));
  std::map<FinAbGroup, Integer> out;
  if (x.order() % m.order() != 0)
    return out;
  WorkMeter meter(budget.max_work, what);
  const ElementSpace xs(x);
  const AdditionTable add(xs);
  Integer aut_m;
  for (const Subgroup& k : subgroups_of_order(xs, add, x.order() / m.order(), meter)) {
    meter.charge(xs.size() * (xs.factors() + 1));
    if (quotient_type(xs, k) != m)
      continue;
    if (aut_m == 0)
      aut_m = aut_count_bruteforce(m, budget);
    out[subgroup_type(xs, k)] += aut_m;
  }
  return out;
}

} // namespace

Integer hom_count_bruteforce(const FinAbGroup& a, const FinAbGroup& b, const EnumerationBudget& budget)
{
  check_target(b, budget, "hom_count_bruteforce");
  const ElementSpace as(a);
  const ElementSpace bs(b);
  Integer out = 1;
  for (std::size_t i = 0; i < as.factors(); ++i)
    out *= static_cast<unsigned long>(killed_by(bs, as.modulus(i)).size());
  return out;
}

Integer aut_count_bruteforce(const FinAbGroup& a, const EnumerationBudget& budget)
{
  check_target(a, budget, "aut_count_bruteforce");
  const ElementSpace as(a);
  std::vector<std::vector<std::uint32_t>> candidates(as.factors());
  std::vector<std::uint64_t> orders(as.factors());
  for (std::size_t i = 0; i < as.factors(); ++i) {
    orders[i] = as.modulus(i);
    for (std::uint64_t x = 0; x < as.size(); ++x)
      if (as.element_order(x) == orders[i])
        candidates[i].push_back(static_cast<std::uint32_t>(x));
  }
  WorkMeter meter(budget.max_work, "aut_count_bruteforce");
  TupleCounter counter(as, std::move(candidates), std::move(orders), TupleCounter::Mode::injective, meter);
  return counter.run();
}

Integer sur_bruteforce(const FinAbGroup& a, const FinAbGroup& b, const EnumerationBudget& budget)
{
  if (a.order() % b.order() != 0)
    return 0;
  check_target(b, budget, "sur_bruteforce");
  const ElementSpace as(a);
  const ElementSpace bs(b);
  std::vector<std::vector<std::uint32_t>> candidates(as.factors());
  std::vector<std::uint64_t> orders(as.factors());
  for (std::size_t i = 0; i < as.factors(); ++i) {
    orders[i] = as.modulus(i);
    candidates[i] = killed_by(bs, orders[i]);
  }
  WorkMeter meter(budget.max_work, "sur_bruteforce");
  TupleCounter counter(bs, std::move(candidates), std::move(orders), TupleCounter::Mode::surjective, meter);
  return counter.run();
}

std::map<FinAbGroup, Integer> surjection_kernel_types(const FinAbGroup& x, const FinAbGroup& m,
                                                      const EnumerationBudget& budget)
{
  return kernel_types_impl(x, m, budget, budget.max_kernel_source_order, "surjection_kernel_types");
}

Integer kernel_pair_count(const FinAbGroup& x, const FinAbGroup& m, const FinAbGroup& n,
                          const EnumerationBudget& budget)
{
  if (!n.is_semisimple())
    throw InputError("kernel_pair_count needs a semisimple N, got " + n.to_string());
  Integer total = 0;
  for (const auto& [kernel, count] : kernel_types_impl(x, m, budget, budget.max_kernel_source_order,
                                                       "kernel_pair_count"))
    total += count * sur_bruteforce(semisimple_quotient(kernel), n, budget);
  return total;
}

ExtensionTable extension_table_bruteforce(const FinAbGroup& n, const FinAbGroup& m, const EnumerationBudget& budget)
{
  if (!n.is_semisimple())
    throw InputError("extension_table needs a semisimple kernel, got " + n.to_string());
  const auto order = checked_mul(n.order(), m.order());
  if (!order || *order > budget.max_target_order)
    throw ResourceError("extension_table_bruteforce: |N||M| exceeds the target budget "
                        + std::to_string(budget.max_target_order));
  std::set<std::uint64_t> primes = n.primes();
  for (std::uint64_t p : m.primes())
    primes.insert(p);

  const Integer aut_n = aut_count_bruteforce(n, budget);
  const Integer hom_mn = hom_count_bruteforce(m, n, budget);
  ExtensionTable table;
  for (const FinAbGroup& middle : groups_of_order(primes, *order)) {
    const auto kernels = kernel_types_impl(middle, m, budget, budget.max_target_order, "extension_table_bruteforce");
    auto it = kernels.find(n);
    if (it == kernels.end())
      continue;
    // pairs (iota, pi) with im iota = ker pi: each pi with ker pi ~ N pairs with |Aut N| embeddings
    const Integer pairs = it->second * aut_n;
    Rational entry = make_rational(pairs * hom_mn, aut_count_bruteforce(middle, budget));
    if (entry.get_den() != 1)
      throw ConsistencyError("non-integer extension class count " + to_string(entry) + " for middle "
                             + middle.to_string());
    table.entries.emplace(middle, entry);
  }
  return table;
}

} // namespace momentforge
