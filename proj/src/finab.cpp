#include "momentforge/finab.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

const Partition kEmptyPartition;

std::uint64_t checked_order(const std::map<std::uint64_t, Partition>& comps)
{
  std::uint64_t order = 1;
  for (const auto& [p, parts] : comps)
    for (unsigned part : parts) {
      auto pk = checked_pow(p, part);
      auto next = pk ? checked_mul(order, *pk) : std::nullopt;
      if (!next)
        throw InputError("group order exceeds 64 bits");
      order = *next;
    }
  return order;
}

Partition conjugate(const Partition& lambda)
{
  Partition out(lambda.empty() ? 0 : lambda.front(), 0);
  for (unsigned part : lambda)
    for (unsigned j = 0; j < part; ++j)
      ++out[j];
  return out;
}

unsigned partition_size(const Partition& lambda)
{
  unsigned s = 0;
  for (unsigned part : lambda)
    s += part;
  return s;
}

// n(lambda) = sum_i (i-1) lambda_i
unsigned long n_statistic(const Partition& lambda)
{
  unsigned long s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    s += i * lambda[i];
  return s;
}

Integer aut_count_p(const Partition& lambda, std::uint64_t p)
{
  // |Aut| = p^{sum lambda'_i^2} prod_i prod_{j=1}^{m_i} (1 - p^{-j})
  unsigned long exponent = 0;
  for (unsigned c : conjugate(lambda))
    exponent += static_cast<unsigned long>(c) * c;
  Integer out = 1;
  std::size_t i = 0;
  while (i < lambda.size()) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i])
      ++j;
    const unsigned mult = static_cast<unsigned>(j - i);
    out *= q_pochhammer(p, mult);
    exponent -= static_cast<unsigned long>(mult) * (mult + 1) / 2;
    i = j;
  }
  return out * ipow(p, exponent);
}

unsigned long hom_exponent(const Partition& a, const Partition& b)
{
  unsigned long s = 0;
  for (unsigned x : a)
    for (unsigned y : b)
      s += std::min(x, y);
  return s;
}

// Partitions lambda containing mu with lambda/mu a vertical strip of size m.
std::vector<Partition> add_vertical_strip(const Partition& mu, unsigned m)
{
  std::vector<Partition> out;
  const std::size_t rows = mu.size() + m;
  Partition base = mu;
  base.resize(rows, 0);
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    Partition lambda = base;
    for (std::size_t i = 0; i < rows; ++i)
      if (pick[i])
        ++lambda[i];
    if (std::is_sorted(lambda.rbegin(), lambda.rend())) {
      while (!lambda.empty() && lambda.back() == 0)
        lambda.pop_back();
      out.push_back(std::move(lambda));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Partitions nu contained in lambda with lambda/nu a vertical strip (any size).
std::vector<Partition> remove_vertical_strips(const Partition& lambda)
{
  std::vector<Partition> out;
  const std::size_t rows = lambda.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows); ++mask) {
    Partition nu = lambda;
    for (std::size_t i = 0; i < rows; ++i)
      if (mask >> i & 1)
        --nu[i];
    if (std::is_sorted(nu.rbegin(), nu.rend())) {
      while (!nu.empty() && nu.back() == 0)
        nu.pop_back();
      out.push_back(std::move(nu));
    }
  }
  return out;
}

} // namespace

FinAbGroup::FinAbGroup(std::map<std::uint64_t, Partition> components)
{
  for (auto& [p, parts] : components) {
    if (parts.empty())
      continue;
    if (!is_prime(p))
      throw InputError("group component keyed by non-prime " + std::to_string(p));
    for (unsigned part : parts)
      if (part == 0)
        throw InputError("zero part in partition at prime " + std::to_string(p));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    components_.emplace(p, std::move(parts));
  }
  order_ = checked_order(components_);
}

FinAbGroup FinAbGroup::cyclic(std::uint64_t n)
{
  if (n == 0)
    throw InputError("cyclic group of order 0");
  std::map<std::uint64_t, Partition> comps;
  for (std::uint64_t p = 2; n > 1; ++p) {
    if (p > n / p) {
      comps[n].push_back(1);
      break;
    }
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k)
      comps[p].push_back(k);
  }
  return FinAbGroup(std::move(comps));
}

FinAbGroup FinAbGroup::elementary(std::uint64_t p, unsigned rank)
{
  return FinAbGroup({{p, Partition(rank, 1)}});
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::initializer_list<std::uint64_t> orders)
{
  FinAbGroup out;
  for (std::uint64_t n : orders)
    out = direct_sum(out, cyclic(n));
  return out;
}

const Partition& FinAbGroup::partition(std::uint64_t p) const
{
  auto it = components_.find(p);
  return it == components_.end() ? kEmptyPartition : it->second;
}

std::set<std::uint64_t> FinAbGroup::primes() const
{
  std::set<std::uint64_t> out;
  for (const auto& [p, parts] : components_)
    out.insert(p);
  return out;
}

bool FinAbGroup::is_semisimple() const
{
  for (const auto& [p, parts] : components_)
    for (unsigned part : parts)
      if (part != 1)
        return false;
  return true;
}

std::vector<std::uint64_t> FinAbGroup::cyclic_moduli() const
{
  std::vector<std::uint64_t> out;
  for (const auto& [p, parts] : components_)
    for (unsigned part : parts)
      out.push_back(*checked_pow(p, part));
  return out;
}

std::string FinAbGroup::to_string() const
{
  if (is_trivial())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (std::uint64_t m : cyclic_moduli()) {
    out << (first ? "" : " x ") << "Z/" << m;
    first = false;
  }
  return out.str();
}

std::strong_ordering operator<=>(const FinAbGroup& a, const FinAbGroup& b)
{
  if (auto c = a.order_ <=> b.order_; c != 0)
    return c;
  return a.components_ <=> b.components_;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b)
{
  auto comps = a.components();
  for (const auto& [p, parts] : b.components())
    comps[p].insert(comps[p].end(), parts.begin(), parts.end());
  return FinAbGroup(std::move(comps));
}

FinAbGroup semisimple_quotient(const FinAbGroup& a)
{
  std::map<std::uint64_t, Partition> comps;
  for (const auto& [p, parts] : a.components())
    comps[p] = Partition(parts.size(), 1);
  return FinAbGroup(std::move(comps));
}

void Measure::add(const FinAbGroup& g, const Rational& mass)
{
  if (mass < 0)
    throw InputError("negative mass " + momentforge::to_string(mass) + " at " + g.to_string());
  if (mass == 0)
    return;
  masses[g] += mass;
}

Rational Measure::mass(const FinAbGroup& g) const
{
  auto it = masses.find(g);
  return it == masses.end() ? Rational(0) : it->second;
}

Rational Measure::total() const
{
  Rational s = 0;
  for (const auto& [g, m] : masses)
    s += m;
  return s;
}

EnumerationBudget EnumerationBudget::parse(const std::string& setting)
{
  EnumerationBudget out;
  auto parse_u64 = [&](const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed budget value '" + text + "' in '" + setting + "'");
    return std::stoull(text);
  };
  if (setting.find('=') == std::string::npos) {
    out.max_target_order = parse_u64(setting);
    return out;
  }
  std::istringstream in(setting);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("malformed budget entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::uint64_t value = parse_u64(item.substr(eq + 1));
    if (key == "target")
      out.max_target_order = value;
    else if (key == "kernel")
      out.max_kernel_source_order = value;
    else if (key == "work")
      out.max_work = value;
    else
      throw InputError("unknown budget key '" + key + "'");
  }
  return out;
}

EnumerationBudget EnumerationBudget::from_environment()
{
  if (const char* env = std::getenv("MOMENTFORGE_BUDGET"); env && *env)
    return parse(env);
  return {};
}

std::vector<Partition> partitions_of(unsigned n)
{
  std::vector<Partition> out;
  Partition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<FinAbGroup> enumerate_groups(const std::set<std::uint64_t>& primes, std::uint64_t order_bound)
{
  if (order_bound == 0)
    throw InputError("order bound must be positive");
  for (std::uint64_t p : primes)
    if (!is_prime(p))
      throw InputError("non-prime " + std::to_string(p) + " in prime set");
  std::vector<FinAbGroup> out;
  std::vector<std::uint64_t> plist(primes.begin(), primes.end());
  std::map<std::uint64_t, Partition> comps;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t idx, std::uint64_t order) {
    if (idx == plist.size()) {
      out.emplace_back(comps);
      return;
    }
    const std::uint64_t p = plist[idx];
    std::uint64_t pk = 1;
    for (unsigned k = 0;; ++k) {
      for (const Partition& lambda : partitions_of(k)) {
        comps[p] = lambda;
        rec(idx + 1, order * pk);
      }
      comps.erase(p);
      auto next = checked_mul(pk, p);
      if (!next || *next > order_bound / order)
        break;
      pk = *next;
    }
  };
  rec(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinAbGroup> groups_of_order(const std::set<std::uint64_t>& primes, std::uint64_t order)
{
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t rest = order;
  for (std::uint64_t p : primes) {
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    factors.emplace_back(p, k);
  }
  if (rest != 1)
    return {};
  std::vector<FinAbGroup> out;
  std::map<std::uint64_t, Partition> comps;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == factors.size()) {
      out.emplace_back(comps);
      return;
    }
    for (const Partition& lambda : partitions_of(factors[idx].second)) {
      comps[factors[idx].first] = lambda;
      rec(idx + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Integer hom_count(const FinAbGroup& a, const FinAbGroup& b)
{
  Integer out = 1;
  for (const auto& [p, parts] : a.components())
    out *= ipow(p, hom_exponent(parts, b.partition(p)));
  return out;
}

Integer aut_count(const FinAbGroup& a)
{
  Integer out = 1;
  for (const auto& [p, parts] : a.components())
    out *= aut_count_p(parts, p);
  return out;
}

Integer hall_number_vertical_strip(const Partition& lambda, const Partition& mu, std::uint64_t p)
{
  if (mu.size() > lambda.size())
    return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const unsigned m_i = i < mu.size() ? mu[i] : 0;
    if (lambda[i] < m_i || lambda[i] - m_i > 1)
      return 0;
  }
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  const unsigned m = partition_size(lambda) - partition_size(mu);
  // g = p^{n(lambda)-n(mu)-n(1^m)} prod_i [a_i choose b_i]_{1/p}
  //   with a_i = lambda'_i - lambda'_{i+1}, b_i = lambda'_i - mu'_i.
  long exponent = static_cast<long>(n_statistic(lambda)) - static_cast<long>(n_statistic(mu))
      - static_cast<long>(m) * (static_cast<long>(m) - 1) / 2;
  Integer out = 1;
  for (std::size_t i = 0; i < lc.size(); ++i) {
    const unsigned a = lc[i] - (i + 1 < lc.size() ? lc[i + 1] : 0);
    const unsigned b = lc[i] - (i < mc.size() ? mc[i] : 0);
    if (b > a)
      return 0;
    out *= q_binomial(a, b, p);
    exponent -= static_cast<long>(b) * (a - b);
  }
  if (exponent < 0)
    throw ConsistencyError("negative exponent in Hall number");
  return out * ipow(p, static_cast<unsigned long>(exponent));
}

Integer sur_count(const FinAbGroup& a, const FinAbGroup& b)
{
  if (a.order() % b.order() != 0)
    return 0;
  Integer out = 1;
  for (const auto& [p, lambda] : b.components()) {
    const Partition& source = a.partition(p);
    Integer term_sum = 0;
    for (const Partition& nu : remove_vertical_strips(lambda)) {
      const unsigned d = partition_size(lambda) - partition_size(nu);
      Integer term = hall_number_vertical_strip(lambda, nu, p) * ipow(p, hom_exponent(source, nu))
          * ipow(p, static_cast<unsigned long>(d) * (d == 0 ? 0 : d - 1) / 2);
      if (d % 2)
        term_sum -= term;
      else
        term_sum += term;
    }
    out *= term_sum;
    if (out == 0)
      break;
  }
  return out;
}

TypeBasis prime_basis(const std::set<std::uint64_t>& primes)
{
  TypeBasis basis;
  for (std::uint64_t p : primes) {
    if (!is_prime(p))
      throw InputError("non-prime " + std::to_string(p) + " in prime basis");
    basis.types.push_back(SimpleType::abelian(p));
  }
  return basis;
}

namespace {

void check_prime_basis(const TypeBasis& basis)
{
  std::set<std::uint64_t> seen;
  for (const SimpleType& t : basis.types) {
    if (!t.is_abelian() || !is_prime(t.h()))
      throw InputError("basis entry " + t.describe() + " is not a prime field");
    if (!seen.insert(t.h()).second)
      throw InputError("prime " + std::to_string(t.h()) + " repeated in basis");
  }
}

} // namespace

MultiIndex semisimplify(const FinAbGroup& a, const TypeBasis& basis)
{
  check_prime_basis(basis);
  MultiIndex out(std::vector<unsigned>(basis.size(), 0));
  std::size_t covered = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = a.rank(basis[i].h());
    if (out[i])
      ++covered;
  }
  if (covered != a.components().size())
    throw InputError("group " + a.to_string() + " has a prime outside the basis");
  return out;
}

FinAbGroup semisimple_group(const TypeBasis& basis, const MultiIndex& k)
{
  check_prime_basis(basis);
  if (k.size() != basis.size())
    throw InputError("multi-index " + k.to_string() + " does not match basis size");
  std::map<std::uint64_t, Partition> comps;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (k[i])
      comps[basis[i].h()] = Partition(k[i], 1);
  return FinAbGroup(std::move(comps));
}

ExtensionTable extension_table(const FinAbGroup& n, const FinAbGroup& m)
{
  if (!n.is_semisimple())
    throw InputError("extension_table needs a semisimple kernel, got " + n.to_string());
  std::set<std::uint64_t> primes = n.primes();
  for (std::uint64_t p : m.primes())
    primes.insert(p);

  // Per prime: candidate middle partitions with their Hall numbers.
  struct Candidate {
    Partition lambda;
    Integer hall;
  };
  std::vector<std::pair<std::uint64_t, std::vector<Candidate>>> per_prime;
  for (std::uint64_t p : primes) {
    std::vector<Candidate> cands;
    for (Partition& lambda : add_vertical_strip(m.partition(p), n.rank(p))) {
      Integer g = hall_number_vertical_strip(lambda, m.partition(p), p);
      if (g != 0)
        cands.push_back({std::move(lambda), std::move(g)});
    }
    per_prime.emplace_back(p, std::move(cands));
  }

  const Integer scale = aut_count(m) * aut_count(n) * hom_count(m, n);
  ExtensionTable table;
  std::map<std::uint64_t, Partition> comps;
  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t idx, const Integer& hall) {
    if (idx == per_prime.size()) {
      FinAbGroup middle(comps);
      Rational entry = make_rational(hall * scale, aut_count(middle));
      if (entry.get_den() != 1)
        throw ConsistencyError("non-integer extension class count " + to_string(entry) + " for middle "
                               + middle.to_string());
      if (entry != 0)
        table.entries.emplace(middle, entry);
      return;
    }
    for (const Candidate& c : per_prime[idx].second) {
      comps[per_prime[idx].first] = c.lambda;
      rec(idx + 1, hall * c.hall);
    }
  };
  rec(0, Integer(1));
  return table;
}

} // namespace momentforge
