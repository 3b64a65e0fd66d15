#include "momentforge/nonab_oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

bool is_even(const std::array<std::uint8_t, 5>& images)
{
  unsigned inversions = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (images[i] > images[j])
        ++inversions;
  return inversions % 2 == 0;
}

// A5^k with elements encoded as base-60 digit strings of A5 indices.
class A5Power {
public:
  explicit A5Power(unsigned k) : k_(k)
  {
    const auto& elems = a5_elements();
    table_.resize(60 * 60);
    for (std::size_t a = 0; a < 60; ++a)
      for (std::size_t b = 0; b < 60; ++b) {
        const Perm5 c = elems[a] * elems[b];
        table_[a * 60 + b] = static_cast<std::uint8_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
      }
    identity_ = static_cast<std::uint8_t>(std::find(elems.begin(), elems.end(), Perm5{}) - elems.begin());
    size_ = 1;
    for (unsigned i = 0; i < k; ++i)
      size_ *= 60;
    identity_code_ = 0;
    for (unsigned i = 0, w = 1; i < k; ++i, w *= 60)
      identity_code_ += identity_ * w;
  }

  std::uint32_t size() const { return size_; }
  std::uint32_t identity() const { return identity_code_; }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const
  {
    std::uint32_t out = 0;
    for (unsigned i = 0, w = 1; i < k_; ++i, w *= 60)
      out += table_[(x / w % 60) * 60 + y / w % 60] * w;
    return out;
  }

  std::uint32_t power(std::uint32_t x, unsigned n) const
  {
    std::uint32_t out = identity_code_;
    for (unsigned i = 0; i < n; ++i)
      out = mul(out, x);
    return out;
  }

  bool commute(std::uint32_t x, std::uint32_t y) const
  {
    for (unsigned i = 0, w = 1; i < k_; ++i, w *= 60) {
      const std::uint32_t a = x / w % 60;
      const std::uint32_t b = y / w % 60;
      if (table_[a * 60 + b] != table_[b * 60 + a])
        return false;
    }
    return true;
  }

  std::size_t generated_size(const std::vector<std::uint32_t>& gens) const
  {
    std::vector<bool> seen(size_, false);
    std::vector<std::uint32_t> frontier{identity_code_};
    seen[identity_code_] = true;
    std::size_t count = 1;
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (std::uint32_t g : gens) {
        const std::uint32_t y = mul(x, g);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          frontier.push_back(y);
        }
      }
    }
    return count;
  }

private:
  unsigned k_;
  std::vector<std::uint8_t> table_;
  std::uint8_t identity_ = 0;
  std::uint32_t identity_code_ = 0;
  std::uint32_t size_ = 1;
};

struct A5Hom {
  std::uint32_t a;  // image of the order-5 generator
  std::uint32_t b;  // image of the involution
};

// Image pairs of the presentation <a, b | a^5 = b^2 = (ab)^3 = 1>.
std::vector<A5Hom> homs_from_a5(const A5Power& target)
{
  std::vector<std::uint32_t> fives;
  std::vector<std::uint32_t> twos;
  for (std::uint32_t x = 0; x < target.size(); ++x) {
    if (target.power(x, 5) == target.identity())
      fives.push_back(x);
    if (target.power(x, 2) == target.identity())
      twos.push_back(x);
  }
  std::vector<A5Hom> out;
  for (std::uint32_t a : fives)
    for (std::uint32_t b : twos)
      if (target.power(target.mul(a, b), 3) == target.identity())
        out.push_back({a, b});
  return out;
}

bool images_commute(const A5Power& g, const A5Hom& f, const A5Hom& h)
{
  return g.commute(f.a, h.a) && g.commute(f.a, h.b) && g.commute(f.b, h.a) && g.commute(f.b, h.b);
}

} // namespace

Perm5 Perm5::from_images(std::array<std::uint8_t, 5> images)
{
  std::array<std::uint8_t, 5> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint8_t i = 0; i < 5; ++i)
    if (sorted[i] != i)
      throw InputError("Perm5 images are not a permutation of {0..4}");
  if (!is_even(images))
    throw InputError("Perm5 must be an even permutation");
  Perm5 out;
  out.images = images;
  return out;
}

Perm5 operator*(const Perm5& a, const Perm5& b)
{
  Perm5 out;
  for (int i = 0; i < 5; ++i)
    out.images[i] = a.images[b.images[i]];
  return out;
}

const std::vector<Perm5>& a5_elements()
{
  static const std::vector<Perm5> elements = [] {
    std::vector<Perm5> out;
    std::array<std::uint8_t, 5> p{0, 1, 2, 3, 4};
    do {
      if (is_even(p))
        out.push_back(Perm5::from_images(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return elements;
}

Integer hom_a5_count(unsigned k)
{
  if (k > 2)
    throw ResourceError("hom_a5_count supports k <= 2, got " + std::to_string(k));
  return static_cast<unsigned long>(homs_from_a5(A5Power(k)).size());
}

Integer sur_a5_bruteforce(unsigned e, unsigned k)
{
  if (e > 2 || k > 2)
    throw ResourceError("sur_a5_bruteforce supports e, k <= 2, got e=" + std::to_string(e) + " k="
                        + std::to_string(k));
  const A5Power target(k);
  const std::vector<A5Hom> homs = homs_from_a5(target);

  Integer count = 0;
  std::vector<std::size_t> chosen;
  std::function<void()> rec = [&] {
    if (chosen.size() == e) {
      std::vector<std::uint32_t> gens;
      for (std::size_t i : chosen) {
        gens.push_back(homs[i].a);
        gens.push_back(homs[i].b);
      }
      if (target.generated_size(gens) == target.size())
        ++count;
      return;
    }
    for (std::size_t i = 0; i < homs.size(); ++i) {
      bool ok = true;
      for (std::size_t j : chosen)
        if (!images_commute(target, homs[j], homs[i])) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      chosen.push_back(i);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  return count;
}

} // namespace momentforge
