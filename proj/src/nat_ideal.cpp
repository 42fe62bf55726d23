#include "subtractive/nat_ideal.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "subtractive/errors.hpp"

namespace subtractive {

namespace {

// reach[m] is true iff m is an ℕ-combination of gens, for m < limit.
std::vector<bool> combinations_below(std::span<const Natural> gens, Natural limit) {
  std::vector<bool> reach(limit, false);
  if (limit > 0) reach[0] = true;
  for (Natural m = 1; m < limit; ++m)
    for (Natural g : gens)
      if (g <= m && reach[m - g]) {
        reach[m] = true;
        break;
      }
  return reach;
}

Natural radical_of(Natural d) {
  Natural out = 1;
  for (Natural p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      out *= p;
      while (d % p == 0) d /= p;
    }
  return d > 1 ? out * d : out;
}

Natural pow_mod(Natural base, unsigned exp, Natural mod) {
  Natural result = 1 % mod;
  base %= mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1U) result = static_cast<Natural>((static_cast<unsigned __int128>(result) * base) % mod);
    base = static_cast<Natural>((static_cast<unsigned __int128>(base) * base) % mod);
  }
  return result;
}

}  // namespace

NatIdeal::NatIdeal(std::vector<Natural> generators) {
  std::erase(generators, Natural{0});
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) {
    window_ = {true};
    return;
  }
  if (generators.back() > kMaxNatGenerator)
    throw InvalidParam("generator " + std::to_string(generators.back()) + " exceeds maximum " +
                       std::to_string(kMaxNatGenerator));

  // drop generators already reachable from smaller ones
  for (Natural g : generators) {
    std::vector<Natural> smaller;
    for (Natural h : generators_)
      if (h < g) smaller.push_back(h);
    if (smaller.empty() || !combinations_below(smaller, g + 1)[g]) generators_.push_back(g);
  }

  divisor_ = 0;
  for (Natural g : generators_) divisor_ = std::gcd(divisor_, g);
  const Natural scaled_max = generators_.back() / divisor_;
  bound_ = divisor_ * (scaled_max * scaled_max + scaled_max);

  const Natural top = generators_.back();
  auto reach = combinations_below(generators_, bound_ + top);
  // every multiple of d in [B, B + max generator) reachable => the tail rule holds beyond B
  for (Natural m = bound_; m < bound_ + top; ++m)
    if (reach[m] != (m % divisor_ == 0))
      throw std::logic_error("Frobenius bound too small for " + render());
  window_.assign(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(bound_));

  conductor_ = 0;
  for (Natural m = bound_; m >= divisor_; m -= divisor_) {
    const Natural below = m - divisor_;
    if (below % divisor_ == 0 && !window_[below]) {
      conductor_ = m;
      break;
    }
  }
}

bool NatIdeal::contains(Natural m) const {
  if (m < bound_) return window_[m];
  return divisor_ != 0 && m % divisor_ == 0;
}

std::vector<Natural> NatIdeal::gaps() const {
  std::vector<Natural> out;
  if (divisor_ == 0) return out;
  for (Natural m = 0; m < bound_; m += divisor_)
    if (!window_[m]) out.push_back(m);
  return out;
}

std::string NatIdeal::render() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << "> = {0";
  if (is_zero()) {
    os << '}';
    return os.str();
  }
  for (Natural m = 1; m < conductor_; ++m)
    if (contains(m)) os << ',' << m;
  for (Natural k = 0; k < 3; ++k)
    if (conductor_ + k * divisor_ != 0) os << ',' << conductor_ + k * divisor_;
  os << ",...}";
  const auto missing = gaps();
  if (missing.empty()) {
    if (divisor_ == 1)
      os << " (all of N)";
    else
      os << " (multiples of " << divisor_ << ')';
  } else {
    if (divisor_ == 1)
      os << " (cofinite, missing {";
    else
      os << " (eventually multiples of " << divisor_ << ", missing {";
    for (std::size_t i = 0; i < missing.size(); ++i) os << (i ? "," : "") << missing[i];
    os << "})";
  }
  return os.str();
}

NatIdeal nat_ideal(std::vector<Natural> generators) { return NatIdeal(std::move(generators)); }

bool nat_subset(const NatIdeal& a, const NatIdeal& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  const Natural limit = std::max(a.bound(), b.bound());
  for (Natural m = 0; m < limit; ++m)
    if (a.contains(m) && !b.contains(m)) return false;
  return a.divisor() % b.divisor() == 0;
}

NatIdeal nat_sum(const NatIdeal& a, const NatIdeal& b) {
  std::vector<Natural> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return NatIdeal(std::move(gens));
}

NatIdeal nat_product(const NatIdeal& a, const NatIdeal& b) {
  std::vector<Natural> gens;
  for (Natural x : a.generators())
    for (Natural y : b.generators()) gens.push_back(x * y);
  return NatIdeal(std::move(gens));
}

NatIdeal nat_intersection(std::span<const NatIdeal> ideals) {
  if (ideals.empty()) throw EmptyFamily();
  Natural divisor = 1;
  Natural bound = 0;
  for (const auto& i : ideals) {
    if (i.is_zero()) return NatIdeal();
    divisor = std::lcm(divisor, i.divisor());
    bound = std::max(bound, i.bound());
  }
  return nat_ideal_from_membership(
      [&](Natural m) {
        for (const auto& i : ideals)
          if (!i.contains(m)) return false;
        return true;
      },
      divisor, bound);
}

NatIdeal nat_subtractive_closure(const NatIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const Natural d = ideal.divisor();
  const Natural b = ideal.bound();
  // the first tail member stands in for every member at or above the bound
  const Natural tail = (b + d - 1) / d * d;
  std::vector<Natural> candidates;
  for (Natural x = 0; x < b; ++x)
    if (ideal.contains(x)) candidates.push_back(x);
  candidates.push_back(tail);
  return nat_ideal_from_membership(
      [&](Natural r) {
        for (Natural x : candidates)
          if (ideal.contains(r + x)) return true;
        return false;
      },
      d, b);
}

NatIdeal nat_radical(const NatIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const Natural d = ideal.divisor();
  const Natural b = ideal.bound();
  return nat_ideal_from_membership(
      [&](Natural r) {
        if (r == 0) return true;
        if (r == 1) return ideal.contains(1);
        for (Natural p = r; p < b; p *= r)
          if (ideal.contains(p)) return true;
        // all larger powers lie in the tail, and divisibility of r^k by d is monotone in k
        return pow_mod(r, 64, d) == 0;
      },
      radical_of(d), b);
}

std::optional<std::pair<Natural, Natural>> nat_subtractivity_witness(const NatIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  const Natural d = ideal.divisor();
  // y must be a multiple of d: x and x + y are
  for (Natural y = 0; y < ideal.bound(); y += d) {
    if (ideal.contains(y)) continue;
    for (Natural x = 0; x <= ideal.bound() + d; ++x)
      if (ideal.contains(x) && ideal.contains(x + y)) return std::pair{x, y};
  }
  return std::nullopt;
}

bool nat_is_subtractive(const NatIdeal& ideal) {
  const bool definitional = !nat_subtractivity_witness(ideal).has_value();
  const bool fixed = nat_subtractive_closure(ideal) == ideal;
  if (definitional != fixed)
    throw std::logic_error("closure fixpoint and definitional subtractivity disagree on " + ideal.render());
  return fixed;
}

NatIdeal parse_nat_ideal(std::string_view text) {
  std::vector<Natural> gens;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Natural v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidParam("malformed generator '" + std::string(tok) + "'");
    gens.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return NatIdeal(std::move(gens));
}

}  // namespace subtractive
