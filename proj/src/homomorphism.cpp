#include "subtractive/homomorphism.hpp"

#include <sstream>

namespace subtractive {

std::optional<std::string> homomorphism_violation(const FiniteSemiring& s, const FiniteSemiring& t,
                                                  std::span<const Element> map) {
  const auto n = static_cast<Element>(s.order());
  if (map.size() != n) return "map length " + std::to_string(map.size()) + " != source order";
  for (Element v : map)
    if (v >= t.order()) return "map value out of range";
  if (map[s.one()] != t.one()) return "one-preservation";
  // zero-preservation is not forced by the three equations alone; we require it
  if (map[s.zero()] != t.zero()) return "zero-preservation";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (map[s.add(x, y)] != t.add(map[x], map[y]))
        return "additivity at (" + s.label(x) + "," + s.label(y) + ")";
      if (map[s.mul(x, y)] != t.mul(map[x], map[y]))
        return "multiplicativity at (" + s.label(x) + "," + s.label(y) + ")";
    }
  return std::nullopt;
}

Homomorphism::Homomorphism(FiniteSemiring source, FiniteSemiring target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto why = homomorphism_violation(source_, target_, map_)) throw InvalidHomomorphism(*why);
}

bool Homomorphism::is_surjective() const { return image(source_.all()) == target_.all(); }

ElementSet Homomorphism::image(ElementSet xs) const {
  ElementSet out;
  xs.for_each([&](Element x) { out.insert(map_[x]); });
  return out;
}

ElementSet Homomorphism::preimage(ElementSet ys) const {
  ElementSet out;
  for (Element x = 0; x < map_.size(); ++x)
    if (ys.contains(map_[x])) out.insert(x);
  return out;
}

std::string Homomorphism::render() const {
  std::ostringstream os;
  os << '[';
  for (Element x = 0; x < map_.size(); ++x)
    os << (x ? "," : "") << source_.label(x) << "->" << target_.label(map_[x]);
  os << ']';
  return os.str();
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteSemiring& s, const FiniteSemiring& t) {
  const auto n = static_cast<Element>(s.order());
  const auto m = static_cast<Element>(t.order());
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(n, kUnset);
  std::vector<Homomorphism> out;

  auto consistent = [&] {
    for (Element x = 0; x < n; ++x) {
      if (map[x] == kUnset) continue;
      for (Element y = x; y < n; ++y) {
        if (map[y] == kUnset) continue;
        const Element sum = map[s.add(x, y)];
        if (sum != kUnset && sum != t.add(map[x], map[y])) return false;
        const Element prod = map[s.mul(x, y)];
        if (prod != kUnset && prod != t.mul(map[x], map[y])) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, Element i) -> void {
    if (i == n) {
      out.emplace_back(s, t, map);
      return;
    }
    for (Element v = 0; v < m; ++v) {
      if (i == s.zero() && v != t.zero()) continue;
      if (i == s.one() && v != t.one()) continue;
      map[i] = v;
      if (consistent()) self(self, i + 1);
    }
    map[i] = kUnset;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace subtractive
