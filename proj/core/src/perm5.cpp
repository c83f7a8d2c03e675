#include "revequiv/perm5.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "revequiv/errors.hpp"

namespace rev {

namespace {

// Dense index of a permutation in 0..3124 (base-5 digits of the image
// array); used to key lookup tables.
int pack(const std::array<int, 5>& images) {
  int code = 0;
  for (int k = 4; k >= 0; --k) code = code * 5 + (images[k] - 1);
  return code;
}

}  // namespace

Perm5 Perm5::from_images(const std::array<int, 5>& images) {
  std::array<bool, 5> seen{};
  Perm5 p;
  for (int k = 0; k < 5; ++k) {
    int v = images[k];
    if (v < 1 || v > 5)
      throw IndexError("permutation image out of range: " + std::to_string(v));
    if (seen[v - 1])
      throw IndexError("duplicate permutation image: " + std::to_string(v));
    seen[v - 1] = true;
    p.images_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm5 Perm5::transposition(int a, int b) {
  Transposition t(a, b);
  Perm5 p;
  std::swap(p.images_[t.a - 1], p.images_[t.b - 1]);
  return p;
}

Perm5 Perm5::parse(std::string_view text) {
  Perm5 result;
  bool any_group = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ParseError("expected '(' in permutation: " + std::string(text));
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("unbalanced '(' in permutation: " + std::string(text));

    std::istringstream elems{std::string(text.substr(i + 1, close - i - 1))};
    std::vector<int> cycle;
    int v = 0;
    while (elems >> v) {
      if (v < 1 || v > 5)
        throw ParseError("cycle element out of range: " + std::to_string(v));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError("repeated cycle element: " + std::to_string(v));
      cycle.push_back(v);
    }
    if (!elems.eof())
      throw ParseError("bad cycle element in permutation: " + std::string(text));

    if (cycle.size() >= 2) {
      std::array<int, 5> images{1, 2, 3, 4, 5};
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      result = compose(result, from_images(images));
    }
    any_group = true;
    i = close + 1;
  }
  if (!any_group) throw ParseError("empty permutation text");
  return result;
}

const std::vector<Perm5>& Perm5::all() {
  static const std::vector<Perm5> perms = [] {
    std::vector<Perm5> out;
    out.reserve(120);
    std::array<int, 5> v{1, 2, 3, 4, 5};
    do {
      out.push_back(from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }();
  return perms;
}

std::array<int, 5> Perm5::images() const {
  std::array<int, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = images_[k] + 1;
  return out;
}

bool Perm5::is_identity() const { return *this == Perm5(); }

bool Perm5::is_five_cycle() const {
  // A permutation of five elements is a single 5-cycle iff the orbit of
  // any one element has size 5.
  int x = images_[0];
  int len = 1;
  while (x != 0) {
    x = images_[x];
    ++len;
  }
  return len == 5;
}

Perm5 Perm5::inverse() const {
  Perm5 p;
  for (int k = 0; k < 5; ++k) p.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return p;
}

std::string Perm5::to_string() const {
  std::string out;
  std::array<bool, 5> used{};
  for (int s = 0; s < 5; ++s) {
    if (used[s]) continue;
    used[s] = true;
    if (images_[s] == s) continue;
    out += '(';
    out += std::to_string(s + 1);
    for (int x = images_[s]; x != s; x = images_[x]) {
      used[x] = true;
      out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm5 compose(const Perm5& first, const Perm5& second) {
  Perm5 p;
  for (int k = 0; k < 5; ++k) p.images_[k] = second.images_[first.images_[k]];
  return p;
}

Perm5 conjugate(const Perm5& p, const Perm5& by) {
  return compose(compose(by.inverse(), p), by);
}

Perm5 commutator(const Perm5& p, const Perm5& q) {
  return compose(compose(compose(p, q), p.inverse()), q.inverse());
}

Transposition::Transposition(int a_in, int b_in) : a(a_in), b(b_in) {
  if (a < 1 || a > 5 || b < 1 || b > 5)
    throw IndexError("transposition element out of range");
  if (a == b) throw IndexError("transposition elements must be distinct");
}

std::vector<Transposition> to_transpositions(const Perm5& p) {
  std::vector<Transposition> out;
  std::array<bool, 5> used{};
  for (int s = 1; s <= 5; ++s) {
    if (used[s - 1]) continue;
    used[s - 1] = true;
    // Walk the cycle starting at its smallest element s; the cycle
    // (s x1 ... xk) equals (s x1)(s x2)...(s xk) left-to-right.
    for (int x = p.image_of(s); x != s; x = p.image_of(x)) {
      used[x - 1] = true;
      out.emplace_back(s, x);
    }
  }
  return out;
}

Perm5 find_conjugator(const Perm5& src, const Perm5& dst) {
  if (!src.is_five_cycle())
    throw NotFiveCycleError("find_conjugator: source " + src.to_string() +
                            " is not a 5-cycle");
  if (!dst.is_five_cycle())
    throw NotFiveCycleError("find_conjugator: destination " + dst.to_string() +
                            " is not a 5-cycle");
  for (const Perm5& tau : Perm5::all())
    if (conjugate(src, tau) == dst) return tau;
  throw Error("find_conjugator: no conjugator found");  // unreachable
}

std::pair<Perm5, Perm5> find_and_pair(const Perm5& target) {
  if (!target.is_five_cycle())
    throw NotFiveCycleError("find_and_pair: target " + target.to_string() +
                            " is not a 5-cycle");

  // One pass over pairs of 5-cycles in lexicographic order records, for
  // every 5-cycle value of the commutator, the first pair producing it.
  using Pair = std::pair<Perm5, Perm5>;
  static const std::vector<std::optional<Pair>> table = [] {
    std::vector<std::optional<Pair>> slots(3125);
    for (const Perm5& gamma : Perm5::all()) {
      if (!gamma.is_five_cycle()) continue;
      for (const Perm5& delta : Perm5::all()) {
        if (!delta.is_five_cycle()) continue;
        Perm5 c = commutator(gamma, delta);
        if (!c.is_five_cycle()) continue;
        auto& slot = slots[pack(c.images())];
        if (!slot) slot = Pair{gamma, delta};
      }
    }
    return slots;
  }();

  const auto& slot = table[pack(target.images())];
  if (!slot) throw Error("find_and_pair: no pair found");  // unreachable
  return *slot;
}

std::ostream& operator<<(std::ostream& out, const Perm5& p) {
  return out << p.to_string();
}

}  // namespace rev
