#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rev {

// A permutation of {1, ..., 5}, the value space of width-5 branching
// programs. Values are immutable once built.
//
// Composition is left-to-right throughout the library: compose(p, q) is
// the permutation "apply p, then q", so compose(p, q).image_of(x) ==
// q.image_of(p.image_of(x)).
class Perm5 {
 public:
  // The identity permutation.
  Perm5() : images_{0, 1, 2, 3, 4} {}

  // Builds from 1-based images: element k+1 maps to images[k]. Throws
  // IndexError unless the array is a permutation of {1, ..., 5}.
  static Perm5 from_images(const std::array<int, 5>& images);

  // The transposition swapping a and b (1-based, distinct).
  static Perm5 transposition(int a, int b);

  // Parses cycle notation: "(1 2 3 4 5)", "(1 2)(3 4)", "()" for the
  // identity. Adjacent cycles compose left-to-right.
  static Perm5 parse(std::string_view text);

  // All 120 permutations, ordered lexicographically by image array.
  // Built once; safe for concurrent use.
  static const std::vector<Perm5>& all();

  // Image of x (1-based).
  int image_of(int x) const { return images_[x - 1] + 1; }

  // 1-based image array.
  std::array<int, 5> images() const;

  bool is_identity() const;

  // True iff the permutation is a single cycle of length 5.
  bool is_five_cycle() const;

  Perm5 inverse() const;

  // Canonical cycle notation: cycles ordered by their smallest element,
  // each written starting from its smallest element; "()" for the
  // identity.
  std::string to_string() const;

  friend bool operator==(const Perm5&, const Perm5&) = default;
  // Lexicographic order on image arrays.
  friend auto operator<=>(const Perm5&, const Perm5&) = default;

 private:
  friend Perm5 compose(const Perm5& first, const Perm5& second);

  std::array<std::uint8_t, 5> images_;  // 0-based internally
};

// Applies first, then second.
Perm5 compose(const Perm5& first, const Perm5& second);

// by^-1 * p * by (left-to-right). Preserves cycle structure.
Perm5 conjugate(const Perm5& p, const Perm5& by);

// p * q * p^-1 * q^-1 (left-to-right).
Perm5 commutator(const Perm5& p, const Perm5& q);

// A swap of two distinct elements of {1, ..., 5}.
struct Transposition {
  int a;
  int b;

  // Throws IndexError unless a and b are distinct elements of 1..5.
  Transposition(int a, int b);

  Perm5 as_perm() const { return Perm5::transposition(a, b); }

  friend bool operator==(const Transposition&, const Transposition&) = default;
};

// Decomposes p into at most four transpositions whose left-to-right
// composition equals p. The identity yields the empty list. Cycles are
// processed in order of their smallest element, each emitted as
// (s t1), (s t2), ... with s the cycle's smallest element, so the output
// is deterministic.
std::vector<Transposition> to_transpositions(const Perm5& p);

// The lexicographically smallest tau with conjugate(src, tau) == dst.
// Both arguments must be 5-cycles (they always are conjugate then).
Perm5 find_conjugator(const Perm5& src, const Perm5& dst);

// The first pair (gamma, delta), in lexicographic order over pairs of
// 5-cycles, whose commutator is target. target must be a 5-cycle; every
// 5-cycle has such a pair. Results are memoized, so repeated calls are
// cheap and always identical.
std::pair<Perm5, Perm5> find_and_pair(const Perm5& target);

// Writes cycle notation.
std::ostream& operator<<(std::ostream& out, const Perm5& p);

}  // namespace rev
