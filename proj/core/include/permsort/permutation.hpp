#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

// Elements of the ground set {1, ..., n}. All public interfaces are 1-based.
using Label = int;

// An unordered swap of two distinct labels, stored with a < b.
class Transposition {
 public:
  Transposition(Label x, Label y);

  Label a() const noexcept { return a_; }
  Label b() const noexcept { return b_; }

  bool touches(Label x) const noexcept { return x == a_ || x == b_; }

  friend auto operator<=>(const Transposition&, const Transposition&) = default;

 private:
  Label a_;
  Label b_;
};

// A cycle (a1 a2 ... ak) with a_{i+1} = sigma(a_i). Always stored in the
// canonical rotation that starts at its minimum element.
class Cycle {
 public:
  explicit Cycle(std::vector<Label> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const Label> elements() const noexcept { return elements_; }
  Label operator[](std::size_t i) const { return elements_[i]; }
  // Successor of position i within the cycle (wraps around).
  Label next(std::size_t i) const { return elements_[(i + 1) % size()]; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Label> elements_;
};

// Ordered list of transpositions as written in a product t_m ... t_1:
// element 0 is the leftmost factor and is applied last. The product acts on
// the identity right-to-left.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<Transposition> written)
      : written_(std::move(written)) {}

  std::size_t size() const noexcept { return written_.size(); }
  bool empty() const noexcept { return written_.empty(); }
  const Transposition& operator[](std::size_t i) const { return written_[i]; }
  auto begin() const noexcept { return written_.begin(); }
  auto end() const noexcept { return written_.end(); }
  std::span<const Transposition> written() const noexcept { return written_; }

  void append(const Transposition& t) { written_.push_back(t); }
  void append(const Decomposition& d) {
    written_.insert(written_.end(), d.begin(), d.end());
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<Transposition> written_;
};

// Concatenation in written order: the product of the result is
// product(left) * product(right).
Decomposition concat(const Decomposition& left, const Decomposition& right);

enum class Parity { kEven, kOdd };

class Permutation {
 public:
  // images[i - 1] = pi(i). Throws ContractError unless images is a bijection
  // on {1, ..., n} with n >= 1.
  explicit Permutation(std::vector<Label> images);

  static Permutation identity(std::size_t n);
  // Builds the permutation whose non-trivial cycles are `cycles`; elements not
  // mentioned are fixed. Cycles must be disjoint and within range.
  static Permutation from_cycles(std::size_t n, std::span<const Cycle> cycles);
  static Permutation from_transposition(std::size_t n, const Transposition& t);

  std::size_t size() const noexcept { return images_.size(); }
  Label operator()(Label i) const { return images_[i - 1]; }
  std::span<const Label> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Label> images)
      : images_(std::move(images)) {}

  std::vector<Label> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation apply_transposition(const Permutation&,
                                         const Transposition&);
};

// first applies p1, then p2: result(i) = p2(p1(i)).
Permutation compose(const Permutation& p2, const Permutation& p1);
Permutation inverse(const Permutation& p);

// Disjoint cycles covering {1..n} (fixed points included as length-1 cycles),
// each canonically rotated, sorted by minimum element.
std::vector<Cycle> cycles(const Permutation& p);
std::size_t cycle_count(const Permutation& p);
// Cycles of length >= 2 only.
std::vector<Cycle> nontrivial_cycles(const Permutation& p);

std::size_t inversion_count(const Permutation& p);
Parity parity(const Permutation& p);

// Returns (a b) * p, i.e. swaps the predecessors of a and b.
Permutation apply_transposition(const Permutation& p, const Transposition& t);

// Product of the written sequence acting on the identity of size n.
Permutation product(const Decomposition& d, std::size_t n);

// True iff the product of d equals target and |d| has target's parity.
bool validate_decomposition(const Decomposition& d, const Permutation& target);

// Minimum number of transpositions for p: n - (number of cycles).
std::size_t cayley_length(const Permutation& p);

// Text formats.
// One-line notation: "3 1 2 5 4".
Permutation parse_one_line(std::string_view text);
std::string format_one_line(const Permutation& p);
// Cycle notation "(1 3 2)(4 5)"; unmentioned elements are fixed.
Permutation parse_cycle_notation(std::string_view text, std::size_t n);
// Omits fixed points; the identity prints as "()".
std::string format_cycle_notation(const Permutation& p);
std::string format_cycle(const Cycle& c);
// "(24)(25)" when every label has a single digit, "(2 10)(4 8)" otherwise.
std::string format_transpositions(const Decomposition& d);

}  // namespace permsort
