#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "randlp/errors.hpp"

namespace randlp {

// Dense atom index into a program's universe [0, n).
struct Atom {
  std::uint32_t index = 0;

  constexpr Atom() = default;
  constexpr explicit Atom(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Atom, Atom) = default;
};

// Subset of the universe [0, n) with bitset storage.
//
// Ordering compares the sets as unsigned integers whose bit i is atom i,
// which is the canonical enumeration order used throughout.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  AtomSet(std::size_t n, std::initializer_list<std::uint32_t> members)
      : AtomSet(n) {
    for (auto m : members) insert(Atom{m});
  }

  // Subset whose members are the set bits of `mask` (n <= 64).
  static AtomSet from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw InvalidArgument("AtomSet::from_mask requires n <= 64");
    AtomSet s(n);
    if (n > 0) s.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
    return s;
  }

  static AtomSet full(std::size_t n) {
    AtomSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(Atom{static_cast<std::uint32_t>(i)});
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool contains(Atom a) const noexcept {
    return a.index < n_ && ((words_[a.index >> 6] >> (a.index & 63)) & 1U) != 0;
  }

  void insert(Atom a) {
    check(a);
    words_[a.index >> 6] |= std::uint64_t{1} << (a.index & 63);
  }

  void erase(Atom a) {
    check(a);
    words_[a.index >> 6] &= ~(std::uint64_t{1} << (a.index & 63));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_subset_of(const AtomSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  std::vector<Atom> members() const {
    std::vector<Atom> out;
    for_each([&](Atom a) { out.push_back(a); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto b = static_cast<std::uint32_t>(std::countr_zero(bits));
        f(Atom{static_cast<std::uint32_t>(w * 64 + b)});
        bits &= bits - 1;
      }
    }
  }

  // Members restricted to indices below `n`, as a set over universe `n`.
  AtomSet restrict_to(std::size_t n) const {
    AtomSet out(n);
    for_each([&](Atom a) {
      if (a.index < n) out.insert(a);
    });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void check(Atom a) const {
    if (a.index >= n_)
      throw InvalidArgument("atom " + std::to_string(a.index) +
                            " outside universe of size " + std::to_string(n_));
  }

  void same_universe(const AtomSet& other) const {
    if (other.n_ != n_) throw InvalidArgument("atom sets over different universes");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace randlp

template <>
struct std::hash<randlp::AtomSet> {
  std::size_t operator()(const randlp::AtomSet& s) const noexcept {
    std::uint64_t h = s.universe() * 0x9E3779B97F4A7C15ULL;
    for (auto w : s.words()) h = (h ^ w) * 0xBF58476D1CE4E5B9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};
