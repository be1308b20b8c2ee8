#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace coxgenus {

inline constexpr int kMaxGenerators = 32;

// Subset of the generator set S, as a bitmask over generator indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(int rank) {
    return Subset(rank >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << rank) - 1);
  }
  static constexpr Subset singleton(int s) { return Subset(std::uint32_t{1} << s); }
  static Subset of(const std::vector<int>& members) {
    Subset out;
    for (int s : members) out = out.with(s);
    return out;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1u; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr Subset with(int s) const { return Subset(bits_ | (std::uint32_t{1} << s)); }
  constexpr Subset without(int s) const {
    return Subset(bits_ & ~(std::uint32_t{1} << s));
  }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }

  // Number of members strictly smaller than s.
  constexpr int count_below(int s) const {
    return std::popcount(bits_ & ((std::uint32_t{1} << s) - 1));
  }
  constexpr int max_member() const { return 31 - std::countl_zero(bits_); }

  // Members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr bool operator==(const Subset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic order on increasing member tuples; the order used for
// every basis of subsets.
inline bool lex_less(Subset a, Subset b) {
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace coxgenus
