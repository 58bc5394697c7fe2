#ifndef EVENHOLE_BITS_HPP
#define EVENHOLE_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace evenhole {

/// Fixed-width node bitset.
///
/// The graph algorithms here spend most of their time in masked
/// subset/intersection tests on closed neighborhoods; these are provided as
/// fused, allocation-free word loops. All binary operations require equal
/// sizes.
class NodeBits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t kWordBits = 64;

  NodeBits() = default;
  explicit NodeBits(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  NodeBits& set(std::size_t i) noexcept {
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    return *this;
  }
  NodeBits& reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    return *this;
  }
  NodeBits& set() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
    return *this;
  }
  NodeBits& reset() noexcept {
    for (auto& w : words_) w = 0;
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const noexcept { return !any(); }

  std::size_t find_first() const noexcept { return scan(0); }
  std::size_t find_next(std::size_t i) const noexcept { return scan(i + 1); }

  bool intersects(const NodeBits& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }
  bool is_subset_of(const NodeBits& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  NodeBits& operator&=(const NodeBits& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  NodeBits& operator|=(const NodeBits& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  /// Set difference.
  NodeBits& operator-=(const NodeBits& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  NodeBits operator~() const {
    NodeBits r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend NodeBits operator&(NodeBits a, const NodeBits& b) { return a &= b; }
  friend NodeBits operator|(NodeBits a, const NodeBits& b) { return a |= b; }
  friend NodeBits operator-(NodeBits a, const NodeBits& b) { return a -= b; }

  friend bool operator==(const NodeBits&, const NodeBits&) = default;
  friend auto operator<=>(const NodeBits& a, const NodeBits& b) {
    return a.words_ <=> b.words_;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  std::size_t scan(std::size_t from) const noexcept {
    if (from >= n_) return npos;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return npos;
      w = words_[k];
    }
  }
  void trim() noexcept {
    if (n_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
    }
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// (a & mask) is a subset of b.
inline bool subset_within(const NodeBits& a, const NodeBits& mask,
                          const NodeBits& b) noexcept {
  const auto* pa = a.data();
  const auto* pm = mask.data();
  const auto* pb = b.data();
  for (std::size_t k = 0; k < a.num_words(); ++k) {
    if (pa[k] & pm[k] & ~pb[k]) return false;
  }
  return true;
}

/// a, b and c share a member.
inline bool intersects3(const NodeBits& a, const NodeBits& b,
                        const NodeBits& c) noexcept {
  for (std::size_t k = 0; k < a.num_words(); ++k) {
    if (a.data()[k] & b.data()[k] & c.data()[k]) return true;
  }
  return false;
}

inline std::size_t count_and(const NodeBits& a, const NodeBits& b) noexcept {
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.num_words(); ++k) {
    c += static_cast<std::size_t>(std::popcount(a.data()[k] & b.data()[k]));
  }
  return c;
}

}  // namespace evenhole

#endif  // EVENHOLE_BITS_HPP
