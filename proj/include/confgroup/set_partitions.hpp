#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace confgroup {

/**
 * Restricted growth strings of length `size` with exactly `blocks` distinct
 * values, in lexicographic order. a[0] = 0 and a[i] <= 1 + max(a[0..i-1]);
 * each string is one unordered set partition of {0, ..., size-1}.
 */
class RestrictedGrowthStrings {
 public:
  RestrictedGrowthStrings(std::size_t size, std::size_t blocks) : size_(size), blocks_(blocks) {
    if (blocks == 0 || blocks > size) {
      done_ = true;
      return;
    }
    // Lexicographically first: 0...0 1 2 ... (blocks-1).
    current_.assign(size, 0);
    for (std::size_t b = 1; b < blocks; ++b) current_[size - blocks + b] = static_cast<std::uint32_t>(b);
    prefix_max_.resize(size);
    recompute_max(0);
  }

  bool done() const noexcept { return done_; }
  const std::vector<std::uint32_t>& current() const noexcept { return current_; }

  void next() {
    if (done_) return;
    // Rightmost position that can be incremented while leaving room for the
    // remaining labels to still reach `blocks` distinct values.
    for (std::size_t pos = size_; pos-- > 1;) {
      const std::uint32_t limit = prefix_max_[pos - 1] + 1;
      if (current_[pos] + 1 > limit) continue;
      if (current_[pos] + 1 >= blocks_) continue;
      const std::uint32_t value = current_[pos] + 1;
      const std::uint32_t reached = std::max(prefix_max_[pos - 1], value);
      const std::size_t tail = size_ - pos - 1;
      if (reached + 1 + tail < blocks_) continue;
      current_[pos] = value;
      // Smallest completion: zeros, then the still-missing labels ascending.
      std::uint32_t m = reached;
      for (std::size_t i = pos + 1; i < size_; ++i) {
        const std::size_t need = blocks_ - 1 - m;
        current_[i] = (size_ - i <= need) ? ++m : 0;
      }
      recompute_max(pos);
      return;
    }
    done_ = true;
  }

 private:
  void recompute_max(std::size_t from) {
    for (std::size_t i = from; i < size_; ++i) {
      prefix_max_[i] = i == 0 ? current_[0] : std::max(prefix_max_[i - 1], current_[i]);
    }
  }

  std::size_t size_;
  std::size_t blocks_;
  bool done_ = false;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> prefix_max_;
};

/// Calls visit(labels) for every partition of {0..size-1} into exactly `blocks`
/// blocks, labels 0-based in restricted-growth form. Stop by returning false.
template <typename Visit>
void for_each_set_partition(std::size_t size, std::size_t blocks, Visit&& visit) {
  for (RestrictedGrowthStrings it(size, blocks); !it.done(); it.next()) {
    if (!visit(it.current())) return;
  }
}

}  // namespace confgroup
