#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace noma {

/// Walks the weak compositions of `total` into `parts` non-negative parts.
///
/// Order is colexicographic with the last part descending: the first
/// composition is (0, ..., 0, t), the last is (t, 0, ..., 0), and between two
/// compositions the one with the larger entry at the last differing
/// position comes first. For t = 2, K = 2: (0,2), (1,1), (2,0).
///
///     CompositionCursor cur(t, k);
///     do { use(cur.current()); } while (cur.advance());
class CompositionCursor {
 public:
  CompositionCursor(int total, int parts);

  int total() const { return total_; }
  int parts() const { return static_cast<int>(current_.size()); }
  std::span<const int> current() const { return current_; }

  /// Steps to the next composition; false once the sequence is exhausted
  /// (current() then stays on the last composition).
  bool advance();

 private:
  int total_;
  std::vector<int> current_;
};

/// All compositions, materialized in cursor order.
std::vector<std::vector<int>> enumerate_compositions(int total, int parts);

/// C(t + K - 1, K - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(int total, int parts);

}  // namespace noma
