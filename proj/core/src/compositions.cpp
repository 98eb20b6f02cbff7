#include "noma/compositions.hpp"

#include <limits>
#include <numeric>

#include "noma/error.hpp"

namespace noma {

CompositionCursor::CompositionCursor(int total, int parts) : total_(total) {
  if (total < 0) throw DomainError("composition total must be >= 0");
  if (parts < 0) throw DomainError("composition parts must be >= 0");
  if (parts == 0 && total > 0) {
    throw DomainError("cannot split a positive total into zero parts");
  }
  current_.assign(static_cast<std::size_t>(parts), 0);
  if (parts > 0) current_.back() = total;
}

bool CompositionCursor::advance() {
  const std::size_t k = current_.size();
  // First position q >= 1 holding mass; move one unit to q - 1 and gather
  // everything below q there as well.
  std::size_t q = 1;
  while (q < k && current_[q] == 0) ++q;
  if (q >= k) return false;
  int below = 0;
  for (std::size_t p = 0; p < q; ++p) {
    below += current_[p];
    current_[p] = 0;
  }
  --current_[q];
  current_[q - 1] = below + 1;
  return true;
}

std::vector<std::vector<int>> enumerate_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  CompositionCursor cur(total, parts);
  do {
    out.emplace_back(cur.current().begin(), cur.current().end());
  } while (cur.advance());
  return out;
}

std::uint64_t composition_count(int total, int parts) {
  if (total < 0 || parts < 0) throw DomainError("composition count: negative argument");
  if (parts == 0) return total == 0 ? 1 : 0;
  // C(n, r) with n = t + K - 1, r = min(K - 1, t), built up exactly.
  const std::uint64_t n = static_cast<std::uint64_t>(total) + parts - 1;
  const std::uint64_t r = std::min<std::uint64_t>(parts - 1, total);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // c * (n - r + i) / i stays integral at every step.
    const std::uint64_t num = n - r + i;
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t reduced_c = c / g;
    const std::uint64_t reduced_i = i / g;
    const std::uint64_t reduced_num = num / reduced_i;
    if (reduced_c > kMax / reduced_num) return kMax;
    c = reduced_c * reduced_num;
  }
  return c;
}

}  // namespace noma
