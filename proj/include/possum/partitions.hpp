#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "possum/exp_vec.hpp"

namespace possum {

/// A weakly decreasing sequence of n nonnegative integers (zero padded).
/// Construction validates the ordering.
class Partition {
 public:
  using value_type = std::uint32_t;

  explicit Partition(std::vector<value_type> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t weight() const noexcept { return weight_; }
  value_type operator[](std::size_t i) const noexcept { return parts_[i]; }
  const std::vector<value_type>& parts() const noexcept { return parts_; }

  /// The monomial x^alpha.
  ExpVec exponents() const { return ExpVec(parts_); }

  /// "3,1,0"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<value_type> parts_;
  std::uint64_t weight_ = 0;
};

/// Parses "3,1,0" (the CLI form). Throws InputError if not weakly
/// decreasing or malformed.
Partition parse_partition(std::string_view text);

/// Every partition of `weight` into at most `length` parts, in descending
/// lexicographic order.
std::vector<Partition> all_partitions(std::uint64_t weight, std::size_t length);

/// Positions of a single unit move alpha -> beta: beta[k] = alpha[k] - 1,
/// beta[l] = alpha[l] + 1, k < l (0-based).
struct StepWitness {
  std::size_t k;
  std::size_t l;

  friend bool operator==(const StepWitness&, const StepWitness&) = default;
};

/// Prefix-sum dominance test. Throws InputError when the lengths or weights
/// differ.
bool dominates(const Partition& a, const Partition& b);

std::optional<StepWitness> is_step(const Partition& a, const Partition& b);

/// A chain a = c0 -> c1 -> ... -> cN = b of unit moves. Uses a greedy
/// transfer rule with breadth-first search as a fallback. Throws DomainError
/// when a does not dominate b.
std::vector<Partition> find_chain(const Partition& a, const Partition& b);

/// Shortest chain by breadth-first search over all unit moves, or nullopt if
/// b is unreachable from a.
std::optional<std::vector<Partition>> bfs_chain(const Partition& a, const Partition& b);

}  // namespace possum
