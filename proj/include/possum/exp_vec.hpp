#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace possum {

/// Exponent vector of a monomial x1^e1 * ... * xn^en. The length is the
/// arity of the ambient polynomial ring.
///
/// The natural order (operator<=>) is graded lexicographic: total degree
/// first, then the first differing exponent, x1 most significant.
class ExpVec {
 public:
  using value_type = std::uint32_t;

  ExpVec() = default;
  explicit ExpVec(std::size_t arity) : exps_(arity, 0) {}
  ExpVec(std::initializer_list<value_type> exps);
  explicit ExpVec(std::vector<value_type> exps);

  static ExpVec unit(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  value_type operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const value_type> values() const noexcept { return exps_; }

  void set(std::size_t i, value_type e);
  bool is_zero() const noexcept { return degree_ == 0; }
  /// True when every entry is 0 or 1.
  bool is_squarefree() const noexcept;

  ExpVec operator+(const ExpVec& other) const;
  ExpVec& operator+=(const ExpVec& other);
  ExpVec scaled(value_type factor) const;

  friend bool operator==(const ExpVec& a, const ExpVec& b) noexcept {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) noexcept;

 private:
  std::vector<value_type> exps_;
  std::uint64_t degree_ = 0;
};

/// e = 2 * half + residue with residue entries in {0, 1}.
struct EvenSplit {
  ExpVec half;
  ExpVec residue;
};

EvenSplit split_even(const ExpVec& e);

}  // namespace possum
