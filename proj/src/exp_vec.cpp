#include "possum/exp_vec.hpp"

#include <algorithm>
#include <numeric>

#include "possum/errors.hpp"

namespace possum {

ExpVec::ExpVec(std::initializer_list<value_type> exps) : ExpVec(std::vector<value_type>(exps)) {}

ExpVec::ExpVec(std::vector<value_type> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

ExpVec ExpVec::unit(std::size_t arity, std::size_t var) {
  ExpVec e(arity);
  e.set(var, 1);
  return e;
}

void ExpVec::set(std::size_t i, value_type e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

bool ExpVec::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](value_type e) { return e <= 1; });
}

ExpVec ExpVec::operator+(const ExpVec& other) const {
  ExpVec out = *this;
  out += other;
  return out;
}

ExpVec& ExpVec::operator+=(const ExpVec& other) {
  if (other.arity() != arity()) throw InputError("exponent vector arity mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

ExpVec ExpVec::scaled(value_type factor) const {
  ExpVec out = *this;
  for (auto& e : out.exps_) e *= factor;
  out.degree_ *= factor;
  return out;
}

std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Larger exponent on an earlier variable ranks higher.
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                b.exps_.begin(), b.exps_.end());
}

EvenSplit split_even(const ExpVec& e) {
  std::vector<ExpVec::value_type> half(e.arity()), residue(e.arity());
  for (std::size_t i = 0; i < e.arity(); ++i) {
    half[i] = e[i] / 2;
    residue[i] = e[i] % 2;
  }
  return {ExpVec(std::move(half)), ExpVec(std::move(residue))};
}

}  // namespace possum
