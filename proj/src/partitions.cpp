#include "possum/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "possum/errors.hpp"

namespace possum {

namespace {

void require_comparable(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) {
    throw InputError("partitions of different lengths: " + a.to_string() + " vs " + b.to_string());
  }
  if (a.weight() != b.weight()) {
    throw InputError("partitions of different weights: " + a.to_string() + " vs " + b.to_string());
  }
}

bool weakly_decreasing(const std::vector<Partition::value_type>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

// Partitions reachable from c by one unit move.
std::vector<std::vector<Partition::value_type>> unit_moves(
    const std::vector<Partition::value_type>& c) {
  std::vector<std::vector<Partition::value_type>> out;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (c[k] == 0) continue;
    for (std::size_t l = k + 1; l < n; ++l) {
      auto next = c;
      --next[k];
      ++next[l];
      if (weakly_decreasing(next)) out.push_back(std::move(next));
    }
  }
  return out;
}

void append_bfs(std::vector<Partition>& chain, const Partition& from, const Partition& to) {
  auto tail = bfs_chain(from, to);
  if (!tail) throw DomainError("no chain from " + from.to_string() + " to " + to.to_string());
  chain.insert(chain.end(), tail->begin() + 1, tail->end());
}

}  // namespace

Partition::Partition(std::vector<value_type> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("a partition needs at least one part");
  if (!weakly_decreasing(parts_)) {
    throw InputError("partition parts must be weakly decreasing: " + to_string());
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<Partition::value_type> parts;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty part in partition '" + std::string(text) + "'");
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        item.size() > 9) {
      throw InputError("invalid part '" + item + "' in partition '" + std::string(text) + "'");
    }
    parts.push_back(static_cast<Partition::value_type>(std::stoul(item)));
  }
  if (!text.empty() && text.back() == ',') throw InputError("trailing comma in partition");
  return Partition(std::move(parts));
}

std::vector<Partition> all_partitions(std::uint64_t weight, std::size_t length) {
  std::vector<Partition> out;
  std::vector<Partition::value_type> parts(length, 0);
  // Fill position i with values <= cap, remaining weight `rest`.
  auto fill = [&](auto&& self, std::size_t i, std::uint64_t rest, std::uint64_t cap) -> void {
    if (i == length) {
      if (rest == 0) out.emplace_back(parts);
      return;
    }
    const std::uint64_t hi = std::min(rest, cap);
    for (std::uint64_t v = hi + 1; v-- > 0;) {
      if (v * (length - i) < rest) break;
      parts[i] = static_cast<Partition::value_type>(v);
      self(self, i + 1, rest - v, v);
    }
  };
  if (length > 0) fill(fill, 0, weight, weight);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  require_comparable(a, b);
  std::uint64_t sa = 0;
  std::uint64_t sb = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

std::optional<StepWitness> is_step(const Partition& a, const Partition& b) {
  require_comparable(a, b);
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (diff.size() != 2) return std::nullopt;
  const std::size_t k = diff[0];
  const std::size_t l = diff[1];
  if (b[k] + 1 == a[k] && b[l] == a[l] + 1) return StepWitness{k, l};
  return std::nullopt;
}

std::vector<Partition> find_chain(const Partition& a, const Partition& b) {
  if (!dominates(a, b)) {
    throw DomainError(a.to_string() + " does not dominate " + b.to_string());
  }
  const std::size_t n = a.length();
  std::vector<Partition> chain{a};
  auto c = a.parts();
  while (c != b.parts()) {
    // Largest k whose entry exceeds the target and can drop by one.
    std::optional<std::size_t> k;
    for (std::size_t i = n; i-- > 0;) {
      if (c[i] > b[i] && (i + 1 == n || c[i] > c[i + 1])) {
        k = i;
        break;
      }
    }
    std::optional<std::size_t> l;
    if (k) {
      for (std::size_t j = *k + 1; j < n; ++j) {
        const auto left = j - 1 == *k ? c[j - 1] - 1 : c[j - 1];
        if (c[j] < b[j] && c[j] + 1 <= left) {
          l = j;
          break;
        }
      }
    }
    if (!k || !l) {
      append_bfs(chain, Partition(c), b);
      return chain;
    }
    auto next = c;
    --next[*k];
    ++next[*l];
    Partition step(next);
    if (!dominates(step, b)) {
      append_bfs(chain, Partition(c), b);
      return chain;
    }
    chain.push_back(std::move(step));
    c = std::move(next);
  }
  return chain;
}

std::optional<std::vector<Partition>> bfs_chain(const Partition& a, const Partition& b) {
  require_comparable(a, b);
  using Parts = std::vector<Partition::value_type>;
  std::map<Parts, Parts> parent;
  std::deque<Parts> queue{a.parts()};
  parent.emplace(a.parts(), Parts{});
  while (!queue.empty()) {
    Parts cur = std::move(queue.front());
    queue.pop_front();
    if (cur == b.parts()) {
      std::vector<Partition> chain;
      for (Parts p = cur; !p.empty(); p = parent.at(p)) chain.emplace_back(p);
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (auto& next : unit_moves(cur)) {
      if (parent.emplace(next, cur).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace possum
