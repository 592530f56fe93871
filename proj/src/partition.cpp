#include "hdqva/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hdqva {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition normalized(Partition p) {
  std::erase(p, 0);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i && p[i] > p[i - 1])) return false;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<int> multiplicities(const Partition& p) {
  std::vector<int> m(static_cast<size_t>(p.empty() ? 1 : p.front() + 1), 0);
  for (int k : p) ++m[static_cast<size_t>(k)];
  return m;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Partition merged(const Partition& a, const Partition& b) {
  Partition r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<>());
  return r;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::optional<Partition> parse_partition(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  Partition p;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) return std::nullopt;
    p.push_back(v);
    i = static_cast<size_t>(ptr - text.data());
  }
  if (p.empty() || !is_partition(p)) return std::nullopt;
  return p;
}

}  // namespace hdqva
