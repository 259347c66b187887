#include "charcol/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charcol {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

long Partition::content_sum() const {
  long sum = 0;
  for (int row = 0; row < length(); ++row)
    for (int col = 0; col < parts_[row]; ++col) sum += col - row;
  return sum;
}

std::vector<Partition> Partition::remove_one_box() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    bool corner = i + 1 == parts_.size() || parts_[i + 1] < parts_[i];
    if (!corner) continue;
    auto next = parts_;
    if (--next[i] == 0) next.pop_back();
    out.emplace_back(std::move(next));
  }
  return out;
}

std::vector<Partition> Partition::add_one_box() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= parts_.size(); ++i) {
    if (i == parts_.size()) {
      auto next = parts_;
      next.push_back(1);
      out.emplace_back(std::move(next));
    } else if (i == 0 || parts_[i - 1] > parts_[i]) {
      auto next = parts_;
      ++next[i];
      out.emplace_back(std::move(next));
    }
  }
  return out;
}

Partition Partition::with_first_row_extended(int extra) const {
  if (extra == 0) return *this;
  auto next = parts_;
  if (next.empty())
    next.push_back(extra);
  else
    next[0] += extra;
  return Partition(std::move(next));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition must look like [3,2,1]: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw std::invalid_argument("bad partition part '" + tok + "' in '" + text + "'");
      parts.push_back(std::stoi(tok));
    }
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return p;
  std::vector<int> cols(p[0], 0);
  for (int r : p.parts())
    for (int j = 0; j < r; ++j) ++cols[j];
  return Partition(std::move(cols));
}

Integer dim_irrep(const Partition& p) {
  auto conj = conjugate(p);
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(p.size()) / hooks;
}

bool canonical_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

std::vector<Partition> mirrored_order(int n) {
  std::vector<Partition> upper, self;
  for (auto& p : enumerate_partitions(n)) {
    auto c = conjugate(p);
    if (c == p)
      self.push_back(p);
    else if (p > c)
      upper.push_back(p);
  }
  std::vector<Partition> out = upper;
  out.insert(out.end(), self.begin(), self.end());
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out.push_back(conjugate(*it));
  return out;
}

int CycleType::fixed_points() const {
  return static_cast<int>(std::count(shape.parts().begin(), shape.parts().end(), 1));
}

bool CycleType::is_odd() const {
  auto even = std::count_if(shape.parts().begin(), shape.parts().end(), [](int c) { return c % 2 == 0; });
  return even % 2 == 1;
}

CycleType CycleType::with_fixed_points(int total) const {
  auto parts = shape.parts();
  while (!parts.empty() && parts.back() == 1) parts.pop_back();
  int moved = std::accumulate(parts.begin(), parts.end(), 0);
  if (total < moved) throw std::invalid_argument("with_fixed_points: total below support");
  parts.insert(parts.end(), total - moved, 1);
  return CycleType{Partition(std::move(parts))};
}

Integer class_size(const CycleType& c) {
  Integer centralizer = 1;
  for (auto [len, mult] : c.shape.multiplicities()) {
    Integer pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), len, mult);
    centralizer *= pow * factorial(mult);
  }
  return factorial(c.size()) / centralizer;
}

std::vector<CycleType> enumerate_cycle_types(int n) {
  auto parts = enumerate_partitions(n);
  std::vector<CycleType> out;
  out.reserve(parts.size());
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(CycleType{*it});
  return out;
}

}  // namespace charcol
