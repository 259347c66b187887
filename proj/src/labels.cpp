#include "charcol/labels.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "charcol/errors.hpp"

namespace charcol {

WreathIrrepLabel::WreathIrrepLabel(std::vector<Slot> slots) {
  for (auto& s : slots)
    if (!s.shape.empty()) slots_.push_back(std::move(s));
  std::sort(slots_.begin(), slots_.end(), [](const Slot& a, const Slot& b) { return a.h_irrep < b.h_irrep; });
  for (std::size_t i = 1; i < slots_.size(); ++i)
    if (slots_[i].h_irrep == slots_[i - 1].h_irrep) throw UsageError("array label repeats an H-irrep");
}

WreathIrrepLabel WreathIrrepLabel::single(int h_irrep, Partition shape) {
  return WreathIrrepLabel({Slot{h_irrep, std::move(shape)}});
}

int WreathIrrepLabel::size() const {
  int n = 0;
  for (auto& s : slots_) n += s.shape.size();
  return n;
}

Partition WreathIrrepLabel::shape_of(int h_irrep) const {
  for (auto& s : slots_)
    if (s.h_irrep == h_irrep) return s.shape;
  return {};
}

WreathIrrepLabel WreathIrrepLabel::with_shape(int h_irrep, Partition shape) const {
  auto slots = slots_;
  auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& s) { return s.h_irrep == h_irrep; });
  if (it == slots.end())
    slots.push_back(Slot{h_irrep, std::move(shape)});
  else
    it->shape = std::move(shape);
  return WreathIrrepLabel(std::move(slots));
}

bool basis_before(const WreathIrrepLabel& a, const WreathIrrepLabel& b) {
  const auto& sa = a.slots();
  const auto& sb = b.slots();
  std::vector<int> support_a, support_b;
  for (auto& s : sa) support_a.push_back(s.h_irrep);
  for (auto& s : sb) support_b.push_back(s.h_irrep);
  if (support_a != support_b) return support_a < support_b;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].shape == sb[i].shape) continue;
    return canonical_before(sa[i].shape, sb[i].shape);
  }
  return false;
}

std::vector<WreathIrrepLabel> enumerate_wreath_labels(int num_h_irreps, int n) {
  std::vector<WreathIrrepLabel> out;
  std::vector<WreathIrrepLabel::Slot> cur;
  std::function<void(int, int)> rec = [&](int h, int remaining) {
    if (h == num_h_irreps) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      if (k == 0) {
        rec(h + 1, remaining);
        continue;
      }
      for (auto& p : enumerate_partitions(k)) {
        cur.push_back({h, p});
        rec(h + 1, remaining - k);
        cur.pop_back();
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), basis_before);
  return out;
}

int ColoredCycleType::size() const {
  int n = 0;
  for (auto& p : by_class) n += p.size();
  return n;
}

int ColoredCycleType::trivial_fixed_points() const {
  if (by_class.empty()) return 0;
  return CycleType{by_class[0]}.fixed_points();
}

ColoredCycleType ColoredCycleType::with_trivial_fixed_points(int total) const {
  auto out = *this;
  int moved = size() - trivial_fixed_points();
  if (total < moved) throw UsageError("class does not fit at the requested level");
  out.by_class[0] = CycleType{by_class[0]}.with_fixed_points(by_class[0].size() - trivial_fixed_points() + (total - moved)).shape;
  return out;
}

ColoredCycleType ColoredCycleType::without_trivial_fixed_points() const {
  return with_trivial_fixed_points(size() - trivial_fixed_points());
}

ColoredCycleType identity_class(int num_h_classes, int n) {
  ColoredCycleType c;
  c.by_class.assign(num_h_classes, Partition{});
  c.by_class[0] = Partition(std::vector<int>(n, 1));
  return c;
}

bool class_before(const ColoredCycleType& a, const ColoredCycleType& b) {
  for (std::size_t i = 0; i < a.by_class.size(); ++i) {
    const auto& pa = a.by_class[i];
    const auto& pb = b.by_class[i];
    if (pa.size() != pb.size()) return pa.size() > pb.size();
    if (pa != pb) return pa < pb;
  }
  return false;
}

std::vector<ColoredCycleType> enumerate_colored_cycle_types(int num_h_classes, int n) {
  std::vector<ColoredCycleType> out;
  ColoredCycleType cur;
  cur.by_class.assign(num_h_classes, Partition{});
  std::function<void(int, int)> rec = [&](int c, int remaining) {
    if (c == num_h_classes) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k)
      for (auto& p : enumerate_partitions(k)) {
        cur.by_class[c] = p;
        rec(c + 1, remaining - k);
      }
    cur.by_class[c] = Partition{};
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), class_before);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UsageError(std::string("unknown H-") + what + " '" + name + "'");
  return static_cast<int>(it - names.begin());
}

// "a:[..];b:[..]" -> (index, partition) pairs
std::vector<std::pair<int, Partition>> parse_pairs(const std::string& text, const std::vector<std::string>& names,
                                                   const char* what) {
  std::vector<std::pair<int, Partition>> out;
  for (auto& piece : split(text, ';')) {
    auto p = strip(piece);
    if (p.empty()) continue;
    auto colon = p.find(':');
    if (colon == std::string::npos) throw UsageError("expected 'label:[parts]' in '" + text + "'");
    out.emplace_back(index_of(names, strip(p.substr(0, colon)), what), parse_partition(p.substr(colon + 1)));
  }
  return out;
}

}  // namespace

std::string format_label(const WreathIrrepLabel& label, const std::vector<std::string>& h_irrep_names) {
  if (h_irrep_names.size() == 1) return to_string(label.shape_of(0));
  std::string out;
  for (auto& s : label.slots()) {
    if (!out.empty()) out += ";";
    out += h_irrep_names.at(s.h_irrep) + ":" + to_string(s.shape);
  }
  return out.empty() ? "[]" : out;
}

WreathIrrepLabel parse_label(const std::string& text, const std::vector<std::string>& h_irrep_names) {
  auto t = strip(text);
  if (h_irrep_names.size() == 1 || t == "[]") {
    auto p = parse_partition(t);
    return p.empty() ? WreathIrrepLabel{} : WreathIrrepLabel::single(0, p);
  }
  std::vector<WreathIrrepLabel::Slot> slots;
  for (auto& [idx, p] : parse_pairs(t, h_irrep_names, "irrep")) {
    if (p.empty()) throw UsageError("empty shape in array label '" + text + "'");
    slots.push_back({idx, p});
  }
  return WreathIrrepLabel(std::move(slots));
}

std::string format_class(const ColoredCycleType& c, const std::vector<std::string>& h_class_names) {
  if (h_class_names.size() == 1) return to_string(c.by_class.at(0));
  std::string out;
  for (std::size_t i = 0; i < c.by_class.size(); ++i) {
    if (c.by_class[i].empty()) continue;
    if (!out.empty()) out += ";";
    out += h_class_names.at(i) + ":" + to_string(c.by_class[i]);
  }
  return out.empty() ? "[]" : out;
}

ColoredCycleType parse_class(const std::string& text, const std::vector<std::string>& h_class_names,
                             int n_for_identity) {
  auto t = strip(text);
  int num = static_cast<int>(h_class_names.size());
  if (t == "e") {
    if (n_for_identity < 0) throw UsageError("class 'e' needs a level");
    return identity_class(num, n_for_identity);
  }
  ColoredCycleType c;
  c.by_class.assign(num, Partition{});
  if (num == 1) {
    c.by_class[0] = parse_partition(t);
    return c;
  }
  std::vector<bool> seen(num, false);
  for (auto& [idx, p] : parse_pairs(t, h_class_names, "class")) {
    if (seen[idx]) throw UsageError("class label repeats an H-class in '" + text + "'");
    seen[idx] = true;
    c.by_class[idx] = p;
  }
  return c;
}

}  // namespace charcol
