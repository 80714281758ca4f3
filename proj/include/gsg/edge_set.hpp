#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gsg {

// Bitset over edge ids with a fixed universe size.
class EdgeSet {
 public:
  EdgeSet() : size_(0) {}
  explicit EdgeSet(int universe) : size_(universe), w_((universe + 63) / 64, 0) {}
  EdgeSet(int universe, std::initializer_list<int> ids) : EdgeSet(universe) {
    for (int id : ids) set(id);
  }

  static EdgeSet full(int universe) {
    EdgeSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return size_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { check(i); w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { check(i); w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  EdgeSet operator|(const EdgeSet& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
  EdgeSet operator&(const EdgeSet& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
  EdgeSet minus(const EdgeSet& o) const { return zip(o, [](auto a, auto b) { return a & ~b; }); }
  EdgeSet with(int i) const {
    EdgeSet r = *this;
    r.set(i);
    return r;
  }
  EdgeSet without(int i) const {
    EdgeSet r = *this;
    r.reset(i);
    return r;
  }

  bool subset_of(const EdgeSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const EdgeSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const EdgeSet& o) const { return size_ == o.size_ && w_ == o.w_; }
  bool operator!=(const EdgeSet& o) const { return !(*this == o); }
  // numeric order on the bit pattern, used for deterministic output ordering
  bool operator<(const EdgeSet& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> ids() const {
    std::vector<int> r;
    for_each([&](int i) { r.push_back(i); });
    return r;
  }

  // Resize the universe, keeping low bits (used when materializing e_infinity).
  EdgeSet resized(int universe) const {
    EdgeSet r(universe);
    for_each([&](int i) {
      if (i < universe) r.set(i);
    });
    return r;
  }

  std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

  struct Hash {
    size_t operator()(const EdgeSet& s) const {
      size_t h = std::hash<int>()(s.size_);
      for (auto w : s.w_) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

 private:
  void check(int i) const {
    if (i < 0 || i >= size_) throw std::out_of_range("EdgeSet: id out of range");
  }
  template <typename Op>
  EdgeSet zip(const EdgeSet& o, Op op) const {
    if (size_ != o.size_) throw std::invalid_argument("EdgeSet: universe mismatch");
    EdgeSet r(size_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = op(w_[k], o.w_[k]);
    return r;
  }

  int size_;
  std::vector<std::uint64_t> w_;
};

// Enumerates all subsets of `universe` (sets up to 63 elements).
template <typename F>
void for_all_subsets(const EdgeSet& universe, F&& f) {
  auto ids = universe.ids();
  if (ids.size() > 63) throw std::invalid_argument("for_all_subsets: too many edges");
  const std::uint64_t limit = std::uint64_t{1} << ids.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    EdgeSet s(universe.universe());
    for (size_t b = 0; b < ids.size(); ++b)
      if ((mask >> b) & 1u) s.set(ids[b]);
    f(s);
  }
}

}  // namespace gsg
