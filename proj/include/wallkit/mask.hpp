#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallkit {

// Subset of a ground set {0,...,n-1}, stored as a bitset. Half-spaces,
// gauge values and query point sets are all Masks. Comparison order is
// lexicographic on the 0/1 string (bit 0 first), which fixes the canonical
// wall ordering used by serialization.
class Mask {
 public:
  Mask() = default;
  explicit Mask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Mask of_points(int n, std::initializer_list<int> pts) {
    Mask m(n);
    for (int p : pts) m.set(p);
    return m;
  }
  static Mask of_points(int n, const std::vector<int>& pts) {
    Mask m(n);
    for (int p : pts) m.set(p);
    return m;
  }
  // Parses a 0/1 string, position i = point i.
  static Mask parse(const std::string& bits) {
    Mask m(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        m.set(static_cast<int>(i));
      } else if (bits[i] != '0') {
        throw std::invalid_argument("bad mask character");
      }
    }
    return m;
  }

  int size() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool full() const { return count() == n_; }

  Mask complement() const {
    Mask m(n_);
    for (size_t i = 0; i < words_.size(); ++i) m.words_[i] = ~words_[i];
    m.trim();
    return m;
  }

  Mask operator|(const Mask& o) const {
    Mask m(n_);
    for (size_t i = 0; i < words_.size(); ++i) m.words_[i] = words_[i] | o.words_[i];
    return m;
  }
  Mask operator&(const Mask& o) const {
    Mask m(n_);
    for (size_t i = 0; i < words_.size(); ++i) m.words_[i] = words_[i] & o.words_[i];
    return m;
  }
  Mask& operator|=(const Mask& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool intersects(const Mask& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  // this ⊆ o
  bool subset_of(const Mask& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  // A cuts Y: Y meets both A and its complement.
  bool cuts(const Mask& y) const {
    bool meets = false, misses = false;
    for (size_t i = 0; i < words_.size(); ++i) {
      if (y.words_[i] & words_[i]) meets = true;
      if (y.words_[i] & ~words_[i]) misses = true;
      if (meets && misses) return true;
    }
    return false;
  }

  // Image under a point permutation: i in mask -> perm[i] in result.
  Mask apply_permutation(const std::vector<int>& perm) const {
    Mask m(n_);
    for (int i = 0; i < n_; ++i) {
      if (test(i)) m.set(perm[i]);
    }
    return m;
  }

  std::vector<int> points() const {
    std::vector<int> pts;
    for (int i = 0; i < n_; ++i) {
      if (test(i)) pts.push_back(i);
    }
    return pts;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  bool operator==(const Mask& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Mask& o) const { return !(*this == o); }

  // Lexicographic on the 0/1 string: bit 0 is the most significant position.
  bool operator<(const Mask& o) const {
    for (int i = 0; i < n_ && i < o.n_; ++i) {
      bool a = test(i), b = o.test(i);
      if (a != b) return b;  // '0' < '1'
    }
    return n_ < o.n_;
  }

 private:
  void trim() {
    int extra = static_cast<int>(words_.size()) * 64 - n_;
    if (extra > 0 && !words_.empty()) {
      words_.back() &= ~std::uint64_t{0} >> extra;
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wallkit
