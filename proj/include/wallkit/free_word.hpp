#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wallkit {

// Reduced word over a free generating set of given rank. Letters are signed
// indices: +i is generator i-1, -i its inverse (i >= 1). The empty word is
// the identity. Text form: 'a'..'z' for generators, 'A'..'Z' for inverses.
class FreeWord {
 public:
  FreeWord() = default;

  // Reduces a raw letter sequence. Throws std::invalid_argument if a letter
  // is 0 or out of rank.
  static FreeWord reduce(int rank, const std::vector<int>& raw);
  static FreeWord parse(int rank, const std::string& text);

  static FreeWord generator(int index) { return FreeWord({index + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    return FreeWord(std::move(inv));
  }

  // Concatenation followed by free reduction. Both operands are already
  // reduced, so cancellation only happens at the seam.
  FreeWord operator*(const FreeWord& o) const;

  FreeWord prefix(int len) const {
    return FreeWord(std::vector<int>(letters_.begin(), letters_.begin() + len));
  }

  std::string to_string() const;

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  // Shortlex: by length, then by letter sequence. Fixes the canonical
  // ordering of wreath support keys.
  bool operator<(const FreeWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

 private:
  explicit FreeWord(std::vector<int> reduced) : letters_(std::move(reduced)) {}

  std::vector<int> letters_;
};

// All reduced words of length <= radius, in shortlex order.
// Size is 1 + 2k((2k-1)^R - 1)/(2k-2) for rank k >= 2.
std::vector<FreeWord> free_ball(int rank, int radius);

}  // namespace wallkit
