#include "wallkit/free_word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace wallkit {

FreeWord FreeWord::reduce(int rank, const std::vector<int>& raw) {
  std::vector<int> stack;
  stack.reserve(raw.size());
  for (int l : raw) {
    if (l == 0 || std::abs(l) > rank) {
      throw std::invalid_argument("free word letter out of rank");
    }
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord FreeWord::parse(int rank, const std::string& text) {
  std::vector<int> raw;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      raw.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(-(c - 'A' + 1));
    } else if (c == '1' && text.size() == 1) {
      // "1" denotes the identity
    } else {
      throw std::invalid_argument("bad free word character: " + std::string(1, c));
    }
  }
  return reduce(rank, raw);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> stack = letters_;
  for (int l : o.letters_) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int l : letters_) {
    s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
  }
  return s;
}

std::vector<FreeWord> free_ball(int rank, int radius) {
  if (radius < 0) throw std::invalid_argument("free_ball: negative radius");
  std::vector<FreeWord> ball{FreeWord{}};
  size_t layer_begin = 0;
  for (int r = 0; r < radius; ++r) {
    size_t layer_end = ball.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      int last = ball[i].letters().empty() ? 0 : ball[i].letters().back();
      for (int s = -rank; s <= rank; ++s) {
        if (s == 0 || s == -last) continue;
        std::vector<int> next = ball[i].letters();
        next.push_back(s);
        ball.push_back(FreeWord::reduce(rank, next));
      }
    }
    layer_begin = layer_end;
  }
  return ball;
}

}  // namespace wallkit
