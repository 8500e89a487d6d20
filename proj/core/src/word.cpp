#include "ietrel/word.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ietrel {

Word::Word(const std::vector<Block>& raw) {
  for (const auto& b : raw) {
    if (b.exponent == 0) continue;
    if (!blocks_.empty() && blocks_.back().letter == b.letter) {
      blocks_.back().exponent += b.exponent;
      if (blocks_.back().exponent == 0) blocks_.pop_back();
    } else {
      blocks_.push_back(b);
    }
  }
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<Block> raw;
  while (in >> token) {
    if (token == "1") continue;
    if (token.empty() || (token[0] != 'r' && token[0] != 't')) {
      throw std::invalid_argument("bad word token: " + token);
    }
    Block b{static_cast<Letter>(token[0]), 1};
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() < 3) throw std::invalid_argument("bad word token: " + token);
      std::size_t used = 0;
      b.exponent = std::stoll(token.substr(2), &used);
      if (used != token.size() - 2) throw std::invalid_argument("bad word token: " + token);
    }
    raw.push_back(b);
  }
  return Word(raw);
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& b : blocks_) n += b.exponent < 0 ? -b.exponent : b.exponent;
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) w.blocks_.push_back({it->letter, -it->exponent});
  return w;
}

std::string Word::to_string() const {
  if (blocks_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ' ';
    os << static_cast<char>(blocks_[i].letter);
    if (blocks_[i].exponent != 1) os << '^' << blocks_[i].exponent;
  }
  return os.str();
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Block> raw = x.blocks_;
  raw.insert(raw.end(), y.blocks_.begin(), y.blocks_.end());
  return Word(raw);
}

bool is_reduced(const std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].exponent == 0) return false;
    if (i > 0 && blocks[i].letter == blocks[i - 1].letter) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Iet evaluate_word(const Word& w, const Iet& r, const Iet& t) {
  std::map<std::pair<char, std::int64_t>, Iet> cache;
  Iet result;
  for (const auto& b : w.blocks()) {
    auto key = std::make_pair(static_cast<char>(b.letter), b.exponent);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, power(b.letter == Letter::r ? r : t, b.exponent)).first;
    }
    result = compose(result, it->second);
  }
  return result;
}

}  // namespace ietrel
