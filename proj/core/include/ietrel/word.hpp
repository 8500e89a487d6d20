#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ietrel/iet.hpp"

namespace ietrel {

enum class Letter : char { r = 'r', t = 't' };

struct Block {
  Letter letter;
  std::int64_t exponent;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Freely reduced word in the free group on {r, t}, as letter/exponent blocks.
class Word {
public:
  Word() = default;
  /// Freely reduces `raw`: merges equal neighbouring letters, drops zero
  /// exponents, cascades.
  explicit Word(const std::vector<Block>& raw);

  static Word letter(Letter x, std::int64_t exponent = 1) { return Word({{x, exponent}}); }
  /// Parses "t^120 r t^-120 r^-1"; throws std::invalid_argument.
  static Word parse(const std::string& text);

  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
  [[nodiscard]] bool is_trivial() const { return blocks_.empty(); }
  /// Sum of |exponents|.
  [[nodiscard]] std::int64_t length() const;
  [[nodiscard]] Word inverse() const;
  [[nodiscard]] std::string to_string() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Block> blocks_;
};

inline Word reduce(const std::vector<Block>& raw) { return Word(raw); }
inline bool is_trivial(const Word& w) { return w.is_trivial(); }

/// True when no neighbouring blocks share a letter and no exponent is zero.
bool is_reduced(const std::vector<Block>& blocks);

std::ostream& operator<<(std::ostream& os, const Word& w);

/// [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

/// Substitutes r -> R, t -> T; the word acts as the written product of maps,
/// so "r t" evaluates to R o T.
Iet evaluate_word(const Word& w, const Iet& r, const Iet& t);

}  // namespace ietrel
