#include "heavy/word.hpp"

#include <algorithm>

#include "heavy/errors.hpp"

namespace heavy {
namespace {

bool is_single_digit(const Letter& a) { return is_integer(a) && a >= 0 && a <= 9; }

}  // namespace

Word Word::from_bits(std::span<const int> bits) {
  std::vector<Letter> letters;
  letters.reserve(bits.size());
  for (int b : bits) letters.emplace_back(b);
  return Word(std::move(letters));
}

bool Word::is_binary() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& a) { return a == 0 || a == 1; });
}

WordType type_of(const Word& w) { return WordType{weight(w), w.size()}; }

Rational weight(const Word& w) {
  Rational sum = 0;
  for (const auto& a : w) sum += a;
  return sum;
}

Rational avg_weight(const Word& w) {
  if (w.empty()) throw UndefinedAverageError("average weight of the empty word is undefined");
  Rational avg = weight(w) / static_cast<unsigned long>(w.size());
  return avg;
}

Word subword(const Word& w, std::size_t i, std::size_t j) {
  if (i > j || j > w.size()) {
    throw BoundsError("subword [" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range for length " + std::to_string(w.size()));
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(i),
                                  w.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word transpose(const Word& w) { return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend())); }

Word conjugate(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& a : w) {
    if (a == 0) {
      out.emplace_back(1);
    } else if (a == 1) {
      out.emplace_back(0);
    } else {
      throw DomainError("conjugate is defined for binary words only; found letter " + to_string(a));
    }
  }
  return Word(std::move(out));
}

Word reversal(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.emplace_back(-*it);
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

std::vector<Rational> prefix_sums(const Word& w) {
  std::vector<Rational> sums;
  sums.reserve(w.size() + 1);
  sums.emplace_back(0);
  for (const auto& a : w) sums.push_back(sums.back() + a);
  return sums;
}

std::string to_string(const Word& w) {
  std::string out;
  if (std::all_of(w.begin(), w.end(), is_single_digit)) {
    out.reserve(w.size());
    for (const auto& a : w) out.push_back(static_cast<char>('0' + a.get_num().get_si()));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += to_string(w[i]);
  }
  if (w.size() == 1) out.push_back(',');
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    letters.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("word letters must be digits or comma-separated rationals: '" +
                         std::string(text) + "'");
      }
      letters.emplace_back(c - '0');
    }
    return Word(std::move(letters));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool last = comma == std::string_view::npos;
    if (token.empty()) {
      // Only a single trailing comma is allowed.
      if (!last || letters.empty()) throw ParseError("empty letter token in '" + std::string(text) + "'");
      break;
    }
    letters.push_back(parse_rational(token));
    if (last) break;
    start = comma + 1;
  }
  return Word(std::move(letters));
}

std::size_t hash_value(const Word& w) noexcept {
  std::size_t h = w.size();
  for (const auto& a : w) h = h * 1099511628211ull ^ hash_value(a);
  return h;
}

}  // namespace heavy
