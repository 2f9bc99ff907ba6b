#include "heavy/sequences.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "heavy/errors.hpp"

namespace heavy {

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(std::vector<std::pair<Letter, Word>> rules) {
  std::map<Letter, std::size_t> index;
  for (auto& [letter, image] : rules) {
    if (!index.emplace(letter, alphabet_.size()).second) {
      throw DomainError("substitution defines letter " + heavy::to_string(letter) + " twice");
    }
    if (image.empty()) {
      throw DomainError("substitution image of letter " + heavy::to_string(letter) + " is empty");
    }
    alphabet_.push_back(letter);
    images_.push_back(std::move(image));
  }
  if (alphabet_.empty()) throw DomainError("substitution has an empty alphabet");
  coded_images_.reserve(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    std::vector<std::uint32_t> coded;
    coded.reserve(images_[i].size());
    for (const auto& b : images_[i]) {
      auto it = index.find(b);
      if (it == index.end()) {
        throw DomainError("image of letter " + heavy::to_string(alphabet_[i]) + " uses letter " +
                          heavy::to_string(b) + " outside the alphabet");
      }
      coded.push_back(static_cast<std::uint32_t>(it->second));
    }
    coded_images_.push_back(std::move(coded));
  }
}

Substitution Substitution::parse(std::string_view text) {
  std::vector<std::pair<Letter, Word>> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("substitution line " + std::to_string(line_no) + ": expected 'letter -> image'");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    if (lhs.empty()) throw ParseError("substitution line " + std::to_string(line_no) + ": missing letter");
    rules.emplace_back(parse_rational(lhs), parse_word(rhs));
  }
  return Substitution(std::move(rules));
}

Substitution Substitution::morse() { return Substitution({{0, Word{0, 1}}, {1, Word{1, 0}}}); }

std::optional<std::size_t> Substitution::index_of(const Letter& a) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), a);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

const Word& Substitution::image(const Letter& a) const {
  auto idx = index_of(a);
  if (!idx) throw DomainError("letter " + heavy::to_string(a) + " is not in the substitution alphabet");
  return images_[*idx];
}

std::string Substitution::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (i > 0) out += ", ";
    out += heavy::to_string(alphabet_[i]) + "->" + heavy::to_string(images_[i]);
  }
  return out;
}

Word substitution_apply(const Substitution& s, const Word& w) {
  std::vector<Letter> out;
  for (const auto& a : w) {
    const Word& img = s.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

IncidenceMatrix substitution_matrix(const Substitution& s) {
  const std::size_t k = s.alphabet().size();
  IncidenceMatrix m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (auto j : s.coded_image(i)) ++m[i][j];
  }
  return m;
}

bool is_primitive(const IncidenceMatrix& m) {
  const std::size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) throw DomainError("primitivity needs a square matrix");
    for (auto v : row) {
      if (v < 0) throw DomainError("primitivity needs a nonnegative matrix");
    }
  }
  if (k == 0) return false;
  using BoolMatrix = std::vector<std::vector<char>>;
  BoolMatrix base(k, std::vector<char>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) base[i][j] = m[i][j] > 0;
  }
  const auto positive = [k](const BoolMatrix& b) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!b[i][j]) return false;
      }
    }
    return true;
  };
  BoolMatrix power = base;
  const std::size_t bound = (k - 1) * (k - 1) + 1;
  for (std::size_t e = 1; e <= bound; ++e) {
    if (positive(power)) return true;
    BoolMatrix next(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!power[i][l]) continue;
        for (std::size_t j = 0; j < k; ++j) next[i][j] |= base[l][j];
      }
    }
    power = std::move(next);
  }
  return false;
}

std::size_t fixed_point_period(const Substitution& s, const Letter& seed) {
  auto start = s.index_of(seed);
  if (!start) throw DomainError("seed " + to_string(seed) + " is not in the substitution alphabet");
  // Sigma^N(seed) begins with f^N(seed), f = first letter of the image. It
  // has length 1 only if every letter on the way has a one-letter image.
  std::size_t letter = *start;
  bool single = true;
  for (std::size_t n = 1; n <= s.alphabet().size(); ++n) {
    single = single && s.coded_image(letter).size() == 1;
    letter = s.coded_image(letter).front();
    if (letter == *start && !single) return n;
  }
  throw NotAFixedPointError("no power Sigma^N, N <= " + std::to_string(s.alphabet().size()) +
                            ", maps " + to_string(seed) + " to a longer word beginning with it");
}

namespace {

std::vector<std::uint32_t> coded_fixed_point(const Substitution& s, std::size_t seed_index, std::size_t period,
                                             std::size_t n) {
  std::vector<std::uint32_t> word{static_cast<std::uint32_t>(seed_index)};
  while (word.size() < n) {
    for (std::size_t step = 0; step < period; ++step) {
      std::vector<std::uint32_t> next;
      next.reserve(word.size() * 2);
      for (auto a : word) {
        const auto& img = s.coded_image(a);
        next.insert(next.end(), img.begin(), img.end());
        if (next.size() >= n && step + 1 == period) break;
      }
      word = std::move(next);
    }
  }
  word.resize(std::min(word.size(), n));
  return word;
}

}  // namespace

Word fixed_point_prefix(const Substitution& s, const Letter& seed, std::size_t n) {
  std::size_t period = fixed_point_period(s, seed);
  auto coded = coded_fixed_point(s, *s.index_of(seed), period, n);
  std::vector<Letter> letters;
  letters.reserve(coded.size());
  for (auto c : coded) letters.push_back(s.alphabet()[c]);
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------
// Morse

Letter morse_letter(std::int64_t i, Sidedness sided) {
  if (i < 0) {
    if (sided == Sidedness::one_sided) {
      throw DomainError("negative index " + std::to_string(i) + " into a one-sided sequence");
    }
    i = -i - 1;
  }
  return Letter(std::popcount(static_cast<std::uint64_t>(i)) & 1);
}

Word morse_prefix(std::size_t n) {
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) letters.emplace_back(std::popcount(static_cast<std::uint64_t>(i)) & 1);
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------
// Mechanical words and rotations

namespace {

void require_unit_interval(const AlgebraicTarget& alpha, bool allow_one) {
  // compare(x) is the sign of x - alpha.
  const bool nonnegative = alpha.compare(Rational(0)) <= 0;
  const int one = alpha.compare(Rational(1));
  const bool below_one = allow_one ? one >= 0 : one > 0;
  if (!nonnegative || !below_one) {
    throw DomainError("alpha = " + alpha.to_string() + " must lie in " + (allow_one ? "[0, 1]" : "[0, 1)"));
  }
}

Letter mechanical_letter(const AlgebraicTarget& alpha, MechanicalConvention convention, std::int64_t i) {
  Integer idx(static_cast<long>(i));
  if (convention == MechanicalConvention::upper) {
    return Letter(alpha.ceil_multiple(idx + 1) - alpha.ceil_multiple(idx));
  }
  return Letter(alpha.floor_multiple(idx) - alpha.floor_multiple(idx - 1));
}

Letter rotation_letter(const AlgebraicTarget& alpha, const Rational& x0, std::int64_t i) {
  Integer idx(static_cast<long>(i));
  return Letter(alpha.floor_affine(x0, idx) - alpha.floor_affine(x0, idx - 1));
}

}  // namespace

Word mechanical_word(const AlgebraicTarget& alpha, std::size_t n, MechanicalConvention convention) {
  require_unit_interval(alpha, true);
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(mechanical_letter(alpha, convention, static_cast<std::int64_t>(i)));
  return Word(std::move(letters));
}

Word rotation_coding(const AlgebraicTarget& alpha, const Rational& x0, std::size_t n) {
  require_unit_interval(alpha, false);
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(rotation_letter(alpha, x0, static_cast<std::int64_t>(i)));
  return Word(std::move(letters));
}

Integer floor_multiple(const AlgebraicTarget& alpha, const Integer& i) { return alpha.floor_multiple(i); }

// ---------------------------------------------------------------------------
// Sequence handles

namespace detail {

class SequenceSource {
 public:
  virtual ~SequenceSource() = default;
  virtual SequenceHandle::Kind kind() const = 0;
  virtual Sidedness sidedness() const = 0;
  // Called only with indices inside the declared domain.
  virtual Letter at(std::int64_t i) const = 0;
  virtual std::string describe() const = 0;

  virtual std::vector<Letter> range(std::int64_t lo, std::int64_t hi) const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t i = lo; i < hi; ++i) out.push_back(at(i));
    return out;
  }
};

}  // namespace detail

namespace {

using detail::SequenceSource;
using Kind = SequenceHandle::Kind;

class MorseSource final : public SequenceSource {
 public:
  explicit MorseSource(Sidedness sided) : sided_(sided) {}
  Kind kind() const override {
    return sided_ == Sidedness::one_sided ? Kind::morse_one_sided : Kind::morse_two_sided;
  }
  Sidedness sidedness() const override { return sided_; }
  Letter at(std::int64_t i) const override { return morse_letter(i, sided_); }
  std::string describe() const override {
    return sided_ == Sidedness::one_sided ? "morse(one-sided)" : "morse(two-sided)";
  }

 private:
  Sidedness sided_;
};

class FixedPointSource final : public SequenceSource {
 public:
  FixedPointSource(Substitution s, Letter seed)
      : subst_(std::move(s)), seed_(std::move(seed)), period_(fixed_point_period(subst_, seed_)) {}

  Kind kind() const override { return Kind::substitution_fixed_point; }
  Sidedness sidedness() const override { return Sidedness::one_sided; }
  Letter at(std::int64_t i) const override {
    ensure(static_cast<std::size_t>(i) + 1);
    std::lock_guard lock(mutex_);
    return subst_.alphabet()[cache_[static_cast<std::size_t>(i)]];
  }
  std::vector<Letter> range(std::int64_t lo, std::int64_t hi) const override {
    ensure(static_cast<std::size_t>(hi));
    std::lock_guard lock(mutex_);
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(hi - lo));
    for (auto i = lo; i < hi; ++i) out.push_back(subst_.alphabet()[cache_[static_cast<std::size_t>(i)]]);
    return out;
  }
  std::string describe() const override {
    return "fixed-point(seed=" + to_string(seed_) + "; " + subst_.to_string() + ")";
  }

 private:
  // The cached prefix only ever grows, and every prefix of the fixed point is
  // unique, so readers never observe different letters.
  void ensure(std::size_t n) const {
    std::lock_guard lock(mutex_);
    if (cache_.size() >= n) return;
    std::size_t target = std::max<std::size_t>(n, 2 * cache_.size());
    cache_ = coded_fixed_point(subst_, *subst_.index_of(seed_), period_, target);
  }

  Substitution subst_;
  Letter seed_;
  std::size_t period_;
  mutable std::mutex mutex_;
  mutable std::vector<std::uint32_t> cache_;
};

class MechanicalSource final : public SequenceSource {
 public:
  MechanicalSource(AlgebraicTarget alpha, MechanicalConvention convention)
      : alpha_(std::move(alpha)), convention_(convention) {
    require_unit_interval(alpha_, true);
  }
  Kind kind() const override { return Kind::mechanical; }
  Sidedness sidedness() const override { return Sidedness::two_sided; }
  Letter at(std::int64_t i) const override { return mechanical_letter(alpha_, convention_, i); }
  std::string describe() const override {
    return "mechanical(alpha=" + alpha_.to_string() + ", " +
           (convention_ == MechanicalConvention::upper ? "upper" : "lower") + ")";
  }

 private:
  AlgebraicTarget alpha_;
  MechanicalConvention convention_;
};

class RotationSource final : public SequenceSource {
 public:
  RotationSource(AlgebraicTarget alpha, Rational x0) : alpha_(std::move(alpha)), x0_(std::move(x0)) {
    require_unit_interval(alpha_, false);
  }
  Kind kind() const override { return Kind::rotation_coding; }
  Sidedness sidedness() const override { return Sidedness::two_sided; }
  Letter at(std::int64_t i) const override { return rotation_letter(alpha_, x0_, i); }
  std::string describe() const override {
    return "rotation(alpha=" + alpha_.to_string() + ", x0=" + to_string(x0_) + ")";
  }

 private:
  AlgebraicTarget alpha_;
  Rational x0_;
};

class PeriodicSource final : public SequenceSource {
 public:
  PeriodicSource(std::optional<Word> left, Word core, Word right)
      : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)) {
    if (right_.empty() || (left_ && left_->empty())) throw DomainError("periods must be nonempty words");
  }
  Kind kind() const override { return Kind::eventually_periodic; }
  Sidedness sidedness() const override { return left_ ? Sidedness::two_sided : Sidedness::one_sided; }
  Letter at(std::int64_t i) const override {
    if (i < 0) {
      auto len = static_cast<std::int64_t>(left_->size());
      return (*left_)[static_cast<std::size_t>(((i % len) + len) % len)];
    }
    auto core_len = static_cast<std::int64_t>(core_.size());
    if (i < core_len) return core_[static_cast<std::size_t>(i)];
    return right_[static_cast<std::size_t>((i - core_len) % static_cast<std::int64_t>(right_.size()))];
  }
  std::string describe() const override {
    std::string out = "periodic(";
    if (left_) out += "(" + to_string(*left_) + ")*";
    return out + to_string(core_) + "(" + to_string(right_) + ")*)";
  }

 private:
  std::optional<Word> left_;
  Word core_;
  Word right_;
};

class ShiftedSource final : public SequenceSource {
 public:
  ShiftedSource(std::shared_ptr<const SequenceSource> base, std::int64_t k) : base_(std::move(base)), k_(k) {}
  Kind kind() const override { return Kind::shifted; }
  Sidedness sidedness() const override { return base_->sidedness(); }
  Letter at(std::int64_t i) const override { return base_->at(i + k_); }
  std::vector<Letter> range(std::int64_t lo, std::int64_t hi) const override { return base_->range(lo + k_, hi + k_); }
  std::string describe() const override { return "shift(" + std::to_string(k_) + ", " + base_->describe() + ")"; }

  const std::shared_ptr<const SequenceSource>& base() const { return base_; }
  std::int64_t offset() const { return k_; }

 private:
  std::shared_ptr<const SequenceSource> base_;
  std::int64_t k_;
};

}  // namespace

SequenceHandle SequenceHandle::morse(Sidedness sided) { return SequenceHandle(std::make_shared<MorseSource>(sided)); }

SequenceHandle SequenceHandle::substitution_fixed_point(Substitution s, Letter seed) {
  return SequenceHandle(std::make_shared<FixedPointSource>(std::move(s), std::move(seed)));
}

SequenceHandle SequenceHandle::mechanical(AlgebraicTarget alpha, MechanicalConvention convention) {
  return SequenceHandle(std::make_shared<MechanicalSource>(std::move(alpha), convention));
}

SequenceHandle SequenceHandle::rotation_coding(AlgebraicTarget alpha, Rational x0) {
  return SequenceHandle(std::make_shared<RotationSource>(std::move(alpha), std::move(x0)));
}

SequenceHandle SequenceHandle::eventually_periodic(Word preperiod, Word period) {
  return SequenceHandle(std::make_shared<PeriodicSource>(std::nullopt, std::move(preperiod), std::move(period)));
}

SequenceHandle SequenceHandle::bi_periodic(Word left_period, Word core, Word right_period) {
  return SequenceHandle(
      std::make_shared<PeriodicSource>(std::move(left_period), std::move(core), std::move(right_period)));
}

SequenceHandle SequenceHandle::shifted(std::int64_t k) const {
  if (k == 0) return *this;
  auto* inner = dynamic_cast<const ShiftedSource*>(source_.get());
  // Undoing part of an earlier shift is fine; reaching before index 0 is not.
  std::int64_t total = inner ? inner->offset() + k : k;
  if (total < 0 && sidedness() == Sidedness::one_sided) {
    throw DomainError("one-sided sequences cannot be shifted by a negative amount");
  }
  if (inner) {
    if (total == 0) return SequenceHandle(inner->base());
    return SequenceHandle(std::make_shared<ShiftedSource>(inner->base(), total));
  }
  return SequenceHandle(std::make_shared<ShiftedSource>(source_, k));
}

SequenceHandle::Kind SequenceHandle::kind() const noexcept { return source_->kind(); }

Sidedness SequenceHandle::sidedness() const noexcept { return source_->sidedness(); }

Letter SequenceHandle::letter_at(std::int64_t i) const {
  if (i < 0 && sidedness() == Sidedness::one_sided) {
    throw DomainError("negative index " + std::to_string(i) + " into a one-sided sequence");
  }
  return source_->at(i);
}

Word SequenceHandle::window(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) throw BoundsError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + ") is reversed");
  if (lo < 0 && sidedness() == Sidedness::one_sided) {
    throw DomainError("negative index " + std::to_string(lo) + " into a one-sided sequence");
  }
  return Word(source_->range(lo, hi));
}

std::string SequenceHandle::describe() const { return source_->describe(); }

}  // namespace heavy
