// Copyright 2026 The talex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace talex::fox {

struct Letter {
  int gen = 0;
  int exp = 1; // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// Freely reduced word in the free group on generators 0, 1, ...
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) { append(letters.begin(), letters.end()); }
  explicit Word(const std::vector<Letter> &letters) { append(letters.begin(), letters.end()); }

  static Word generator(int g, int exp = 1) { return Word{Letter{g, exp}}; }

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Exponent sum of generator g.
  long long exponent_sum(int g) const {
    long long total = 0;
    for (const Letter &l : letters_)
      if (l.gen == g)
        total += l.exp;
    return total;
  }

  Word &operator*=(const Word &o) {
    append(o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend Word operator*(Word u, const Word &v) { return u *= v; }

  Word inverse() const {
    Word r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(it->inverse());
    return r;
  }

  Word power(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    if (k < 0)
      k = -k;
    Word r;
    for (long long i = 0; i < k; ++i)
      r *= base;
    return r;
  }

  friend auto operator<=>(const Word &, const Word &) = default;
  friend bool operator==(const Word &, const Word &) = default;

  /// Render as e.g. "a c a c^-1"; "1" for the empty word.
  std::string to_string(const std::vector<std::string> &names = {}) const {
    if (letters_.empty())
      return "1";
    std::string out;
    for (const Letter &l : letters_) {
      if (!out.empty())
        out += ' ';
      out += l.gen < static_cast<int>(names.size()) ? names[l.gen] : "x" + std::to_string(l.gen);
      if (l.exp < 0)
        out += "^-1";
    }
    return out;
  }

private:
  template <class It>
  void append(It first, It last) {
    for (; first != last; ++first) {
      const Letter &l = *first;
      if (l.exp != 1 && l.exp != -1)
        throw std::invalid_argument("word letters carry exponent +1 or -1");
      if (!letters_.empty() && letters_.back() == l.inverse())
        letters_.pop_back();
      else
        letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

inline Word word_multiply(const Word &u, const Word &v) { return u * v; }
inline Word word_invert(const Word &u) { return u.inverse(); }

/// Product of powered words, b_1^{k_1} b_2^{k_2} ..., kept unexpanded so
/// that powers can be differentiated by a telescoping sum.
struct PowerFactor {
  Word base;
  long long power = 1;
};

class PowerProduct {
public:
  PowerProduct() = default;
  PowerProduct(Word w) { factors_.push_back({std::move(w), 1}); }
  PowerProduct(std::initializer_list<PowerFactor> f) : factors_(f) {}

  const std::vector<PowerFactor> &factors() const { return factors_; }

  PowerProduct &then(Word base, long long power = 1) {
    factors_.push_back({std::move(base), power});
    return *this;
  }

  Word expand() const {
    Word w;
    for (const auto &f : factors_)
      w *= f.base.power(f.power);
    return w;
  }

  long long exponent_sum(int g) const {
    long long total = 0;
    for (const auto &f : factors_)
      total += f.power * f.base.exponent_sum(g);
    return total;
  }

private:
  std::vector<PowerFactor> factors_;
};

} // namespace talex::fox
