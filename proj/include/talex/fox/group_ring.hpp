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

#include "talex/fox/word.hpp"

#include <map>
#include <string>

namespace talex::fox {

/// Finite Z-linear combination of free-group words.
class GroupRingElement {
public:
  using Terms = std::map<Word, long long>;

  GroupRingElement() = default;
  GroupRingElement(const Word &w, long long c = 1) { add(w, c); }

  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long long coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Word &w, long long c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  GroupRingElement &operator+=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_)
      add(w, c);
    return *this;
  }
  GroupRingElement &operator-=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_)
      add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement &a) { return GroupRingElement() - a; }

  friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
    GroupRingElement r;
    for (const auto &[u, cu] : a.terms_)
      for (const auto &[v, cv] : b.terms_)
        r.add(u * v, cu * cv);
    return r;
  }

  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const Word &g, const GroupRingElement &a) {
    GroupRingElement r;
    for (const auto &[w, c] : a.terms_)
      r.add(g * w, c);
    return r;
  }

  friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;

  std::string to_string(const std::vector<std::string> &names = {}) const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &[w, c] : terms_) {
      if (!out.empty())
        out += c < 0 ? " - " : " + ";
      else if (c < 0)
        out += "-";
      long long a = c < 0 ? -c : c;
      if (a != 1)
        out += std::to_string(a) + "*";
      out += w.to_string(names);
    }
    return out;
  }

private:
  Terms terms_;
};

} // namespace talex::fox
