#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powmatch/error.hpp"

namespace powmatch {

/// Permutation of {0, ..., degree-1} stored as its image array.
///
/// Products are read left to right: (p * q)(i) = q(p(i)), i.e. p is applied
/// first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<std::uint32_t>(i);
  }
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw DomainError("image array is not a permutation");
      seen[v] = true;
    }
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const noexcept {
    return i < images_.size() ? images_[i] : i;
  }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// Same permutation on a larger point set.
  Permutation extended(std::size_t degree) const {
    Permutation p(std::max(degree, images_.size()));
    std::copy(images_.begin(), images_.end(), p.images_.begin());
    return p;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    const std::size_t d = std::max(p.degree(), q.degree());
    Permutation r(d);
    for (std::uint32_t i = 0; i < d; ++i) r.images_[i] = q(p(i));
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    const std::size_t d = std::max(a.degree(), b.degree());
    for (std::uint32_t i = 0; i < d; ++i)
      if (a(i) != b(i)) return false;
    return true;
  }

  /// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (out.back() != '(') out += ' ';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  /// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4 5)" or "(1,2)".
  static Permutation parse_cycles(std::string_view text) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t degree = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<std::uint32_t> cycle;
      while (true) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
          ++i;
        if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("unexpected character in cycle notation: " + std::string(text));
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 1'000'000) throw ParseError("point too large in cycle notation");
          ++i;
        }
        if (v == 0) throw ParseError("cycle points are 1-based");
        cycle.push_back(static_cast<std::uint32_t>(v - 1));
        degree = std::max<std::size_t>(degree, v);
      }
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
    Permutation p(degree);
    std::vector<bool> moved(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (moved[c[k]]) throw ParseError("point " + std::to_string(c[k] + 1) + " repeated in cycles");
        moved[c[k]] = true;
        p.images_[c[k]] = c[(k + 1) % c.size()];
      }
    }
    return p;
  }

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace powmatch
