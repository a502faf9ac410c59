#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "shortcycle/error.hpp"

namespace shortcycle {

// Bijection on 0..n-1 stored as its image array: p(v) == images[v].
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) throw Error("not a permutation");
      seen[x] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t v) const { return images_[v]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      p.images_[images_[i]] = static_cast<std::uint32_t>(i);
    }
    return p;
  }

  // (p * q)(v) == p(q(v)): q acts first, matching the left-action notation
  // x(yv) == (xy)v.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("permutation degree mismatch");
    Permutation r;
    r.images_.resize(q.images_.size());
    for (std::size_t i = 0; i < q.images_.size(); ++i) {
      r.images_[i] = p.images_[q.images_[i]];
    }
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(images_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace shortcycle
