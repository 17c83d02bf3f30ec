#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pgq {

// A bijection of {0..n-1}, stored as its image array.
class Permutation {
public:
  // Validates that `images` is a bijection of {0..n-1}; throws not_bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  // Right-action composition: (p.then(q))(i) == q(p(i)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation power(std::uint64_t k) const;

  bool is_identity() const;
  int order() const;
  std::vector<int> fixed_points() const;

  // All cycles including fixed points, each starting at its least element,
  // listed by increasing least element, e.g. "(0)(1 4)(2 3)".
  std::string cycle_notation() const;
  // Sorted multiset of cycle lengths, fixed points included.
  std::vector<int> cycle_type() const;

  const std::vector<std::uint8_t>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::uint8_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace pgq
