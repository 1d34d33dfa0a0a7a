#pragma once

#include <string>
#include <vector>

#include "diagre/term.hpp"

namespace diagre {

/// A bijection on {1..n}, stored as the image list (pi(1), ..., pi(n)).
class Permutation {
 public:
  Permutation() = default;

  /// Validates bijectivity; throws TypeError otherwise.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p2 ∘ p1)(i) = p2(p1(i)). Sizes must agree.
Permutation compose(const Permutation& p2, const Permutation& p1);

/// Direct sum: first |p1| points map through p1, the rest through p2
/// shifted by |p1|.
Permutation dsum(const Permutation& p1, const Permutation& p2);

Permutation inverse(const Permutation& p);

/// The i with p(i) = 1. Throws TypeError on the empty permutation.
int preimage_of_one(const Permutation& p);

/// Drops the point mapped to 1 and shifts the rest down:
/// (p|1)(i) = p(i)-1 for i < p^-1(1), p(i+1)-1 afterwards.
Permutation restrict_first(const Permutation& p);

/// Base-case convention for the swap interpretation. Block reads
/// swap(n,m) as (m+1,...,m+n,1,...,m): the first block lands below the
/// second. BlockTransposed is the transposed reading (n+1,...,n+m,1,...,n);
/// it is exposed for side-by-side comparison only.
enum class SwapConvention { Block, BlockTransposed };

/// Interprets a symmetry-only term as the permutation tracking each input
/// wire to its output position: sequential composition composes, parallel
/// composition direct-sums. Throws SymmetryError on named generators.
Permutation interpret(const TermPtr& t,
                      SwapConvention conv = SwapConvention::Block);

/// The toboggan of size d >= 1: swap(d-1, 1), which lifts the d-th wire
/// to the top; its interpretation is (2,...,d,1).
TermPtr toboggan(int d);

/// Canonical-form term of a permutation. The image passes
/// is_canonical_form and interprets back to the input.
TermPtr cf(const Permutation& p);

/// "(2,3,1)" with 1-based images; "()" for size 0.
std::string print_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& text);

}  // namespace diagre
