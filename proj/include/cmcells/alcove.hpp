#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cmcells/cores.hpp"
#include "cmcells/partition.hpp"
#include "cmcells/rational.hpp"

namespace cmcells {

/// A point (theta_0, ..., theta_{ell-1}) of the rational parameter space.
class ThetaPoint {
 public:
  ThetaPoint() = default;
  explicit ThetaPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  /// Parses a comma-separated list of "p" or "p/q" entries.
  static ThetaPoint parse(const std::string& text);

  int ell() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }

  Rational sum() const;
  bool in_theta1() const { return sum() == Rational(1); }
  /// All coordinates >= 0: the closed fundamental alcove when the sum is 1.
  bool in_closed_fundamental_alcove() const;
  std::string str() const;

  friend bool operator==(const ThetaPoint&, const ThetaPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// A permutation of {0, ..., ell-1} in one-line form: perm[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int ell);
  /// The transposition of a and b.
  static Permutation swap(int ell, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// An element (s, w) of the affine symmetric group, realized as
/// Z_0^ell x S_ell. On coordinates x with theta_i = x_{i-1} - x_i (i >= 1)
/// and theta_0 = level - x_0 + x_{ell-1} it acts by x -> w.(x - level*s),
/// where (w.y)_{w(i)} = y_i.
class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(Charge translation, Permutation permutation);
  static AffineElement identity(int ell);
  /// The simple reflection sigma_j, 0 <= j < ell.
  static AffineElement generator(int j, int ell);

  int ell() const { return translation_.level(); }
  const Charge& translation() const { return translation_; }
  const Permutation& permutation() const { return permutation_; }

  ThetaPoint apply(const ThetaPoint& theta) const;
  AffineElement inverse() const;

  /// Composition of actions: (a * b).apply(t) == a.apply(b.apply(t)).
  friend AffineElement operator*(const AffineElement& a, const AffineElement& b);

  std::string str() const;

  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;

 private:
  Charge translation_;
  Permutation permutation_;
};

/// The outcome of moving a point of Theta_1 into the closed fundamental alcove.
struct ReductionResult {
  AffineElement element;  ///< element.apply(reduced) is the input point
  ThetaPoint reduced;     ///< all coordinates >= 0
  std::vector<int> word;  ///< generator indices; element = sigma_{word[0]} ... sigma_{word[k-1]}
  TypeJ type;             ///< indices of the zero coordinates of `reduced`
};

/// Type-B stability parameters (-c_s + c_t, -c_t), before rescaling.
ThetaPoint theta_from_c_type_B(const Rational& c_s, const Rational& c_t);

/// Rescales theta to coordinate sum 1. Throws NotNormalizable on sum zero.
ThetaPoint normalize_to_theta1(const ThetaPoint& theta);

/// sigma_j: negate theta_j and add it to both cyclic neighbours.
ThetaPoint apply_generator(int j, const ThetaPoint& theta);

/// Reflects theta into the closed fundamental alcove, always through the
/// smallest negative coordinate. Throws InvalidParameter off Theta_1.
ReductionResult reduce_to_fundamental(const ThetaPoint& theta);

/// One reduction per alcove whose closure contains theta: the reduction
/// element multiplied by every element of the stabilizer W_J. A single result
/// for interior points.
std::vector<ReductionResult> adjacent_alcove_reductions(const ThetaPoint& theta);

/// Closed-form label of the ell = 2 alcove A_r = {(d, 1-d) : r < d < r+1}:
/// ((r/2, -r/2), e) for even r, ((1-r)/2, (r-1)/2), sigma_1) for odd r.
AffineElement type_b_alcove_label(int r);

}  // namespace cmcells
