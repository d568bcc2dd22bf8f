#include "cmcells/alcove.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "cmcells/errors.hpp"

namespace cmcells {

namespace {

constexpr long kReductionFuse = 1'000'000;
constexpr std::size_t kMaxStabilizerOrder = 1'000'000;

void require_level(int ell) {
  if (ell < 2) throw InvalidParameter("the affine action needs ell >= 2");
}

}  // namespace

ThetaPoint ThetaPoint::parse(const std::string& text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto first = piece.find_first_not_of(' ');
    auto last = piece.find_last_not_of(' ');
    if (first == std::string::npos) throw InvalidParameter("empty theta coordinate in '" + text + "'");
    coords.push_back(Rational::parse(piece.substr(first, last - first + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() < 2) throw InvalidParameter("theta needs at least two coordinates: '" + text + "'");
  return ThetaPoint(std::move(coords));
}

Rational ThetaPoint::sum() const {
  Rational total;
  for (const auto& c : coords_) total += c;
  return total;
}

bool ThetaPoint::in_closed_fundamental_alcove() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::string ThetaPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? "," : "") + coords_[i].str();
  return out + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw InvalidParameter("not a permutation: " + str());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int ell) {
  std::vector<int> images(ell);
  for (int i = 0; i < ell; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::swap(int ell, int a, int b) {
  auto images = identity(ell).images_;
  std::swap(images.at(a), images.at(b));
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidParameter("permutation sizes differ");
  std::vector<int> images(a.size());
  for (int i = 0; i < a.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) out += (i ? "," : "") + std::to_string(images_[i]);
  return out + "]";
}

AffineElement::AffineElement(Charge translation, Permutation permutation)
    : translation_(std::move(translation)), permutation_(std::move(permutation)) {
  if (translation_.level() != permutation_.size()) {
    throw InvalidParameter("translation and permutation have different levels");
  }
}

AffineElement AffineElement::identity(int ell) {
  return AffineElement(Charge::zero(ell), Permutation::identity(ell));
}

AffineElement AffineElement::generator(int j, int ell) {
  require_level(ell);
  if (j < 0 || j >= ell) throw InvalidParameter("generator index out of range");
  if (j > 0) return AffineElement(Charge::zero(ell), Permutation::swap(ell, j - 1, j));
  std::vector<int> s(ell, 0);
  s.front() = 1;
  s.back() = -1;
  return AffineElement(Charge(std::move(s)), Permutation::swap(ell, 0, ell - 1));
}

ThetaPoint AffineElement::apply(const ThetaPoint& theta) const {
  const int n = ell();
  if (theta.ell() != n) throw InvalidParameter("theta has the wrong number of coordinates");
  const Rational level = theta.sum();
  std::vector<Rational> x(n);
  for (int i = 1; i < n; ++i) x[i] = x[i - 1] - theta[i];
  std::vector<Rational> z(n);
  for (int i = 0; i < n; ++i) z[permutation_(i)] = x[i] - level * Rational(translation_[i]);
  std::vector<Rational> out(n);
  out[0] = level - z[0] + z[n - 1];
  for (int i = 1; i < n; ++i) out[i] = z[i - 1] - z[i];
  return ThetaPoint(std::move(out));
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
  // a(b(x)) = wa.(wb.(x - sb) - sa) = wa wb.(x - sb - wb^{-1}.sa)
  const int n = a.ell();
  if (b.ell() != n) throw InvalidParameter("affine elements have different levels");
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = b.translation_[i] + a.translation_[b.permutation_(i)];
  return AffineElement(Charge(std::move(s)), a.permutation_ * b.permutation_);
}

AffineElement AffineElement::inverse() const {
  // x = w^{-1}.y + s, i.e. (s', w') = (-w.s, w^{-1}).
  const int n = ell();
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[permutation_(i)] = -translation_[i];
  return AffineElement(Charge(std::move(s)), permutation_.inverse());
}

std::string AffineElement::str() const {
  return "(" + translation_.str() + ", " + permutation_.str() + ")";
}

ThetaPoint theta_from_c_type_B(const Rational& c_s, const Rational& c_t) {
  return ThetaPoint({-c_s + c_t, -c_t});
}

ThetaPoint normalize_to_theta1(const ThetaPoint& theta) {
  const Rational total = theta.sum();
  if (total.is_zero()) {
    throw NotNormalizable("theta " + theta.str() + " has coordinate sum 0 and cannot be rescaled");
  }
  std::vector<Rational> out;
  out.reserve(theta.ell());
  for (const auto& c : theta.coords()) out.push_back(c / total);
  return ThetaPoint(std::move(out));
}

ThetaPoint apply_generator(int j, const ThetaPoint& theta) {
  const int n = theta.ell();
  require_level(n);
  if (j < 0 || j >= n) throw InvalidParameter("generator index out of range");
  std::vector<Rational> out = theta.coords();
  const Rational t = theta[j];
  out[j] = -t;
  out[(j + n - 1) % n] += t;
  out[(j + 1) % n] += t;
  return ThetaPoint(std::move(out));
}

namespace {

TypeJ zero_set(const ThetaPoint& reduced) {
  std::vector<int> zeros;
  for (int j = 0; j < reduced.ell(); ++j) {
    if (reduced[j].is_zero()) zeros.push_back(j);
  }
  return TypeJ(reduced.ell(), std::move(zeros));
}

}  // namespace

ReductionResult reduce_to_fundamental(const ThetaPoint& theta) {
  const int n = theta.ell();
  require_level(n);
  if (!theta.in_theta1()) {
    throw InvalidParameter("theta " + theta.str() + " is not in Theta_1 (sum " + theta.sum().str() + ")");
  }
  ThetaPoint current = theta;
  AffineElement element = AffineElement::identity(n);
  std::vector<int> word;
  for (long steps = 0;; ++steps) {
    if (steps >= kReductionFuse) {
      throw ContractViolation("alcove reduction of " + theta.str() + " did not terminate");
    }
    int j = -1;
    for (int k = 0; k < n; ++k) {
      if (current[k].sign() < 0) {
        j = k;
        break;
      }
    }
    if (j < 0) break;
    current = apply_generator(j, current);
    element = element * AffineElement::generator(j, n);
    word.push_back(j);
  }
  TypeJ type = zero_set(current);
  return ReductionResult{std::move(element), std::move(current), std::move(word), std::move(type)};
}

std::vector<ReductionResult> adjacent_alcove_reductions(const ThetaPoint& theta) {
  const ReductionResult base = reduce_to_fundamental(theta);
  const int n = theta.ell();
  if (static_cast<int>(base.type.members().size()) >= n) {
    throw ContractViolation("stabilizer type is the full generator set");
  }

  // Breadth-first enumeration of the finite parabolic subgroup W_J, keeping a
  // shortest word for each element.
  std::map<AffineElement, std::vector<int>> words;
  std::deque<AffineElement> queue;
  const AffineElement id = AffineElement::identity(n);
  words.emplace(id, std::vector<int>{});
  queue.push_back(id);
  std::vector<AffineElement> order{id};
  while (!queue.empty()) {
    AffineElement u = queue.front();
    queue.pop_front();
    for (int j : base.type.members()) {
      AffineElement next = u * AffineElement::generator(j, n);
      if (words.contains(next)) continue;
      auto word = words.at(u);
      word.push_back(j);
      words.emplace(next, std::move(word));
      queue.push_back(next);
      order.push_back(next);
      if (order.size() > kMaxStabilizerOrder) {
        throw EnumerationLimit("stabilizer of " + theta.str() + " is too large to enumerate");
      }
    }
  }

  std::vector<ReductionResult> out;
  out.reserve(order.size());
  for (const auto& u : order) {
    auto word = base.word;
    const auto& tail = words.at(u);
    word.insert(word.end(), tail.begin(), tail.end());
    out.push_back(ReductionResult{base.element * u, base.reduced, std::move(word), base.type});
  }
  return out;
}

AffineElement type_b_alcove_label(int r) {
  if (r % 2 == 0) return AffineElement(Charge({r / 2, -r / 2}), Permutation::identity(2));
  return AffineElement(Charge({(1 - r) / 2, (r - 1) / 2}), Permutation::swap(2, 0, 1));
}

}  // namespace cmcells
