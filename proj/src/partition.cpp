#include "cmcells/partition.hpp"

#include <algorithm>
#include <sstream>

#include "cmcells/errors.hpp"

namespace cmcells {

std::string Box::str() const {
  return "s(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

ResidueClass::ResidueClass(int v, int m) : modulus(m) {
  if (m < 1) throw InvalidParameter("residue modulus must be positive");
  value = ((v % m) + m) % m;
}

ResidueClass residue(const Box& b, int ell) { return ResidueClass(b.row - b.col, ell); }

TypeJ::TypeJ(int modulus, std::vector<int> members)
    : modulus_(modulus), members_(std::move(members)) {
  if (modulus_ < 1) throw InvalidParameter("type modulus must be positive");
  for (int j : members_) {
    if (j < 0 || j >= modulus_) {
      throw InvalidParameter("type member " + std::to_string(j) + " outside {0,...," +
                             std::to_string(modulus_ - 1) + "}");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TypeJ::contains(int j) const {
  return std::binary_search(members_.begin(), members_.end(), j);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidParameter("partition parts must be positive: " + str());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidParameter("partition parts must be weakly decreasing: " + str());
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_rows(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

int Partition::row(int p) const {
  if (p < 1 || p > length()) return 0;
  return parts_[p - 1];
}

int Partition::column(int q) const {
  if (q < 1) return 0;
  int len = 0;
  while (len < length() && parts_[len] >= q) ++len;
  return len;
}

bool Partition::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= row(b.row);
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int q = 1; q <= row(1); ++q) cols.push_back(column(q));
  return Partition(std::move(cols));
}

bool Partition::is_removable(const Box& b) const {
  return contains(b) && b.col == row(b.row) && row(b.row + 1) < b.col;
}

bool Partition::is_addable(const Box& b) const {
  if (b.row < 1 || b.col < 1 || contains(b)) return false;
  if (b.col != row(b.row) + 1) return false;
  return b.row == 1 || row(b.row - 1) >= b.col;
}

Partition Partition::without(const Box& b) const {
  if (!is_removable(b)) {
    throw ContractViolation(b.str() + " is not removable from " + str());
  }
  std::vector<int> rows = parts_;
  --rows[b.row - 1];
  return from_rows(std::move(rows));
}

Partition Partition::with(const Box& b) const {
  if (!is_addable(b)) throw ContractViolation(b.str() + " is not addable to " + str());
  std::vector<int> rows = parts_;
  if (b.row > length()) rows.push_back(0);
  ++rows[b.row - 1];
  return Partition(std::move(rows));
}

bool Partition::includes(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int p = 1; p <= other.length(); ++p) {
    if (other.row(p) > row(p)) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition staircase(int r) {
  if (r < 0) throw InvalidParameter("staircase rank must be nonnegative");
  std::vector<int> parts;
  for (int k = r; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(lambda.size());
  for (int p = 1; p <= lambda.length(); ++p) {
    for (int q = 1; q <= lambda.row(p); ++q) out.push_back({p, q});
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (int p = 1; p <= lambda.length(); ++p) {
    if (lambda.row(p + 1) < lambda.row(p)) out.push_back({p, lambda.row(p)});
  }
  return out;
}

std::vector<Box> addable_boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (int p = 1; p <= lambda.length() + 1; ++p) {
    if (p == 1 || lambda.row(p - 1) > lambda.row(p)) out.push_back({p, lambda.row(p) + 1});
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& lambda, ResidueClass j) {
  std::vector<Box> out;
  for (const Box& b : removable_boxes(lambda)) {
    if (residue(b, j.modulus) == j) out.push_back(b);
  }
  return out;
}

std::vector<Box> addable_boxes(const Partition& lambda, ResidueClass j) {
  std::vector<Box> out;
  for (const Box& b : addable_boxes(lambda)) {
    if (residue(b, j.modulus) == j) out.push_back(b);
  }
  return out;
}

Partition j_heart(const Partition& lambda, const TypeJ& J) {
  Partition current = lambda;
  if (J.empty()) return current;
  for (;;) {
    bool removed = false;
    for (const Box& b : removable_boxes(current)) {
      if (J.contains(residue(b, J.modulus()).value)) {
        current = current.without(b);
        removed = true;
        break;
      }
    }
    if (!removed) return current;
  }
}

bool same_j_class(const Partition& lambda, const Partition& mu, const TypeJ& J) {
  return j_heart(lambda, J) == j_heart(mu, J);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_size) {
  if (n < 0) throw InvalidParameter("cannot enumerate partitions of a negative number");
  if (n > max_size) {
    throw EnumerationLimit("partitions of " + std::to_string(n) + " exceed the size bound " +
                           std::to_string(max_size));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace cmcells
