#include "cmcells/cores.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cmcells/errors.hpp"

namespace cmcells {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

/// Decodes a Maya diagram (beads listed descending down to a floor below
/// which every position is occupied) with known charge into its partition.
Partition decode_maya(const std::vector<int>& beads, int charge) {
  std::vector<int> rows;
  rows.reserve(beads.size());
  for (std::size_t i = 0; i < beads.size(); ++i) {
    rows.push_back(beads[i] + static_cast<int>(i) + 1 - charge);
  }
  return Partition::from_rows(std::move(rows));
}

int maya_charge(const std::vector<int>& beads, int floor) {
  return static_cast<int>(beads.size()) + floor;
}

}  // namespace

Charge::Charge(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidParameter("charge must have at least one entry");
  long sum = std::accumulate(entries_.begin(), entries_.end(), 0L);
  if (sum != 0) throw InvalidParameter("charge entries must sum to zero: " + str());
}

std::string Charge::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidParameter("multipartition must have level >= 1");
}

int Multipartition::size() const {
  int n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

std::string Multipartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += components_[i].empty() ? std::string("∅") : components_[i].str();
  }
  return out + ")";
}

namespace {

void compositions_rec(int remaining, int slots, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    prefix.push_back(k);
    compositions_rec(remaining - k, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int ell, int n, int max_size,
                                                      std::size_t max_count) {
  if (ell < 1) throw InvalidParameter("level ell must be positive");
  if (n < 0) throw InvalidParameter("multipartition size must be nonnegative");
  if (n > max_size) {
    throw EnumerationLimit("multipartitions of " + std::to_string(n) +
                           " exceed the size bound " + std::to_string(max_size));
  }
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int k = 0; k <= n; ++k) by_size[k] = enumerate_partitions(k, max_size);

  std::vector<std::vector<int>> compositions;
  std::vector<int> prefix;
  compositions_rec(n, ell, prefix, compositions);

  std::vector<Multipartition> out;
  for (const auto& sizes : compositions) {
    std::size_t count = 1;
    for (int k : sizes) count *= by_size[k].size();
    if (out.size() + count > max_count) {
      throw EnumerationLimit("|P(" + std::to_string(ell) + "," + std::to_string(n) +
                             ")| exceeds the count bound " + std::to_string(max_count));
    }
    std::vector<std::size_t> index(ell, 0);
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<Partition> comps;
      comps.reserve(ell);
      for (int k = 0; k < ell; ++k) comps.push_back(by_size[sizes[k]][index[k]]);
      out.emplace_back(std::move(comps));
      for (int k = ell - 1; k >= 0; --k) {
        if (++index[k] < by_size[sizes[k]].size()) break;
        index[k] = 0;
      }
    }
  }
  return out;
}

Abacus Abacus::of_partition(const Partition& lambda, int ell) {
  if (ell < 1) throw InvalidParameter("abacus needs at least one runner");
  // Beta-numbers lambda_i - i for i <= beads; beads is a multiple of ell so
  // the implicit region below -beads is aligned with every runner.
  const int beads = ell * ((lambda.length() + ell - 1) / ell + 1);
  const int floor = -beads / ell;
  std::vector<std::vector<int>> runners(ell);
  for (int i = 1; i <= beads; ++i) {
    int beta = lambda.row(i) - i;
    runners[floor_mod(beta, ell)].push_back(floor_div(beta, ell));
  }
  for (auto& runner : runners) {
    for (int m : runner) {
      if (m < floor) throw ContractViolation("abacus window too small for " + lambda.str());
    }
  }
  return Abacus(floor, std::move(runners));
}

Abacus Abacus::of_quotient(const Charge& s, const Multipartition& quotient) {
  if (s.level() != quotient.level()) {
    throw InvalidParameter("charge level " + std::to_string(s.level()) +
                           " differs from multipartition level " +
                           std::to_string(quotient.level()));
  }
  const int ell = s.level();
  int floor = 0;
  for (int k = 0; k < ell; ++k) floor = std::min(floor, s[k] - quotient[k].length() - 1);
  std::vector<std::vector<int>> runners(ell);
  for (int k = 0; k < ell; ++k) {
    for (int i = 1;; ++i) {
      int m = quotient[k].row(i) - i + s[k];
      if (m < floor) break;
      runners[k].push_back(m);
    }
  }
  return Abacus(floor, std::move(runners));
}

Charge Abacus::charges() const {
  std::vector<int> out;
  out.reserve(runners_.size());
  for (const auto& runner : runners_) out.push_back(maya_charge(runner, floor_));
  return Charge(std::move(out));
}

Multipartition Abacus::quotient() const {
  std::vector<Partition> comps;
  comps.reserve(runners_.size());
  for (const auto& runner : runners_) {
    comps.push_back(decode_maya(runner, maya_charge(runner, floor_)));
  }
  return Multipartition(std::move(comps));
}

Partition Abacus::partition() const {
  const int ell = this->ell();
  std::vector<int> beta;
  for (int k = 0; k < ell; ++k) {
    for (int m : runners_[k]) beta.push_back(ell * m + k);
  }
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int total_charge = 0;
  for (const auto& runner : runners_) total_charge += maya_charge(runner, floor_);
  if (total_charge != 0) throw ContractViolation("abacus total charge is nonzero");
  return decode_maya(beta, 0);
}

Abacus Abacus::core() const {
  std::vector<std::vector<int>> runners(runners_.size());
  for (std::size_t k = 0; k < runners_.size(); ++k) {
    int top = floor_ + static_cast<int>(runners_[k].size()) - 1;
    for (int m = top; m >= floor_; --m) runners[k].push_back(m);
  }
  return Abacus(floor_, std::move(runners));
}

Partition ell_core(const Partition& lambda, int ell) {
  return Abacus::of_partition(lambda, ell).core().partition();
}

Partition core_of_charge(const Charge& s) {
  return tau(s, Multipartition::empty(s.level()));
}

Partition tau(const Charge& s, const Multipartition& mp) {
  return Abacus::of_quotient(s, mp).partition();
}

Multipartition tau_inverse(const Charge& s, const Partition& lambda) {
  Abacus abacus = Abacus::of_partition(lambda, s.level());
  if (abacus.charges() != s) {
    throw WrongCore("partition " + lambda.str() + " has " + std::to_string(s.level()) +
                    "-core " + abacus.core().partition().str() + " but charge " + s.str() +
                    " has core " + core_of_charge(s).str());
  }
  return abacus.quotient();
}

std::vector<Partition> enumerate_P_r(int n, int r, int max_size) {
  if (n < 0 || r < 0) throw InvalidParameter("P_r(n) needs n >= 0 and r >= 0");
  const Partition core = staircase(r);
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(staircase_size(r) + 2 * n, max_size)) {
    if (ell_core(lambda, 2) == core) out.push_back(std::move(lambda));
  }
  return out;
}

}  // namespace cmcells
