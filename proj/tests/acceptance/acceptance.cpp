// One line per acceptance criterion; exit status 1 if any line is FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "cmcells/alcove.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/domino.hpp"
#include "cmcells/errors.hpp"
#include "cmcells/verify.hpp"

using namespace cmcells;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
}

bool all_singletons(const BlockPartition& bp) {
  return std::all_of(bp.blocks.begin(), bp.blocks.end(), [](const Block& b) { return b.members.size() == 1; });
}

Outcome cross_check() {
  auto start = std::chrono::steady_clock::now();
  VerifyOptions options;
  options.max_n = 4;
  options.max_r = 3;
  options.extra = {{5, 0}, {5, 1}, {5, 2}};
  options.workers = 0;
  VerifyReport rep = run_verification(options);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << rep.instances.size() << " instances (n<=4, r<=3; n=5, r<=2) in " << secs << "s";
  if (auto* f = rep.first_failure()) return {false, d.str() + "; " + f->counterexample};
  if (rep.instances.size() != 19) return {false, d.str() + "; expected 19 instances"};
  if (secs >= 120) return {false, d.str() + "; over the 2 minute budget"};
  return {true, d.str()};
}

Outcome negative_control() {
  VerifyOptions options;
  options.max_n = 4;
  options.max_r = 3;
  options.fault = Fault::flip_residue_parity;
  VerifyReport rep = run_verification(options);
  if (auto* f = rep.first_failure()) return {true, "fault detected: " + f->counterexample};
  return {false, "flipped residue parity went unnoticed"};
}

Outcome genericity() {
  std::mt19937_64 rng(oracle::seed());
  std::uniform_int_distribution<int> num(-60, 60);
  int generic = 0, skipped = 0;
  while (generic < 50) {
    int ell = 2 + generic % 3;
    int n = 1 + generic % 4;
    std::int64_t den = 7 + generic % 5;
    std::vector<Rational> c;
    Rational sum(0);
    for (int k = 0; k + 1 < ell; ++k) {
      c.emplace_back(num(rng), den);
      sum += c.back();
    }
    c.push_back(Rational(1) - sum);
    ThetaPoint theta(c);
    if (!reduce_to_fundamental(theta).type.empty()) {
      ++skipped;
      continue;
    }
    if (!all_singletons(cm_partition(ell, n, theta))) return {false, "non-trivial blocks at " + theta.str()};
    ++generic;
  }
  int trivial = 0;
  for (int p = -12; p <= 12; ++p)
    for (int q = 1; q <= 6; ++q) {
      Rational ratio(p, q);
      if (p == 0 || ratio.is_integer()) continue;
      for (int n = 1; n <= 4; ++n) {
        if (!all_singletons(cm_partition_from_c_type_B(1, ratio, n)))
          return {false, "non-trivial blocks at c_t/c_s = " + ratio.str()};
        ++trivial;
      }
    }
  return {true, "50 generic points (" + std::to_string(skipped) + " wall hits redrawn), " + std::to_string(trivial) +
                    " type B runs with c_t/c_s not integral"};
}

Outcome wall_invariance() {
  int checked = 0;
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      auto v = cm_partitions_adjacent(2, n, ThetaPoint({Rational(-r), Rational(r + 1)}));
      if (v.size() != 2) return {false, "wall r=" + std::to_string(r) + " has " + std::to_string(v.size()) + " sides"};
      if (v[0].index_classes() != v[1].index_classes())
        return {false, "sides disagree at r=" + std::to_string(r) + ", n=" + std::to_string(n)};
      ++checked;
    }
  return {true, std::to_string(checked) + " walls (-r, r+1), r<=3, n<=4"};
}

Outcome golden() {
  auto bp = cm_partition_from_c_type_B(1, 1, 2);
  auto stats = block_statistics(bp);
  if (stats.sizes != std::vector<std::size_t>{3, 1, 1}) return {false, "block sizes differ from {3,1,1}"};
  for (const auto& b : bp.blocks) {
    if (b.heart != Partition{2, 1}) continue;
    std::set<Partition> img;
    const auto& e = bp.reduction.element;
    for (const auto& mp : b.members) img.insert(tau(e.translation(), permute_components(e.permutation(), mp)));
    if (img != std::set<Partition>{{3, 1}, {2, 2}, {2, 1, 1}}) return {false, "heart (2,1) block has wrong image"};
    return {true, "sizes {3,1,1}; heart (2,1) block -> {(3,1),(2,2),(2,1,1)}"};
  }
  return {false, "no block with heart (2,1)"};
}

Outcome bijection() {
  std::size_t round_trips = 0;
  for (int r = 0; r <= 4; ++r) {
    Charge s = type_b_alcove_label(-r).translation();
    if (core_of_charge(s) != staircase(r)) return {false, "charge of A_{-r} misses the staircase at r=" + std::to_string(r)};
    for (int n = 0; n <= 8; ++n) {
      auto shapes = enumerate_P_r(n, r);
      auto mps = enumerate_multipartitions(2, n);
      if (shapes.size() != mps.size())
        return {false, "|P_r(n)| != |P(2,n)| at r=" + std::to_string(r) + ", n=" + std::to_string(n)};
      std::set<Partition> hit;
      for (const auto& mp : mps) {
        Partition lambda = tau(s, mp);
        if (lambda.size() != staircase_size(r) + 2 * mp.size()) return {false, "size identity fails at " + mp.str()};
        if (tau_inverse(s, lambda) != mp) return {false, "round trip fails at " + mp.str()};
        hit.insert(lambda);
        ++round_trips;
      }
      if (hit != std::set<Partition>(shapes.begin(), shapes.end()))
        return {false, "tau_s misses P_r(n) at r=" + std::to_string(r) + ", n=" + std::to_string(n)};
    }
  }
  return {true, std::to_string(round_trips) + " round trips, n<=8, r<=4"};
}

Outcome involution() {
  std::size_t moves = 0;
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& lambda : enumerate_P_r(n, r))
        for (const auto& m : elementary_moves(lambda, r)) {
          MoveWitness w = witness(m, r);
          if (move_through(w.tableau, w.ribbon) != w.moved || move_through(w.moved, w.image) != w.tableau)
            return {false, "moving twice is not the identity on " + lambda.str()};
          ++moves;
        }
  return {true, std::to_string(moves) + " moves (forward and reverse), n<=4, r<=3"};
}

Outcome confluence() {
  std::size_t checked = 0;
  for (int ell = 2; ell <= 4; ++ell)
    for (int mask = 0; mask < (1 << ell); ++mask) {
      std::vector<bool> inJ(ell);
      std::vector<int> members;
      for (int j = 0; j < ell; ++j)
        if (mask >> j & 1) {
          inJ[j] = true;
          members.push_back(j);
        }
      TypeJ J(ell, members);
      for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
          std::set<Partition> seen, leaves;
          oracle::heart_leaves(lambda, inJ, ell, seen, leaves);
          if (leaves.size() != 1 || *leaves.begin() != j_heart(lambda, J))
            return {false, "removal order matters for " + lambda.str()};
          ++checked;
        }
    }
  return {true, std::to_string(checked) + " (partition, J) pairs, |lambda|<=10, ell<=4"};
}

Outcome alcove_bookkeeping() {
  for (int a = -6; a <= 6; ++a) {
    const int odd = ((a % 2) + 2) % 2;
    AffineElement expect = odd ? AffineElement(Charge({(1 - a) / 2, (a - 1) / 2}), Permutation::swap(2, 0, 1))
                               : AffineElement(Charge({a / 2, -a / 2}), Permutation::identity(2));
    if (type_b_alcove_label(a) != expect) return {false, "label of A_" + std::to_string(a)};
    ThetaPoint mid({Rational(2 * a + 1, 2), Rational(1 - 2 * a, 2)});
    if (reduce_to_fundamental(mid).element != expect) return {false, "reduction of A_" + std::to_string(a)};
    ThetaPoint wall({Rational(-a), Rational(a + 1)});
    if (reduce_to_fundamental(wall).type != TypeJ::single(odd, 2)) return {false, "wall type at r=" + std::to_string(a)};
    std::set<AffineElement> sides;
    for (const auto& red : adjacent_alcove_reductions(wall)) sides.insert(red.element);
    if (sides != std::set<AffineElement>{type_b_alcove_label(-a), type_b_alcove_label(-a - 1)})
      return {false, "alcoves beside wall r=" + std::to_string(a)};
  }
  return {true, "labels, reductions and wall types for |r|<=6"};
}

}  // namespace

int main() {
  report("cross-check: CM blocks via tau_s equal r-cells", cross_check);
  report("cross-check negative control", negative_control);
  report("genericity", genericity);
  report("wall invariance", wall_invariance);
  report("golden instance ell=2 n=2 c_s=c_t", golden);
  report("bijection suite", bijection);
  report("involution suite", involution);
  report("confluence suite", confluence);
  report("alcove bookkeeping", alcove_bookkeeping);
  return failures ? 1 : 0;
}
