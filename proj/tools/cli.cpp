#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmcells/alcove.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/domino.hpp"
#include "cmcells/errors.hpp"
#include "cmcells/report.hpp"
#include "cmcells/verify.hpp"

namespace cmcells::cli {

namespace {

enum class Format { json, table };

struct Common {
  std::string format = "json";
  int max_size = kDefaultMaxPartitionSize;
  unsigned jobs = 1;

  Format fmt() const { return format == "table" ? Format::table : Format::json; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--max-size", common.max_size, "Largest partition size that may be enumerated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--jobs", common.jobs, "Worker threads (0 = all cores; capped by CM_CELLS_MAX_PARALLEL)")
      ->capture_default_str();
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidParameter(std::string(what) + " must be a comma-separated list of integers: '" + text + "'");
    }
  }
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string mp_text(const Multipartition& mp) { return mp.str(); }

// --- blocks ---------------------------------------------------------------

struct BlocksArgs {
  Common common;
  int ell = 2;
  int n = 1;
  std::optional<std::string> theta;
  std::optional<std::string> c_s;
  std::optional<std::string> c_t;
};

int cmd_blocks(const BlocksArgs& a, std::ostream& out) {
  BlockOptions options;
  options.max_size = a.common.max_size;
  options.workers = a.common.jobs;
  if (a.n < 0) throw InvalidParameter("--n must be nonnegative");
  const bool have_c = a.c_s || a.c_t;
  if (a.theta.has_value() == have_c) throw InvalidParameter("give exactly one of --theta or (--c-s, --c-t)");
  BlockPartition bp;
  if (have_c) {
    if (!a.c_s || !a.c_t) throw InvalidParameter("--c-s and --c-t must be given together");
    if (a.ell != 2) throw InvalidParameter("--c-s/--c-t describe type B; use --ell 2 or pass --theta");
    bp = cm_partition_from_c_type_B(Rational::parse(*a.c_s), Rational::parse(*a.c_t), a.n, options);
  } else {
    ThetaPoint theta = ThetaPoint::parse(*a.theta);
    if (theta.ell() != a.ell) {
      throw InvalidParameter("--theta has " + std::to_string(theta.ell()) + " coordinates but --ell is " +
                             std::to_string(a.ell));
    }
    bp = cm_partition(a.ell, a.n, theta, options);
  }

  if (a.common.fmt() == Format::json) {
    print_json(out, block_report(bp));
    return kOk;
  }
  const auto stats = block_statistics(bp);
  out << "ell " << bp.ell << "  n " << bp.n << "  theta " << bp.theta.str() << '\n';
  out << "charge " << bp.reduction.element.translation().str() << "  permutation "
      << bp.reduction.element.permutation().str() << "  typeJ " << to_json(bp.reduction.type).dump() << '\n';
  out << stats.block_count << " blocks, sizes";
  for (auto s : stats.sizes) out << ' ' << s;
  out << '\n';
  for (std::size_t i = 0; i < bp.blocks.size(); ++i) {
    const auto& block = bp.blocks[i];
    out << "block " << i + 1 << "  heart " << block.heart.str() << "  size " << block.members.size() << ":";
    for (const auto& mp : block.members) out << ' ' << mp_text(mp);
    out << '\n';
  }
  return kOk;
}

// --- cells ----------------------------------------------------------------

struct CellsArgs {
  Common common;
  int n = 0;
  int r = 0;
};

int cmd_cells(const CellsArgs& a, std::ostream& out) {
  if (a.n < 0 || a.r < 0) throw InvalidParameter("--n and --r must be nonnegative");
  CellOptions options;
  options.max_size = a.common.max_size;
  options.workers = a.common.jobs;
  const CellPartition cells = r_cells(a.n, a.r, options);
  if (a.common.fmt() == Format::json) {
    print_json(out, cell_report(cells));
    return kOk;
  }
  out << "n " << cells.n << "  r " << cells.r << "  " << cells.cells.size() << " cells, " << cells.edges.size()
      << " witnessed moves\n";
  for (std::size_t i = 0; i < cells.cells.size(); ++i) {
    out << "cell " << i + 1 << " (" << cells.cells[i].size() << "):";
    for (const auto& lambda : cells.cells[i]) out << ' ' << lambda.str();
    out << '\n';
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  Common common;
  int max_n = 4;
  int max_r = 3;
  bool stretch = false;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_n < 0 || a.max_r < 0) throw InvalidParameter("--max-n and --max-r must be nonnegative");
  VerifyOptions options;
  options.max_n = a.max_n;
  options.max_r = a.max_r;
  options.workers = a.common.jobs;
  if (a.stretch) options.extra = {{5, 0}, {5, 1}, {5, 2}};
  if (a.inject_fault) options.fault = Fault::flip_residue_parity;
  const VerifyReport report = run_verification(options);
  const InstanceResult* failure = report.first_failure();

  if (a.common.fmt() == Format::json) {
    print_json(out, verify_report(report));
  } else {
    for (const auto& i : report.instances) {
      out << "n=" << i.n << " r=" << i.r << "  shapes " << std::setw(4) << i.shapes << "  cells " << std::setw(3)
          << i.cells << "  moves " << std::setw(4) << i.edges << "  " << (i.passed() ? "PASS" : "FAIL") << '\n';
    }
    if (report.instances.empty()) {
      out << "PASS: 0 instances checked (vacuous)\n";
    } else if (failure) {
      out << "FAIL: " << failure->counterexample << '\n';
    } else {
      out << "PASS: " << report.instances.size() << " instances checked\n";
    }
  }
  return failure ? kVerifyFailed : kOk;
}

// --- tau ------------------------------------------------------------------

struct TauArgs {
  Common common;
  int ell = 2;
  std::string charge;
  std::optional<std::string> mp;
  std::optional<std::string> partition;
};

int cmd_tau(const TauArgs& a, std::ostream& out) {
  if (a.mp.has_value() == a.partition.has_value()) throw InvalidParameter("give exactly one of --mp or --partition");
  Charge s(parse_int_list(a.charge, "--charge"));
  if (s.level() != a.ell) throw InvalidParameter("--charge must have --ell entries");
  Multipartition mp;
  Partition lambda;
  if (a.mp) {
    mp = multipartition_from_json(parse_json(*a.mp));
    if (mp.level() != a.ell) throw InvalidParameter("--mp must have --ell components");
    lambda = tau(s, mp);
  } else {
    lambda = partition_from_json(parse_json(*a.partition));
    mp = tau_inverse(s, lambda);
  }
  if (a.common.fmt() == Format::json) {
    Json j = Json::object();
    j["ell"] = a.ell;
    j["charge"] = to_json(s);
    j["core"] = to_json(core_of_charge(s));
    j["multipartition"] = to_json(mp);
    j["partition"] = to_json(lambda);
    print_json(out, j);
  } else {
    out << "charge " << s.str() << "  core " << core_of_charge(s).str() << '\n';
    out << mp_text(mp) << "  <->  " << lambda.str() << '\n';
  }
  return kOk;
}

// --- reduce ---------------------------------------------------------------

struct ReduceArgs {
  Common common;
  int ell = 2;
  std::string theta;
  bool adjacent = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  ThetaPoint theta = ThetaPoint::parse(a.theta);
  if (theta.ell() != a.ell) throw InvalidParameter("--theta must have --ell coordinates");
  const ReductionResult reduction = reduce_to_fundamental(theta);
  if (a.common.fmt() == Format::json) {
    print_json(out, reduce_report(theta, a.adjacent));
  } else {
    auto line = [&](const ReductionResult& r) {
      out << "charge " << r.element.translation().str() << "  permutation " << r.element.permutation().str()
          << "  word " << Json(r.word).dump() << '\n';
    };
    out << "theta " << theta.str() << "  reduced " << reduction.reduced.str() << "  typeJ "
        << to_json(reduction.type).dump() << '\n';
    line(reduction);
    if (a.adjacent) {
      out << "adjacent alcoves:\n";
      for (const auto& r : adjacent_alcove_reductions(theta)) line(r);
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calogero-Moser blocks of G(ell,1,n) and type-B r-cells"};
  app.require_subcommand(1);

  BlocksArgs blocks;
  auto* blocks_cmd = app.add_subcommand("blocks", "CM_c-partition of the multipartitions of n");
  add_common(blocks_cmd, blocks.common);
  blocks_cmd->add_option("--ell", blocks.ell, "Number of components")->check(CLI::Range(2, 64));
  blocks_cmd->add_option("--n", blocks.n, "Total size")->required();
  blocks_cmd->add_option("--theta", blocks.theta, "Point of Theta_1, e.g. 1/3,1/3,1/3");
  blocks_cmd->add_option("--c-s", blocks.c_s, "Type B parameter c_s (p or p/q)");
  blocks_cmd->add_option("--c-t", blocks.c_t, "Type B parameter c_t (p or p/q)");

  CellsArgs cells;
  auto* cells_cmd = app.add_subcommand("cells", "r-cells of P_r(n) from domino moves");
  add_common(cells_cmd, cells.common);
  cells_cmd->add_option("--n", cells.n, "Number of dominoes")->required();
  cells_cmd->add_option("--r", cells.r, "Rank of the staircase core")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check CM blocks against r-cells for all small n, r");
  add_common(verify_cmd, verify.common);
  verify.common.format = "table";
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n (instances use 1..max-n)")->capture_default_str();
  verify_cmd->add_option("--max-r", verify.max_r, "Largest r")->capture_default_str();
  verify_cmd->add_flag("--stretch", verify.stretch, "Also check n = 5 for r <= 2");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Flip the residue parity on the block side");

  TauArgs tau_args;
  auto* tau_cmd = app.add_subcommand("tau", "Core-quotient bijection and its inverse");
  add_common(tau_cmd, tau_args.common);
  tau_cmd->add_option("--ell", tau_args.ell, "Number of runners")->check(CLI::Range(1, 64));
  tau_cmd->add_option("--charge", tau_args.charge, "Charge, e.g. 0,0")->required();
  tau_cmd->add_option("--mp", tau_args.mp, "Multipartition as JSON, e.g. [[1],[]]");
  tau_cmd->add_option("--partition", tau_args.partition, "Partition as JSON, e.g. [2]");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a point of Theta_1 to the fundamental alcove");
  add_common(reduce_cmd, reduce.common);
  reduce_cmd->add_option("--ell", reduce.ell, "Number of coordinates")->check(CLI::Range(2, 64));
  reduce_cmd->add_option("--theta", reduce.theta, "Point of Theta_1, e.g. -1,2")->required();
  reduce_cmd->add_flag("--adjacent", reduce.adjacent, "List every alcove whose closure contains the point");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  // Build the report into a buffer so failures never leave partial output.
  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*blocks_cmd) code = cmd_blocks(blocks, buffer);
    else if (*cells_cmd) code = cmd_cells(cells, buffer);
    else if (*verify_cmd) code = cmd_verify(verify, buffer);
    else if (*tau_cmd) code = cmd_tau(tau_args, buffer);
    else if (*reduce_cmd) code = cmd_reduce(reduce, buffer);
  } catch (const EnumerationLimit& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  out << buffer.str();
  return code;
}

}  // namespace cmcells::cli
