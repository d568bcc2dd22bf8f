#pragma once

#include <string>

#include <json.hpp>

#include "cmcells/alcove.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/domino.hpp"
#include "cmcells/partition.hpp"
#include "cmcells/verify.hpp"

namespace cmcells {

/// Reports keep insertion order so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const Box& b);
Json to_json(const Charge& s);
Json to_json(const Multipartition& mp);
Json to_json(const Permutation& w);
Json to_json(const TypeJ& J);
Json to_json(const ThetaPoint& theta);
Json to_json(const ReductionResult& reduction);
Json to_json(const DominoTableau& tableau);
Json to_json(const ElementaryMove& move);

/// { "ell", "n", "theta", "charge", "permutation", "typeJ", "blocks": [ { "heart", "members" } ] }
Json block_report(const BlockPartition& bp);
/// { "n", "r", "cells": [[shape, ...], ...], "edges": [ { "from", "to", "removed", "added" } ] }
Json cell_report(const CellPartition& cells);
/// { "passed", "instances_checked", "instances": [...], "counterexample"? }
Json verify_report(const VerifyReport& report);
/// { "ell", "theta", "word", "charge", "permutation", "reduced", "typeJ", "adjacent"? }
Json reduce_report(const ThetaPoint& theta, bool adjacent);

Partition partition_from_json(const Json& j);
Charge charge_from_json(const Json& j);
Multipartition multipartition_from_json(const Json& j);

/// Parses JSON text; throws InvalidParameter on malformed input.
Json parse_json(const std::string& text);

}  // namespace cmcells
