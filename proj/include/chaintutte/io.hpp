#pragma once

#include <string>

#include <json.hpp>

#include "chaintutte/matroid.hpp"
#include "chaintutte/valuation.hpp"

namespace chaintutte {

/// Accepted forms:
///   {"type":"uniform","r":2,"n":4}
///   {"type":"graph","vertices":4,"edges":[[0,1],[1,2]]}
///   {"type":"bases","n":3,"bases":[[0,1],[0,2]]}
///   {"type":"rank_table","n":2,"table":{"0":0,"1":1,"2":1,"3":2}}
///   {"type":"direct_sum","parts":[<matroid>, ...]}
/// Rank-table keys are decimal bitmasks. Throws Parse on malformed input
/// and the constructor's error kind on axiom violations.
Matroid matroid_from_json(const nlohmann::json& j);

/// Rank-table form; n <= 24.
nlohmann::json matroid_to_json(const Matroid& m);

struct NerveInput {
  Matroid big;
  SubdivisionNerve nerve;
};

/// {"big": <matroid>, "cells": [<matroid>, ...],
///  "intersections": {"1,2": <matroid> | "empty", ...}} with 1-based keys.
NerveInput nerve_from_json(const nlohmann::json& j);

/// Parses `source` as JSON if it looks like an inline document, otherwise
/// reads it as a file path.
nlohmann::json load_json_source(const std::string& source);

}  // namespace chaintutte
