#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lpcoh/lp_module.hpp"

namespace lpcoh {

struct ModuleDescription {
  Bimodule m;
  LieModule m_lie;
  LieModule p;
  SigmaMap sigma;

  bool operator==(const ModuleDescription&) const = default;
};

// In-memory form of a pair-description file: structure constants of A, L and
// mu over the field tag "Q", plus an optional coefficient module. Parsing
// checks well-formedness (shape, index ranges, rational syntax) only; the
// axioms are checked by the validate_described_* functions.
struct PairDescription {
  AssocAlgebra algebra;
  LieAlgebra lie;
  LieAction mu;
  std::optional<ModuleDescription> module;

  bool operator==(const PairDescription&) const = default;
};

// Throws ParseError with the byte position on malformed input.
PairDescription parse_pair_text(std::string_view text, const std::string& origin);
PairDescription parse_pair_file(const std::string& path);

// Canonical serialization: sorted keys, sparse entries in ascending index
// order, canonical "p" / "p/q" rationals, two-space indentation, trailing
// newline. parse . emit = id and emit . parse = id on canonical files.
std::string emit_pair_text(const PairDescription& d);

LeibnizPair validate_described_pair(const PairDescription& d);

// Requires a module block; throws ParseError when absent.
LPModule validate_described_module(const PairDescription& d);

uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace lpcoh
