#pragma once

// Plain-text and JSON encodings shared by the CLI, the verifier, and the
// tests. The core library emits JSON by hand so it depends on the standard
// library alone.

#include <string>

#include "mmq/game.hpp"
#include "mmq/ledger.hpp"
#include "mmq/sim.hpp"

namespace mmq {

/// Digits concatenated when k <= 10 ("0210"), comma-separated otherwise
/// ("0,11,3").
std::string code_to_string(const Code& code);

/// Parses the encoding of code_to_string for the given game. Throws
/// MalformedInput on syntax errors and ContractViolation on out-of-range
/// digits or a length mismatch.
Code code_from_string(const GameInstance& game, const std::string& text);

/// One character per bit: "0110".
std::string bits_to_string(const Bits& bits);

/// Parses a 0/1 string. Throws MalformedInput on other characters.
Bits bits_from_string(const std::string& text);

/// Row-major rows joined by '|': "100|010|001".
std::string matrix_to_string(const CharacteristicMatrix& m);

/// Shortest round-trip-safe decimal with 12 significant digits.
std::string format_double(double value);

/// {"black_peg":4,...,"black_peg_equivalent":4} with every counter present.
std::string ledger_to_json(const QueryLedger& ledger);

/// JSON array of [index, re, im] triples over the non-negligible
/// amplitudes, for debugging small states.
std::string state_to_json(const StateVector& state);

}  // namespace mmq
