#include "mmq/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "mmq/errors.hpp"

namespace mmq {

std::string code_to_string(const Code& code) {
  std::string out;
  if (code.k() <= 10) {
    out.reserve(code.digits().size());
    for (Color d : code.digits()) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < code.digits().size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(code.digits()[i]);
  }
  return out;
}

Code code_from_string(const GameInstance& game, const std::string& text) {
  std::vector<Color> digits;
  if (game.k <= 10) {
    digits.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') throw MalformedInput("code_from_string: expected a digit, got '" +
                                                   std::string(1, c) + "'");
      digits.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
      if (ec != std::errc{} || ptr != text.data() + comma)
        throw MalformedInput("code_from_string: expected a decimal digit list");
      digits.push_back(value);
      pos = comma + 1;
    }
  }
  return Code(game, std::move(digits));
}

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out.push_back(b != 0 ? '1' : '0');
  return out;
}

Bits bits_from_string(const std::string& text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw MalformedInput("bits_from_string: expected '0' or '1', got '" + std::string(1, c) +
                           "'");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::string matrix_to_string(const CharacteristicMatrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.k) * (static_cast<std::size_t>(m.n) + 1));
  for (Color c = 0; c < m.k; ++c) {
    if (c > 0) out.push_back('|');
    for (int j = 0; j < m.n; ++j) out.push_back(m.at(c, j) != 0 ? '1' : '0');
  }
  return out;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::logic_error("format_double: buffer too small");
  return std::string(buf.data(), ptr);
}

std::string ledger_to_json(const QueryLedger& ledger) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : ledger.to_map()) {
    if (!first) out.push_back(',');
    first = false;
    out += "\"" + key + "\":" + std::to_string(value);
  }
  out.push_back('}');
  return out;
}

std::string state_to_json(const StateVector& state) {
  std::string out = "[";
  const std::vector<Complex>& amps = state.amplitudes();
  bool first = true;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i].real()) < 1e-15 && std::abs(amps[i].imag()) < 1e-15) continue;
    if (!first) out.push_back(',');
    first = false;
    out += "[" + std::to_string(i) + "," + format_double(amps[i].real()) + "," +
           format_double(amps[i].imag()) + "]";
  }
  out.push_back(']');
  return out;
}

}  // namespace mmq
