#include "mmq/ledger.hpp"

#include <stdexcept>

namespace mmq {

const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::black_peg: return "black_peg";
    case QueryKind::black_white_peg: return "black_white_peg";
    case QueryKind::two_color: return "two_color";
    case QueryKind::ipt: return "ipt";
    case QueryKind::ipk: return "ipk";
    case QueryKind::hamming_parity: return "hamming_parity";
    case QueryKind::padded: return "padded";
  }
  throw std::logic_error("to_string: unknown QueryKind");
}

void QueryLedger::add(QueryKind kind, long long amount) {
  if (amount < 0) throw std::logic_error("QueryLedger::add: counters are monotone");
  counts_[static_cast<std::size_t>(kind)] += amount;
}

long long QueryLedger::count(QueryKind kind) const {
  return counts_[static_cast<std::size_t>(kind)];
}

std::map<std::string, long long> QueryLedger::to_map() const {
  std::map<std::string, long long> out;
  for (std::size_t i = 0; i < kQueryKindCount; ++i)
    out[to_string(static_cast<QueryKind>(i))] = counts_[i];
  out["black_peg_equivalent"] = black_peg_equivalent();
  return out;
}

}  // namespace mmq
