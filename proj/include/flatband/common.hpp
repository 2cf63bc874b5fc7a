#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatband {

// Integer vectors serve three roles: lattice offsets, cell coordinates and
// Laurent exponent vectors. All of them have length d (the lattice dimension).
using IntVec = std::vector<int32_t>;

IntVec ivec_add(const IntVec& a, const IntVec& b);
IntVec ivec_sub(const IntVec& a, const IntVec& b);
IntVec ivec_neg(const IntVec& a);
int32_t ivec_sup_norm(const IntVec& a);
int64_t ivec_total(const IntVec& a);
std::string ivec_to_string(const IntVec& a);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg), line(line), column(column) {}
  int line = 0;
  int column = 0;
};

// Internal consistency failures (rank cross-check mismatch, stage bound
// exceeded, ...). These signal engine bugs, not bad user input.
class EngineError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CancelledError : public std::runtime_error {
public:
  CancelledError() : std::runtime_error("operation cancelled") {}
};

// Cooperative cancellation, checked between pivot steps of the long-running
// eliminations. The CLI wires SIGINT to request().
namespace cancel {
void request() noexcept;
void reset() noexcept;
bool requested() noexcept;
void checkpoint();  // throws CancelledError if a cancellation was requested
}  // namespace cancel

}  // namespace flatband
