#ifndef NONSEP_ERRORS_HPP
#define NONSEP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace nonsep {

// Error taxonomy, mirrored by the CLI exit codes:
//   precondition_error  -> 1   operation called outside its contract
//   not_found_error     -> 2   a bounded search exhausted its space
//   parse_error         -> 3   malformed file / shape spec / config
//   contradiction_error -> 4   an internal invariant the algorithm is
//                              entitled to failed; carries a witness
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

// A finder ran its search space dry.  For the guarantee-backed finders this
// is a signal that something is wrong (the guarantee says the search cannot
// fail), so tests treat it as a failure; the optional witness holds the
// serialized instance for offline replay.
class not_found_error : public error {
 public:
  explicit not_found_error(const std::string& msg, std::string witness = {})
      : error(msg), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// An improvement or lifting step found its own invariants violated
// (progress failed, a required arc was missing, a derived pair check did
// not hold).  Always carries a serialized witness of the offending state.
class contradiction_error : public error {
 public:
  explicit contradiction_error(const std::string& msg, std::string witness = {})
      : error(msg), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace nonsep

#endif  // NONSEP_ERRORS_HPP
