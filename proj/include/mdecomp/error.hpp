#ifndef MDECOMP_ERROR_HPP_
#define MDECOMP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdecomp {

enum class ErrorCode {
  kAxiomViolation,
  kDuplicateElement,
  kUnknownElement,
  kInvalidParams,
  kUnknownVertex,
  kInvalidMatrix,
  kDependentInput,
  kNotDependent,
  kGroundSetTooLarge,
  kGroundSetMismatch,
  kNotCrossing,
  kQuadrantTooSmall,
  kNotACircuit,
  kPreconditionViolated,
  kNotA2Separation,
  kFamilyNotDisjoint,
  kDisconnected,
  kBadSharedElement,
  kNotNested,
  kNotSymmetric,
  kTooSmall,
  kUnclassifiable,
  kNotATree,
  kNotAPartition,
  kParseError,
  // A proved structural statement did not hold on a concrete instance. Either
  // the input violates an unchecked precondition or the library has a bug.
  kLemmaFailure,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

[[noreturn]] inline void lemma_failure(const std::string& what) {
  throw Error(ErrorCode::kLemmaFailure, what);
}

}  // namespace mdecomp

#endif  // MDECOMP_ERROR_HPP_
