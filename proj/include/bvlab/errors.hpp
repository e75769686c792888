#pragma once

#include <stdexcept>
#include <string>

namespace bvlab {

// Base for all domain-specific failures.  The message names the violated
// condition with a stable identifier so reports stay machine-readable.
class Error : public std::runtime_error {
 public:
  Error(std::string tag, const std::string& message)
      : std::runtime_error(tag + ": " + message), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

#define BVLAB_DEFINE_ERROR(NAME, TAG)                          \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& message)                  \
        : Error(TAG, message) {}                               \
  }

BVLAB_DEFINE_ERROR(GammaInvariantViolation, "gamma-invariant");
BVLAB_DEFINE_ERROR(UnsupportedPattern, "trace-pattern");
BVLAB_DEFINE_ERROR(BadOrder, "compound-order");
BVLAB_DEFINE_ERROR(NotAntisymmetric, "antisymmetry");
BVLAB_DEFINE_ERROR(NotSpecialUnitary, "special-unitarity");
BVLAB_DEFINE_ERROR(ParamConstraintViolation, "parameter-constraint");
BVLAB_DEFINE_ERROR(CayleySingular, "cayley-pole");
BVLAB_DEFINE_ERROR(DegenerateT0, "vanishing-scalar-part");
BVLAB_DEFINE_ERROR(NotOrthogonal, "special-orthogonality");
BVLAB_DEFINE_ERROR(ZeroL00, "vanishing-corner-entry");
BVLAB_DEFINE_ERROR(CanonicalViolation, "canonical-anticommutation");
BVLAB_DEFINE_ERROR(DegenerateFactorization, "rank-factorisation");
BVLAB_DEFINE_ERROR(OneModeConstraintViolation, "one-mode-constraint");
BVLAB_DEFINE_ERROR(NotHermitian, "hermiticity");

#undef BVLAB_DEFINE_ERROR

}  // namespace bvlab
