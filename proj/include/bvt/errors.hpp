#pragma once

#include <stdexcept>
#include <string>

namespace bvt {

// Generator-count or suite-configuration mismatch.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of an element whose numeric part vanishes.
struct DegenerateBody : std::runtime_error {
  explicit DegenerateBody(const std::string& msg) : std::runtime_error(msg) {}
};

// Parity / grading violation (heterogeneous element in a parity-typed slot).
struct GradedError : std::runtime_error {
  explicit GradedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Form-degree misuse (contracting a 0-form, integrating a non-top form, ...).
struct DegreeError : std::runtime_error {
  explicit DegreeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Restriction to a stratum that is not contained in the source stratum.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A functional evaluated past its catalogued polynomial degree.
struct DegreeAuditError : std::runtime_error {
  explicit DegreeAuditError(const std::string& msg) : std::runtime_error(msg) {}
};

// Resampling for a nondegenerate configuration ran out of retries.
struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bvt
