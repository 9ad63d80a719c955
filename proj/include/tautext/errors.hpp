#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tautext {

/// Cohomology of some bundle is neither forced by the rule table nor supplied
/// as an override. `needed_overrides()` lists the override keys that would
/// resolve it.
class UnderdeterminedCohomology : public std::runtime_error {
public:
    explicit UnderdeterminedCohomology(std::vector<std::string> keys);
    const std::vector<std::string>& needed_overrides() const noexcept { return keys_; }

private:
    std::vector<std::string> keys_;
};

/// A supplied h0 override contradicts Riemann-Roch or another override.
class InvalidOverride : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A curve or bundle description violates its own invariants.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input does not satisfy the guard of the lemma or theorem being applied.
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A multiplication map outside the regimes where its image is known.
class OutOfModeledRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tautext
