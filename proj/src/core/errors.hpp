#pragma once

#include <stdexcept>
#include <string>

namespace ksseq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not agree.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A subspace expected to lie inside another one does not.
class ContainmentError : public Error {
public:
    using Error::Error;
};

/// A linear map does not descend to the requested quotients.
class WellDefinednessError : public Error {
public:
    using Error::Error;
};

/// Multivectors built over different model frames were combined.
class FrameMismatch : public Error {
public:
    using Error::Error;
};

/// A theorem's hypotheses do not hold for the given input.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// Differential or filtration fails the filtered-complex axioms.
class MalformedComplex : public Error {
public:
    using Error::Error;
};

/// Unknown preset or other named entity.
class NotFound : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Betti-type input that cannot come from a model of the stated kind.
class InconsistentInput : public Error {
public:
    InconsistentInput(const std::string& what, int degree)
        : Error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

/// Model or report text that fails validation. `field` names the offending key path.
class ParseError : public Error {
public:
    ParseError(const std::string& field, const std::string& what)
        : Error(field.empty() ? what : field + ": " + what), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace ksseq
