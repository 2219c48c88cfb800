#pragma once

#include <stdexcept>
#include <string>

namespace hmsector {

/// Malformed polynomial or coefficient text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A step parameter M (or residue pair) outside the range an operation accepts.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when some leading coefficient h_i vanishes and the J-factorization
/// of the tilde Hurwitz matrix does not exist.
class FactorizationInapplicable : public std::runtime_error {
public:
    FactorizationInapplicable(int index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Pair continued-fraction expansion hit a vanishing leading coefficient.
class DegeneratePairError : public std::runtime_error {
public:
    DegeneratePairError(int step, const std::string& what)
        : std::runtime_error(what), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

/// Floating-point evaluation got too close to a pole or zero denominator.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hmsector
