#ifndef ULAB_ERRORS_HPP
#define ULAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulab {

/* Two-level error taxonomy. InputError covers everything a caller can
 * trigger with bad data (CLI exit code 1); ContractError marks internal
 * invariant violations that indicate a bug upstream (CLI exit code 2). */

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class ContractError : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public InputError {
public:
    using InputError::InputError;
};
using InvalidParameters = InvalidParameter;

class NotLSpaceForm : public InputError {
public:
    using InputError::InputError;
};

class NotAKnot : public InputError {
public:
    using InputError::InputError;
};

class NotPositive : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class FileNotFound : public InputError {
public:
    using InputError::InputError;
};

// remainder nonzero in a division that must be exact; signals a formula error
class InexactDivision : public ContractError {
public:
    using ContractError::ContractError;
};

class NormalizationFailure : public ContractError {
public:
    using ContractError::ContractError;
};

class MalformedStaircase : public ContractError {
public:
    using ContractError::ContractError;
};

class NoSignChangeFound : public ContractError {
public:
    using ContractError::ContractError;
};

} // namespace ulab

#endif
