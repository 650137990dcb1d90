#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class InvalidModel : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InconsistentData : public Error {
public:
    using Error::Error;
};

class InternalConsistency : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class MissingData : public Error {
public:
    explicit MissingData(std::string key)
        : Error("missing oracle entry: " + key), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class EigenvalueCollision : public Error {
public:
    explicit EigenvalueCollision(std::string first, std::string second)
        : Error("eigenvalue collision between " + first + " and " + second),
          first_(std::move(first)), second_(std::move(second)) {}
    const std::string& first() const noexcept { return first_; }
    const std::string& second() const noexcept { return second_; }

private:
    std::string first_;
    std::string second_;
};

class VerificationFailure : public Error {
public:
    using Error::Error;
};

}
