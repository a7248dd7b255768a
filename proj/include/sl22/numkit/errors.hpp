#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sl22 {

// A rational map or formula hit a vanishing factor.
class DegenerateError : public std::runtime_error {
public:
    DegenerateError(const std::string& factor, const std::string& where)
        : std::runtime_error(where + ": vanishing factor " + factor), factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

// Input outside the domain of an operation (branch points, bad precision, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<int> unconverged)
        : std::runtime_error(what), unconverged_(std::move(unconverged)) {}
    const std::vector<int>& unconverged() const { return unconverged_; }

private:
    std::vector<int> unconverged_;
};

// A composed map produced a point off its target variety.
class MapInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sl22
