#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace rotset {

/// Invalid input: dimension mismatch, inadmissible word, cyclic relation, bad reference.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what, std::string path = {})
        : std::runtime_error(what), path_(std::move(path)) {}

    /// JSON-pointer-style location of the offending element, empty if unknown.
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// An enumeration exceeded its configured cap. Never a silent truncation.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t cap)
        : std::runtime_error(what), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace rotset
