#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "earclip/geom.hpp"

namespace earclip {

enum class ErrorKind {
    InvalidRing,
    DegenerateVertex,
    DegenerateTriangle,
    EarSearchFailed,
    NoValidBridge,
    EmptyInput,
    GenerationFailed,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Carries the vertices that were still live when no ear could be found.
class EarSearchFailed : public GeometryError {
public:
    EarSearchFailed(const std::string& what, std::vector<Point2> surviving)
        : GeometryError(ErrorKind::EarSearchFailed, what), surviving_(std::move(surviving)) {}

    const std::vector<Point2>& surviving_ring() const noexcept { return surviving_; }

private:
    std::vector<Point2> surviving_;
};

class NoValidBridge : public GeometryError {
public:
    NoValidBridge(const std::string& what, std::vector<Point2> outer, std::vector<Point2> hole)
        : GeometryError(ErrorKind::NoValidBridge, what), outer_(std::move(outer)), hole_(std::move(hole)) {}

    const std::vector<Point2>& outer_ring() const noexcept { return outer_; }
    const std::vector<Point2>& hole_ring() const noexcept { return hole_; }

private:
    std::vector<Point2> outer_;
    std::vector<Point2> hole_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace earclip
