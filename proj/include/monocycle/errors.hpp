#pragma once

#include <stdexcept>
#include <string>

namespace monocycle {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
public:
    InvalidVertex(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")"),
          vertex(v) {}
    int vertex;
};

class SameEdgeBothColours : public Error {
public:
    SameEdgeBothColours(int u_, int v_)
        : Error("edge " + std::to_string(u_) + "-" + std::to_string(v_) + " appears in both colours"),
          u(u_), v(v_) {}
    int u, v;
};

class ParseError : public Error {
public:
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

class TooLargeForExact : public Error {
public:
    TooLargeForExact(int size_, int limit_, const std::string& what)
        : Error(what + ": size " + std::to_string(size_) + " exceeds exact limit " +
                std::to_string(limit_)),
          size(size_), limit(limit_) {}
    int size, limit;
};

class TooFewVertices : public Error {
public:
    explicit TooFewVertices(int n)
        : Error("operation needs at least 3 vertices, got " + std::to_string(n)) {}
};

class BadMaskLength : public Error {
public:
    BadMaskLength(std::size_t got, std::size_t want)
        : Error("free-edge mask has " + std::to_string(got) + " bits, expected " +
                std::to_string(want)) {}
};

class BadParams : public Error {
public:
    using Error::Error;
};

} // namespace monocycle
