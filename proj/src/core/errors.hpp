#pragma once

#include <stdexcept>
#include <string>

namespace petrial {

// Input text rejected; the message carries a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Operation requires a connected graph.
class ConnectivityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Work estimate exceeds the configured cap; nothing was computed.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bouquet (single-vertex ribbon graph) was required.
class NotBouquetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace petrial
