#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gesture {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LandmarkCountError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class TimestampError : public Error {
public:
    using Error::Error;
};

class DegenerateHandError : public Error {
public:
    using Error::Error;
};

class OutOfOrderFrameError : public Error {
public:
    using Error::Error;
};

class ThresholdError : public Error {
public:
    using Error::Error;
};

class LayoutSpecError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class VersionError : public Error {
public:
    using Error::Error;
};

class EmptyLogError : public Error {
public:
    using Error::Error;
};

/// Parse failure carrying the 1-based line of the offending record.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// Replay aborted; index is the 0-based position of the failing frame.
class ReplayError : public Error {
public:
    ReplayError(std::size_t frame_index, const std::string& reason)
        : Error("frame " + std::to_string(frame_index) + ": " + reason), frame_index_(frame_index) {}

    [[nodiscard]] std::size_t frame_index() const noexcept { return frame_index_; }

private:
    std::size_t frame_index_;
};

}  // namespace gesture
