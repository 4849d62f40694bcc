#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcert {

// Bad argument values (vertex out of range, loop edge, k < 1, ...).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Malformed serialized graph; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Graph exceeds what a serialization format can represent.
class FormatOverflowError : public std::runtime_error {
public:
    explicit FormatOverflowError(const std::string& what)
        : std::runtime_error(what) {}
};

// An operation that requires connectivity met a graph without it.
// Names one vertex pair with no connecting path.
class DisconnectedGraphError : public std::runtime_error {
public:
    DisconnectedGraphError(int u, int v)
        : std::runtime_error("graph is disconnected: no path between " +
                             std::to_string(u) + " and " + std::to_string(v)),
          u_(u), v_(v) {}
    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_, v_;
};

// Edge expected to be present was not.
class MissingEdgeError : public std::runtime_error {
public:
    MissingEdgeError(int u, int v)
        : std::runtime_error("edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "} is not in the graph"),
          u_(u), v_(v) {}
    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_, v_;
};

// Instance is too large for an exact/exhaustive routine.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what)
        : std::runtime_error(what) {}
};

// Iterative bound refinement failed to reach the requested width.
// Carries the best bracket found so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double lo, double hi, long long iterations)
        : std::runtime_error("bound refinement stalled at [" +
                             std::to_string(lo) + ", " + std::to_string(hi) +
                             "] after " + std::to_string(iterations) +
                             " iterations"),
          lo_(lo), hi_(hi), iterations_(iterations) {}
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    long long iterations() const { return iterations_; }

private:
    double lo_, hi_;
    long long iterations_;
};

// A bound was requested in a mode whose hypotheses the graph does not meet.
class ModeMismatchError : public std::runtime_error {
public:
    explicit ModeMismatchError(const std::string& what)
        : std::runtime_error(what) {}
};

// Vertex partition is not a partition (empty block, repeat, missing vertex).
class InvalidPartitionError : public std::invalid_argument {
public:
    explicit InvalidPartitionError(const std::string& what)
        : std::invalid_argument(what) {}
};

// A claimed certificate (tree packing, forest, witness) failed revalidation.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what)
        : std::runtime_error(what) {}
};

// Random instance generation could not meet its constraints.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what)
        : std::runtime_error(what) {}
};

// A decision procedure ran out of admissible tiers without an answer.
class UndecidedError : public std::runtime_error {
public:
    explicit UndecidedError(const std::string& what)
        : std::runtime_error(what) {}
};

// Two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace graphcert
