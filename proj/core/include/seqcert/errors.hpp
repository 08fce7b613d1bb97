#pragma once

#include <stdexcept>
#include <string>

namespace seqcert {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& where)
        : Error("rational function has a pole at " + where) {}
};

struct ZeroTerm : Error {
    long long index;
    explicit ZeroTerm(long long idx)
        : Error("division by zero term at index " + std::to_string(idx)), index(idx) {}
};

struct NonPositiveTerm : Error {
    long long index;
    explicit NonPositiveTerm(long long idx)
        : Error("non-positive term at index " + std::to_string(idx)), index(idx) {}
};

struct TooFewTerms : Error {
    explicit TooFewTerms(const std::string& what) : Error(what) {}
};

struct UnknownSequence : Error {
    explicit UnknownSequence(const std::string& name)
        : Error("unknown catalog sequence: " + name) {}
};

struct CoefficientPole : Error {
    long long index;
    explicit CoefficientPole(long long idx)
        : Error("recurrence coefficient undefined at index " + std::to_string(idx)), index(idx) {}
};

struct InvalidFamily : Error {
    explicit InvalidFamily(const std::string& what) : Error(what) {}
};

struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error(what) {}
};

struct BoundNotBracketing : Error {
    explicit BoundNotBracketing(const std::string& what) : Error(what) {}
};

struct DenominatorSignAmbiguous : Error {
    explicit DenominatorSignAmbiguous(const std::string& what) : Error(what) {}
};

struct BaseFails : Error {
    explicit BaseFails(const std::string& what) : Error(what) {}
};

struct SymbolicInconclusive : Error {
    explicit SymbolicInconclusive(const std::string& what) : Error(what) {}
};

struct MalformedLine : Error {
    long long line_no;
    explicit MalformedLine(long long line, const std::string& detail)
        : Error("malformed b-file line " + std::to_string(line) + ": " + detail), line_no(line) {}
};

struct NonMonotoneIndex : Error {
    long long line_no;
    explicit NonMonotoneIndex(long long line)
        : Error("non-increasing index at b-file line " + std::to_string(line)), line_no(line) {}
};

struct NoOverlap : Error {
    NoOverlap() : Error("sequence definition and b-file have no overlapping index range") {}
};

struct HashMismatch : Error {
    HashMismatch() : Error("cache header hash does not match the sequence definition") {}
};

struct CorruptCache : Error {
    explicit CorruptCache(const std::string& what) : Error("corrupt cache: " + what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace seqcert
