#pragma once

#include <stdexcept>
#include <string>

namespace cen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Operands live in different scalar domains (e.g. F_5 vs F_7).
class DomainMismatch : public Error {
public:
    using Error::Error;
};

class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("inverse of zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Matrices form a left module; only central scalars may scale them.
class NonCentralScale : public Error {
public:
    NonCentralScale() : Error("scaling by a non-central scalar") {}
};

class UnsupportedDomain : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

/// The characteristic polynomial has an irreducible factor of degree > 1.
class NonSplitSpectrum : public Error {
public:
    explicit NonSplitSpectrum(std::string factor)
        : Error("spectrum does not split; irreducible factor " + factor), factor_(std::move(factor)) {}
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

class NotNilpotent : public Error {
public:
    NotNilpotent() : Error("matrix is not nilpotent") {}
    explicit NotNilpotent(const std::string& what) : Error(what) {}
};

class NotCommuting : public Error {
public:
    NotCommuting() : Error("matrix does not commute with A") {}
};

class NotIndecomposable : public Error {
public:
    NotIndecomposable() : Error("nilpotent matrix is not indecomposable") {}
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace cen
