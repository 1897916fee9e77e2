#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffpd {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    UnsupportedField,
    FieldMismatch,
    DivisionByZero,
    EvenOrCompositeModulus,
    DimensionMismatch,
    NotSquare,
    NotSymmetric,
    NonDefiniteField,
    ZeroPivot,
    NotPositiveDefinite,
    Singular,
    SearchSpaceTooLarge,
    IndexOutOfRange,
    SelfLoopEdge,
    NonPositiveLoop,
    DuplicateVertex,
    NotPermutation,
    NotPressable,
    NothingToUndo,
    LimitExceeded,
    ParseError,
};

constexpr std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EvenOrCompositeModulus: return "EvenOrCompositeModulus";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonDefiniteField: return "NonDefiniteField";
    case ErrorKind::ZeroPivot: return "ZeroPivot";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SelfLoopEdge: return "SelfLoopEdge";
    case ErrorKind::NonPositiveLoop: return "NonPositiveLoop";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NotPressable: return "NotPressable";
    case ErrorKind::NothingToUndo: return "NothingToUndo";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported through this type.
///
/// `index()` carries a 0-based row/vertex index for the kinds that refer to
/// one (ZeroPivot, NotPositiveDefinite, NonPositiveLoop, ...). Messages print
/// that index 1-based, matching the user-facing convention.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return kind_name(kind_); }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

} // namespace ffpd
