#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace bch_atlas {

enum class ErrorKind {
    NotPrime,
    DegreeOverflow,
    DivisionByZero,
    MixedFields,
    LengthMismatch,
    NotCoprime,
    ResidueOutOfRange,
    BudgetExceeded,
    WidthTooSmall,
    WrongFamily,
    RankOutOfRange,
    OutOfBand,
    WrongParity,
    Unsupported,
    IntegralityViolation,
    DeltaOutOfRange,
    RangeWraparound,
    RedundancyTooLarge,
    InvalidArgument,
};

const char* kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// A parameter combination no known closed form speaks about.
struct Unsupported {
    std::string reason;
};

// Either a value or an explicit coverage gap. Gaps are ordinary results,
// callers decide whether they matter.
template <class T>
class Covered {
public:
    Covered(T value) : v_(std::move(value)) {}
    Covered(Unsupported gap) : v_(std::move(gap)) {}

    bool covered() const noexcept { return v_.index() == 0; }

    const T& value() const {
        if (!covered()) throw Error(ErrorKind::Unsupported, gap().reason);
        return std::get<0>(v_);
    }
    const T* operator->() const { return &value(); }
    const Unsupported& gap() const { return std::get<1>(v_); }

private:
    std::variant<T, Unsupported> v_;
};

}  // namespace bch_atlas
