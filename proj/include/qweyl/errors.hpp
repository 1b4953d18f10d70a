#ifndef QWEYL_ERRORS_HPP
#define QWEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qweyl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct PoleAtQ1 : Error {
    explicit PoleAtQ1(const std::string& what = "pole at q = 1") : Error(what) {}
};

struct NotSymmetrizable : Error {
    explicit NotSymmetrizable(const std::string& what) : Error(what) {}
};

struct NotARootDatum : Error {
    explicit NotARootDatum(const std::string& what) : Error(what) {}
};

struct NonReducedWord : Error {
    explicit NonReducedWord(const std::string& what = "word is not reduced") : Error(what) {}
};

struct NotDominant : Error {
    explicit NotDominant(const std::string& what = "weight is not dominant") : Error(what) {}
};

struct PresentationMismatch : Error {
    explicit PresentationMismatch(const std::string& what = "elements live in different torus presentations")
        : Error(what) {}
};

struct NotInvertibleInClass : Error {
    explicit NotInvertibleInClass(const std::string& what = "inverse leaves the univariate fraction class")
        : Error(what) {}
};

struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& what) : Error(what) {}
};

struct GridTooSmall : Error {
    explicit GridTooSmall(const std::string& what) : Error(what) {}
};

struct UnsupportedRankTwoType : Error {
    explicit UnsupportedRankTwoType(const std::string& what) : Error(what) {}
};

struct ZeroGenerator : Error {
    explicit ZeroGenerator(const std::string& what = "generator is zero in this model") : Error(what) {}
};

struct UnknownTarget : Error {
    explicit UnknownTarget(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace qweyl

#endif // QWEYL_ERRORS_HPP
