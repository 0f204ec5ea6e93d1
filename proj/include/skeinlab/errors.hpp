#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

struct StrandMismatch : std::runtime_error {
    explicit StrandMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DoesNotExist : std::runtime_error {
    explicit DoesNotExist(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdmissible : std::runtime_error {
    explicit NotAdmissible(const std::string& what) : std::runtime_error(what) {}
};

struct SingularAtRoot : std::runtime_error {
    explicit SingularAtRoot(const std::string& what) : std::runtime_error(what) {}
};

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct OracleCapExceeded : std::runtime_error {
    explicit OracleCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ProportionalityFailure : std::runtime_error {
    explicit ProportionalityFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct GramDegenerate : std::runtime_error {
    explicit GramDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skeinlab
