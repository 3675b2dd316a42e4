#pragma once

#include <stdexcept>
#include <string>

namespace wig {

struct NotTwoRegular : std::invalid_argument {
    explicit NotTwoRegular(const std::string& what) : std::invalid_argument(what) {}
};

struct CapExceeded : std::invalid_argument {
    explicit CapExceeded(const std::string& what) : std::invalid_argument(what) {}
};

struct GroupMismatch : std::invalid_argument {
    explicit GroupMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotASubgroup : std::invalid_argument {
    explicit NotASubgroup(const std::string& what) : std::invalid_argument(what) {}
};

struct NonRealTable : std::invalid_argument {
    explicit NonRealTable(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroVector : std::invalid_argument {
    explicit ZeroVector(const std::string& what) : std::invalid_argument(what) {}
};

struct BaseMismatch : std::invalid_argument {
    explicit BaseMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wig
