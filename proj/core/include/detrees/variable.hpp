#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "detrees/errors.hpp"

namespace detrees {

enum class VarKind : uint8_t { X = 0, Y = 1, T = 2 };

/// A ring variable: x[u,i] (matrix entry, u in {1,2}), y[i,j] (presentation
/// variable, i < j), or the single Rees variable t.
///
/// The packed code is ordered so that ascending code equals the canonical
/// enumeration x[1,1],...,x[1,*], x[2,*],...,x[2,n], y[1,2],...,y[n-1,n], t.
class VariableId {
public:
    static VariableId x(int u, int i) {
        if (u != 1 && u != 2) throw InputError("x variable: row must be 1 or 2");
        if (i < 1 || i >= kLimit) throw InputError("x variable: column out of range");
        return VariableId((static_cast<uint32_t>(u - 1) << 24) | static_cast<uint32_t>(i));
    }
    static VariableId y(int i, int j) {
        if (i < 1 || j < 1 || i >= j) throw InputError("y variable: indices must satisfy 1 <= i < j");
        if (j >= kLimit) throw InputError("y variable: index out of range");
        return VariableId((1u << 28) | (static_cast<uint32_t>(i) << 14) | static_cast<uint32_t>(j));
    }
    static VariableId t() { return VariableId(2u << 28); }

    VarKind kind() const {
        uint32_t hi = code_ >> 28;
        return hi == 0 ? VarKind::X : (hi == 1 ? VarKind::Y : VarKind::T);
    }
    // X accessors.
    int row() const { return static_cast<int>((code_ >> 24) & 0xF) + 1; }
    int col() const { return static_cast<int>(code_ & 0xFFFFFF); }
    // Y accessors.
    int yi() const { return static_cast<int>((code_ >> 14) & 0x3FFF); }
    int yj() const { return static_cast<int>(code_ & 0x3FFF); }

    uint32_t code() const { return code_; }
    static VariableId from_code(uint32_t c) { return VariableId(c); }

    std::string name() const;

    friend bool operator==(VariableId a, VariableId b) { return a.code_ == b.code_; }
    friend bool operator!=(VariableId a, VariableId b) { return a.code_ != b.code_; }
    friend bool operator<(VariableId a, VariableId b) { return a.code_ < b.code_; }

private:
    explicit VariableId(uint32_t code) : code_(code) {}
    static constexpr int kLimit = 1 << 14;
    uint32_t code_;
};

/// Parses "x[1,2]", "y[1,3]" or "t". Throws InputError on anything else.
VariableId parse_variable(std::string_view text);

}  // namespace detrees
