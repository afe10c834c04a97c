#include "detrees/variable.hpp"

#include <cctype>

namespace detrees {

std::string VariableId::name() const {
    switch (kind()) {
        case VarKind::X:
            return "x[" + std::to_string(row()) + "," + std::to_string(col()) + "]";
        case VarKind::Y:
            return "y[" + std::to_string(yi()) + "," + std::to_string(yj()) + "]";
        case VarKind::T:
            return "t";
    }
    return "?";
}

namespace {

int parse_int(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw InputError("variable: expected an index");
    int value = 0;
    for (size_t k = start; k < pos; ++k) value = value * 10 + (s[k] - '0');
    return value;
}

}  // namespace

VariableId parse_variable(std::string_view text) {
    if (text == "t") return VariableId::t();
    if (text.size() < 6 || (text[0] != 'x' && text[0] != 'y') || text[1] != '[')
        throw InputError("variable: expected x[i,j], y[i,j] or t, got '" + std::string(text) + "'");
    size_t pos = 2;
    int a = parse_int(text, pos);
    if (pos >= text.size() || text[pos] != ',') throw InputError("variable: expected ','");
    ++pos;
    int b = parse_int(text, pos);
    if (pos + 1 != text.size() || text[pos] != ']') throw InputError("variable: expected ']'");
    return text[0] == 'x' ? VariableId::x(a, b) : VariableId::y(a, b);
}

}  // namespace detrees
