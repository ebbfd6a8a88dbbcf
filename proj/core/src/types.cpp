#include "causalorder/types.hpp"

#include <sstream>

namespace causalorder {

std::string format_set(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& x : s) {
        if (!first) out << ", ";
        out << x;
        first = false;
    }
    out << '}';
    return out.str();
}

VertexSet parse_id_list(const std::string& text) {
    VertexSet out;
    std::string current;
    auto flush = [&] {
        auto b = current.find_first_not_of(" \t");
        auto e = current.find_last_not_of(" \t");
        if (b != std::string::npos) out.insert(current.substr(b, e - b + 1));
        current.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else {
            current += c;
        }
    }
    flush();
    return out;
}

}  // namespace causalorder
