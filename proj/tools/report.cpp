#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace gameprice::cli {

namespace {

void write(const Json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                write(it.value(), out, depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write(j[i], out, depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_number(x) : "null";
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string render_json(const Json& doc) {
    std::string out;
    write(doc, out, 0);
    out += "\n";
    return out;
}

}  // namespace gameprice::cli
