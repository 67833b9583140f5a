#include "intquant/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>

#include "intquant/errors.hpp"

namespace intquant {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> read_losses(std::istream& in, const std::string& source) {
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = strip(line);
        if (t.empty()) continue;
        if (first_content && t == "loss") {
            first_content = false;
            continue;
        }
        first_content = false;
        const char* s = t.c_str();
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0') {
            throw DataError(source + ":" + std::to_string(lineno) +
                            ": not a number: '" + t + "'");
        }
        if (!std::isfinite(v)) {
            throw DataError(source + ":" + std::to_string(lineno) +
                            ": non-finite value");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw DataError(source + ": no observations");
    }
    return out;
}

std::vector<double> read_losses_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path);
    return read_losses(in, path);
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace intquant
