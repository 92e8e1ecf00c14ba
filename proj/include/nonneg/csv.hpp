#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "nonneg/errors.hpp"

namespace nonneg {

// Shortest round-trip decimal representation; stable across runs.
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // prefer the shorter %.15g / %.16g form when it round-trips
    for (int prec = 15; prec <= 16; ++prec) {
        char s[40];
        std::snprintf(s, sizeof(s), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(s, "%lf", &back);
        if (back == v) return s;
    }
    return buf;
}

inline std::string csv_num(long long v) { return std::to_string(v); }

// RFC-4180 writer: CRLF record separators, header row mandatory, fields quoted
// only when they contain a delimiter, quote, or line break.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path, std::ios::binary) {
        if (!out_) throw Error("cannot open CSV output: " + path);
        write_record(header);
    }

    void row(const std::vector<std::string>& fields) { write_record(fields); }

private:
    static bool needs_quoting(const std::string& f) {
        return f.find_first_of(",\"\r\n") != std::string::npos;
    }

    void write_record(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) out_ << ',';
            if (needs_quoting(fields[i])) {
                out_ << '"';
                for (char c : fields[i]) {
                    if (c == '"') out_ << '"';
                    out_ << c;
                }
                out_ << '"';
            } else {
                out_ << fields[i];
            }
        }
        out_ << "\r\n";
    }

    std::ofstream out_;
};

}  // namespace nonneg
