#pragma once

#include <charconv>
#include <fstream>
#include <string>

#include "attinit/errors.hpp"

namespace attinit {

/// Shortest exact decimal representation (round-trips through a double).
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Line-buffered CSV writer with LF endings; throws IoError on failure.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header) : path_(path) {
        out_.open(path, std::ios::binary | std::ios::trunc);
        if (!out_) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        out_ << header << '\n';
    }

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, write_field(fields)), ...);
        out_ << '\n';
    }

    void close() {
        out_.flush();
        if (!out_) {
            throw IoError("write failure on '" + path_ + "'");
        }
        out_.close();
    }

private:
    void write_field(double v) { out_ << format_double(v); }
    void write_field(int v) { out_ << v; }
    void write_field(long v) { out_ << v; }
    void write_field(const std::string& v) { out_ << v; }
    void write_field(const char* v) { out_ << v; }

    std::string path_;
    std::ofstream out_;
};

}  // namespace attinit
