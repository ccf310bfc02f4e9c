#ifndef QINFO_TOOLS_REPORT_HPP
#define QINFO_TOOLS_REPORT_HPP

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

// Report emitters for the command line tool. JSON keys keep insertion order
// and floats carry 17 significant digits so emitted values round-trip; CSV
// rows use CRLF line endings per RFC 4180.

namespace report {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Json {
public:
    static Json number(double v) { return Json(format_double(v)); }
    static Json integer(long long v) { return Json(std::to_string(v)); }
    static Json unsigned_integer(unsigned long long v) { return Json(std::to_string(v)); }
    static Json boolean(bool v) { return Json(v ? "true" : "false"); }
    static Json string(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        return Json(std::move(out));
    }
    static Json array() {
        Json j;
        j.is_array_ = true;
        return j;
    }
    static Json object() {
        Json j;
        j.is_object_ = true;
        return j;
    }
    static Json numbers(const double* v, int count) {
        Json j = array();
        for (int k = 0; k < count; ++k) j.push(number(v[k]));
        return j;
    }
    static Json matrix(const double* v, int rows, int cols) {
        Json j = array();
        for (int r = 0; r < rows; ++r) j.push(numbers(v + static_cast<size_t>(r) * cols, cols));
        return j;
    }

    Json& push(Json item) {
        items_.push_back(std::move(item));
        return *this;
    }
    Json& set(const std::string& key, Json value) {
        keys_.push_back(key);
        items_.push_back(std::move(value));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        out.push_back('\n');
        return out;
    }

private:
    Json() = default;
    explicit Json(std::string scalar) : scalar_(std::move(scalar)) {}

    void write(std::string& out) const {
        if (is_object_) {
            out.push_back('{');
            for (size_t k = 0; k < items_.size(); ++k) {
                if (k > 0) out.push_back(',');
                out += string(keys_[k]).scalar_;
                out.push_back(':');
                items_[k].write(out);
            }
            out.push_back('}');
        } else if (is_array_) {
            out.push_back('[');
            for (size_t k = 0; k < items_.size(); ++k) {
                if (k > 0) out.push_back(',');
                items_[k].write(out);
            }
            out.push_back(']');
        } else {
            out += scalar_;
        }
    }

    bool is_array_ = false;
    bool is_object_ = false;
    std::string scalar_;
    std::vector<std::string> keys_;
    std::vector<Json> items_;
};

class Csv {
public:
    explicit Csv(std::vector<std::string> header) {
        for (size_t k = 0; k < header.size(); ++k) {
            if (k > 0) text_.push_back(',');
            text_ += header[k];
        }
        text_ += "\r\n";
    }

    void row(const double* values, int count) {
        for (int k = 0; k < count; ++k) {
            if (k > 0) text_.push_back(',');
            text_ += format_double(values[k]);
        }
        text_ += "\r\n";
    }

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

} // namespace report

#endif
