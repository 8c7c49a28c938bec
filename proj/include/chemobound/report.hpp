#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chemobound/cascade.hpp"

namespace chemobound {

/// Ordered streaming JSON writer. Floats are printed with 17 significant
/// digits and the key order is fixed by the call sequence, so identical
/// inputs serialize byte-identically.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& os) : os_(os) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(long long v);
    JsonWriter& value_null();

    template <typename T>
    JsonWriter& kv(const std::string& k, T v) {
        return key(k).value(v);
    }

    static std::string format_double(double v);  // %.17g

private:
    void separator();
    void newline();

    std::ostream& os_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
    int depth_ = 0;
};

/// The constants report: spec echo, exponents and relation checks,
/// calibration summary, the full constant set, comparison-path constants and
/// the two bound values.
void write_constants_report(std::ostream& os, const Cascade& c);

}  // namespace chemobound
