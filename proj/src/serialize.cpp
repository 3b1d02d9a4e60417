#include "lapq/serialize.hpp"

#include <cstdio>
#include <string>

#include <json.hpp>

#include "lapq/errors.hpp"

namespace lapq {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Minimal JSON assembler that preserves insertion order and renders doubles
// with %.17g, so emission is byte-deterministic.
class JsonWriter {
public:
    JsonWriter& begin_object() { return punct('{'); }
    JsonWriter& end_object() {
        fresh_ = false;
        out_ += '}';
        return *this;
    }
    JsonWriter& begin_array() { return punct('['); }
    JsonWriter& end_array() {
        fresh_ = false;
        out_ += ']';
        return *this;
    }
    JsonWriter& key(const char* name) {
        separate();
        out_ += '"';
        out_ += name;
        out_ += "\":";
        fresh_ = true;
        return *this;
    }
    JsonWriter& value(double v) { return raw(fmt_double(v)); }
    JsonWriter& value(std::uint64_t v) { return raw(std::to_string(v)); }
    JsonWriter& value(int v) { return raw(std::to_string(v)); }
    JsonWriter& value(const std::string& s) {
        separate();
        out_ += '"';
        out_ += s; // callers only pass strings without characters needing escapes
        out_ += '"';
        return *this;
    }
    const std::string& str() const { return out_; }

private:
    JsonWriter& punct(char c) {
        separate();
        out_ += c;
        fresh_ = true;
        return *this;
    }
    JsonWriter& raw(const std::string& s) {
        separate();
        out_ += s;
        return *this;
    }
    void separate() {
        if (!fresh_ && !out_.empty()) {
            const char last = out_.back();
            if (last != '{' && last != '[' && last != ':') {
                out_ += ',';
            }
        }
        fresh_ = false;
    }
    std::string out_;
    bool fresh_ = true;
};

} // namespace

std::string to_json(const QuantizerDesign& d) {
    JsonWriter w;
    w.begin_object();
    w.key("t1").value(d.t1);
    w.key("y1").value(d.y1);
    w.key("y2").value(d.y2);
    w.key("distortion").value(d.distortion);
    w.key("sqnr_db").value(d.sqnr_db);
    w.key("p1").value(d.p1);
    w.key("p2").value(d.p2);
    w.end_object();
    return w.str();
}

std::string to_json(const CodeBook& cb) {
    JsonWriter w;
    w.begin_object();
    w.key("block_size").value(cb.block_size);
    w.key("entries").begin_array();
    for (const CodeEntry& e : cb.entries) {
        w.begin_object();
        w.key("tuple").begin_array();
        for (int s : e.tuple) {
            w.value(s);
        }
        w.end_array();
        w.key("code").value(e.code);
        w.key("length").value(e.length);
        w.end_object();
    }
    w.end_array();
    w.key("avg_bits_per_block").value(cb.avg_bits_per_block);
    w.key("avg_bits_per_symbol").value(cb.avg_bits_per_symbol);
    w.end_object();
    return w.str();
}

std::string to_json(const SimulationReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("seed").value(r.seed);
    w.key("n_samples").value(r.n_samples);
    w.key("sqnr_target_db").value(r.sqnr_target_db);
    w.key("analytic").begin_object();
    w.key("t1").value(r.design.t1);
    w.key("y1").value(r.design.y1);
    w.key("y2").value(r.design.y2);
    w.key("distortion").value(r.design.distortion);
    w.key("sqnr_db").value(r.design.sqnr_db);
    w.key("p1").value(r.design.p1);
    w.key("p2").value(r.design.p2);
    w.key("entropy_per_symbol").value(r.entropy_per_symbol);
    w.key("rate_per_symbol").begin_object();
    for (const auto& [m, rate] : r.rate_per_symbol) {
        w.key(std::to_string(m).c_str()).value(rate);
    }
    w.end_object();
    w.end_object();
    w.key("empirical").begin_object();
    w.key("mse").value(r.empirical_mse);
    w.key("sqnr_db").value(r.empirical_sqnr_db);
    w.key("bits_per_symbol").begin_object();
    for (const auto& [m, rate] : r.empirical_bits_per_symbol) {
        w.key(std::to_string(m).c_str()).value(rate);
    }
    w.end_object();
    w.key("p1_hat").value(r.p1_hat);
    w.end_object();
    w.end_object();
    return w.str();
}

CodeBook codebook_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("codebook JSON does not parse: ") + e.what());
    }
    try {
        CodeBook cb;
        cb.block_size = j.at("block_size").get<int>();
        for (const auto& je : j.at("entries")) {
            CodeEntry e;
            e.tuple = je.at("tuple").get<std::vector<int>>();
            e.code = je.at("code").get<std::string>();
            e.length = je.at("length").get<int>();
            cb.entries.push_back(std::move(e));
        }
        cb.avg_bits_per_block = j.at("avg_bits_per_block").get<double>();
        cb.avg_bits_per_symbol = j.at("avg_bits_per_symbol").get<double>();
        return cb;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("codebook JSON has the wrong shape: ") + e.what());
    }
}

} // namespace lapq
