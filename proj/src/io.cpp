#include "wradius/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wradius {

using nlohmann::json;

namespace {

std::size_t positive_size(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::uint64_t>() == 0) {
        throw ParseError(std::string("field '") + key + "' must be a positive integer");
    }
    return j[key].get<std::size_t>();
}

Complex parse_entry(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("matrix entry must be a [re, im] pair");
    }
    const Complex v(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ParseError("matrix entries must be finite");
    }
    return v;
}

ComplexMatrix parse_dense_entries(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) {
        throw ParseError("entry rows disagree with the declared shape");
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("entry columns disagree with the declared shape");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = parse_entry(row[c]);
        }
    }
    return m;
}

void write_dense_entries(std::string& out, const ComplexMatrix& m) {
    out += "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += (i == 0) ? "[" : ",[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += "[" + format_number(m(i, j).real()) + "," + format_number(m(i, j).imag()) + "]";
        }
        out += "]";
    }
    out += "]";
}

}  // namespace

ComplexMatrix MatrixFile::flattened() const {
    return is_block() ? block().flatten() : dense();
}

MatrixFile parse_matrix_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("matrix file must be a JSON object");
    }
    if (!j.contains("schema_version") || j["schema_version"] != 1) {
        throw ParseError("unsupported or missing schema_version (expected 1)");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("missing 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();

    MatrixFile f;
    if (kind == "dense") {
        const std::size_t rows = positive_size(j, "rows");
        const std::size_t cols = positive_size(j, "cols");
        if (!j.contains("entries")) {
            throw ParseError("missing 'entries'");
        }
        f.payload = parse_dense_entries(j["entries"], rows, cols);
    } else if (kind == "block") {
        const std::size_t n = positive_size(j, "n");
        const std::size_t d = positive_size(j, "d");
        if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].size() != n) {
            throw ParseError("'blocks' must be an n x n grid");
        }
        BlockOperatorMatrix b(n, d);
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = j["blocks"][i];
            if (!row.is_array() || row.size() != n) {
                throw ParseError("'blocks' must be an n x n grid");
            }
            for (std::size_t c = 0; c < n; ++c) {
                b.block(i, c) = parse_dense_entries(row[c], d, d);
            }
        }
        f.payload = std::move(b);
    } else {
        throw ParseError("kind must be 'dense' or 'block'");
    }
    return f;
}

MatrixFile load_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_file(buf.str());
}

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string serialize(const ComplexMatrix& m) {
    std::string out = "{\"schema_version\":1,\"kind\":\"dense\",\"rows\":" +
                      std::to_string(m.rows()) + ",\"cols\":" + std::to_string(m.cols()) +
                      ",\"entries\":";
    write_dense_entries(out, m);
    out += "}";
    return out;
}

std::string serialize(const BlockOperatorMatrix& m) {
    std::string out = "{\"schema_version\":1,\"kind\":\"block\",\"n\":" +
                      std::to_string(m.grid_size()) + ",\"d\":" + std::to_string(m.block_dim()) +
                      ",\"blocks\":[";
    for (std::size_t i = 0; i < m.grid_size(); ++i) {
        out += (i == 0) ? "[" : ",[";
        for (std::size_t j = 0; j < m.grid_size(); ++j) {
            if (j > 0) {
                out += ",";
            }
            write_dense_entries(out, m.block(i, j));
        }
        out += "]";
    }
    out += "]}";
    return out;
}

std::string serialize(const MatrixFile& f) {
    return f.is_block() ? serialize(f.block()) : serialize(f.dense());
}

}  // namespace wradius
