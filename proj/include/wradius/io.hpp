#pragma once

#include <string>
#include <variant>

#include "wradius/bounds.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// Parsed matrix file: either a dense matrix or a block operator matrix.
/// Schema (version 1), entries as [re, im] pairs:
///   {"schema_version": 1, "kind": "dense", "rows": R, "cols": C,
///    "entries": [[[re, im], ...], ...]}
///   {"schema_version": 1, "kind": "block", "n": N, "d": D,
///    "blocks": [[block, ...], ...]}   where block nests like dense entries.
struct MatrixFile {
    int schema_version = 1;
    std::variant<ComplexMatrix, BlockOperatorMatrix> payload;

    bool is_block() const { return payload.index() == 1; }
    const ComplexMatrix& dense() const { return std::get<ComplexMatrix>(payload); }
    const BlockOperatorMatrix& block() const { return std::get<BlockOperatorMatrix>(payload); }

    /// The dense matrix itself, or the flattened block matrix.
    ComplexMatrix flattened() const;
};

/// Throws ParseError on malformed JSON, schema violations, inconsistent
/// dimensions, or non-finite entries.
MatrixFile parse_matrix_file(const std::string& text);

/// Reads and parses; missing or unreadable files throw ParseError.
MatrixFile load_matrix_file(const std::string& path);

/// Canonical serialization: fixed key order, numbers at 17 significant
/// digits, so serialize(parse(serialize(x))) is byte-identical.
std::string serialize(const ComplexMatrix& m);
std::string serialize(const BlockOperatorMatrix& m);
std::string serialize(const MatrixFile& f);

/// 17-significant-digit rendering shared by every writer.
std::string format_number(double v);

}  // namespace wradius
