#pragma once

#include "holo/grassmann.hpp"

#include <json.hpp>

#include <string>

namespace holo {

/// On-disk JSON form of a subspace sequence. Complex numbers are [re, im]
/// pairs; each frame is a list of K columns of N such pairs (column-major
/// within a frame). See docs/formats.md.
struct SequenceFile {
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;
    std::vector<ComplexMatrix> frames; ///< each N x K
    nlohmann::json metadata;           ///< optional free-form map

    SubspaceSequence to_sequence(const Tol& tol = {}) const;
    static SequenceFile from_sequence(const SubspaceSequence& seq,
                                      nlohmann::json metadata = {});
};

SequenceFile parse_sequence_json(const nlohmann::json& j);
nlohmann::json sequence_to_json(const SequenceFile& sf);

/// File variants; reading throws input_error with parse/field context.
SequenceFile read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const SequenceFile& sf);

/// Report helpers: row-major nested arrays of [re, im] pairs.
nlohmann::json json_from_matrix(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

} // namespace holo
