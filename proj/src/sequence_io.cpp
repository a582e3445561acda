#include "holo/sequence_io.hpp"

#include "holo/errors.hpp"

#include <fstream>

namespace holo {

using nlohmann::json;

namespace {

cplx complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw input_error("sequence file: " + where + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

} // namespace

SubspaceSequence SequenceFile::to_sequence(const Tol& tol) const {
    std::vector<Frame> fr;
    fr.reserve(frames.size());
    for (std::size_t a = 0; a < frames.size(); ++a) {
        try {
            fr.emplace_back(frames[a], tol);
        } catch (const input_error& e) {
            throw input_error("sequence file: frame " + std::to_string(a) + ": " + e.what());
        }
    }
    return SubspaceSequence(std::move(fr));
}

SequenceFile SequenceFile::from_sequence(const SubspaceSequence& seq, json metadata) {
    SequenceFile sf;
    sf.ambient_dim = seq.ambient_dim();
    sf.rank = seq.rank();
    sf.metadata = std::move(metadata);
    for (std::size_t a = 0; a < seq.size(); ++a) sf.frames.push_back(seq[a].matrix());
    return sf;
}

SequenceFile parse_sequence_json(const json& j) {
    if (!j.is_object()) throw input_error("sequence file: top level must be an object");
    for (const char* field : {"ambient_dim", "rank", "frames"})
        if (!j.contains(field))
            throw input_error(std::string("sequence file: missing field '") + field + "'");

    SequenceFile sf;
    const json& jn = j["ambient_dim"];
    const json& jr = j["rank"];
    if (!jn.is_number_integer() || !jr.is_number_integer() || jn.get<long long>() < 1 ||
        jr.get<long long>() < 1)
        throw input_error("sequence file: ambient_dim and rank must be positive integers");
    sf.ambient_dim = jn.get<std::size_t>();
    sf.rank = jr.get<std::size_t>();
    if (sf.rank > sf.ambient_dim)
        throw input_error("sequence file: need 1 <= rank <= ambient_dim");

    const json& frames = j["frames"];
    if (!frames.is_array() || frames.empty())
        throw input_error("sequence file: 'frames' must be a nonempty array");
    for (std::size_t a = 0; a < frames.size(); ++a) {
        const json& jf = frames[a];
        const std::string where = "frame " + std::to_string(a);
        if (!jf.is_array() || jf.size() != sf.rank)
            throw input_error("sequence file: " + where + ": expected " +
                              std::to_string(sf.rank) + " columns");
        ComplexMatrix f(sf.ambient_dim, sf.rank);
        for (std::size_t k = 0; k < sf.rank; ++k) {
            const json& col = jf[k];
            if (!col.is_array() || col.size() != sf.ambient_dim)
                throw input_error("sequence file: " + where + ", column " + std::to_string(k) +
                                  ": expected " + std::to_string(sf.ambient_dim) + " entries");
            for (std::size_t i = 0; i < sf.ambient_dim; ++i)
                f(i, k) = complex_from_json(col[i], where + ", column " + std::to_string(k) +
                                                        ", entry " + std::to_string(i));
        }
        sf.frames.push_back(std::move(f));
    }
    if (j.contains("metadata")) sf.metadata = j["metadata"];
    return sf;
}

json sequence_to_json(const SequenceFile& sf) {
    json j;
    j["ambient_dim"] = sf.ambient_dim;
    j["rank"] = sf.rank;
    json frames = json::array();
    for (const ComplexMatrix& f : sf.frames) {
        json jf = json::array();
        for (std::size_t k = 0; k < f.cols(); ++k) {
            json col = json::array();
            for (std::size_t i = 0; i < f.rows(); ++i) col.push_back(complex_to_json(f(i, k)));
            jf.push_back(std::move(col));
        }
        frames.push_back(std::move(jf));
    }
    j["frames"] = std::move(frames);
    if (!sf.metadata.is_null()) j["metadata"] = sf.metadata;
    return j;
}

SequenceFile read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open sequence file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("sequence file '" + path + "': " + e.what());
    }
    return parse_sequence_json(j);
}

void write_sequence_file(const std::string& path, const SequenceFile& sf) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << sequence_to_json(sf).dump(2) << '\n';
}

json json_from_matrix(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix json: expected array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw input_error("matrix json: empty rows");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error("matrix json: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = complex_from_json(j[i][c], "matrix entry");
    }
    return m;
}

} // namespace holo
