#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holo/errors.hpp"
#include "holo/sequence_io.hpp"

#include <cstdio>
#include <string>

using namespace holo;
using nlohmann::json;

TEST_CASE("sequence file round trip is bit exact") {
    const SubspaceSequence seq = random_sequence(5, 2, 4, 77);
    const SequenceFile sf = SequenceFile::from_sequence(seq, json{{"note", "round-trip"}});
    const json j = sequence_to_json(sf);
    const SequenceFile back = parse_sequence_json(json::parse(j.dump()));
    REQUIRE(back.frames.size() == 4);
    CHECK(back.ambient_dim == 5);
    CHECK(back.rank == 2);
    for (std::size_t a = 0; a < 4; ++a)
        CHECK(max_abs_distance(back.frames[a], sf.frames[a]) == 0.0);
    const SubspaceSequence seq2 = back.to_sequence();
    for (std::size_t a = 0; a < 4; ++a)
        CHECK(max_abs_distance(seq2[a].matrix(), seq[a].matrix()) == 0.0);
    CHECK(back.metadata["note"] == "round-trip");
}

TEST_CASE("file io") {
    const std::string path = "/tmp/holo_test_seq.json";
    const SubspaceSequence seq = random_sequence(3, 1, 3, 5);
    write_sequence_file(path, SequenceFile::from_sequence(seq));
    const SequenceFile sf = read_sequence_file(path);
    CHECK(sf.frames.size() == 3);
    CHECK(max_abs_distance(sf.frames[0], seq[0].matrix()) == 0.0);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_sequence_file("/tmp/definitely_missing_holo.json"), input_error);
}

TEST_CASE("parse errors carry field context") {
    auto expect_error = [](const json& j, const char* needle) {
        try {
            parse_sequence_json(j);
            FAIL("expected input_error");
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error(json::array(), "top level");
    expect_error(json{{"rank", 1}, {"frames", json::array()}}, "ambient_dim");
    expect_error(json{{"ambient_dim", 2}, {"rank", 3}, {"frames", json::array()}}, "rank");
    expect_error(json{{"ambient_dim", 2}, {"rank", 1}, {"frames", json::array()}}, "frames");

    json good{{"ambient_dim", 2},
              {"rank", 1},
              {"frames", json::array({json::array({json::array(
                             {json::array({1.0, 0.0}), json::array({0.0, 0.0})})})})}};
    CHECK_NOTHROW(parse_sequence_json(good));

    json short_col = good;
    short_col["frames"][0][0].erase(1);
    expect_error(short_col, "column");

    json bad_pair = good;
    bad_pair["frames"][0][0][0] = json::array({1.0});
    expect_error(bad_pair, "[re, im]");

    // malformed text stream
    CHECK_THROWS_AS(
        [] {
            const std::string path = "/tmp/holo_bad.json";
            FILE* f = std::fopen(path.c_str(), "w");
            std::fputs("{not json", f);
            std::fclose(f);
            try {
                read_sequence_file(path);
            } catch (...) {
                std::remove(path.c_str());
                throw;
            }
        }(),
        input_error);

    // frames that fail orthonormality validation surface with frame index
    json skewed = good;
    skewed["frames"][0][0][0] = json::array({2.0, 0.0});
    try {
        parse_sequence_json(skewed).to_sequence();
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("frame 0") != std::string::npos);
    }
}

TEST_CASE("matrix json helpers") {
    const ComplexMatrix m{{cplx(1.0, 2.0), cplx(0.0, -1.0)}, {cplx(3.5, 0.0), cplx(0.25, 0.75)}};
    const ComplexMatrix back = matrix_from_json(json_from_matrix(m));
    CHECK(max_abs_distance(m, back) == 0.0);
    CHECK_THROWS_AS(matrix_from_json(json::array()), input_error);
}
