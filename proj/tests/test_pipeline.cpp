#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hyzeta/pipeline.hpp"

using namespace hyzeta;

namespace {

const char* kRunningFam =
    "[field]\na = 1\nmodulus = t + 1\n[family]\ngenus = 1\nH = X\n"
    "Qf = X^2 + (1 + G)*X + 1\nh = X\n";

FamilyPipeline makePipe(int n, const std::string& ext) {
    return FamilyPipeline(parseFamilyFile(kRunningFam), n, parseF2Polynomial(ext));
}

}  // namespace

TEST_CASE("running family at gamma = 0 reproduces the fiber oracle") {
    FamilyPipeline pipe = makePipe(1, "t+1");
    PipelineResult res = pipe.runParameter("0", true);
    REQUIRE(res.ok);
    CHECK(res.zn.b[0] == BigInt(1));
    CHECK(res.zn.b[1] == BigInt(-1));
    CHECK(res.zn.b[2] == BigInt(2));
    CHECK(res.oracleChecked);
    CHECK(res.oracleMatch);
    CHECK(res.record.find("P: 1 -1 2") != std::string::npos);
    CHECK(res.record.find("zeta: P(T)/((1-T)(1-2*T))") != std::string::npos);
}

TEST_CASE("batch of three emits three records in input order; errors do not abort") {
    FamilyPipeline pipe = makePipe(2, "t^2 + t + 1");
    auto results = pipe.runBatch({"t", "1", "t + 1"}, false);
    REQUIRE(results.size() == 3);
    CHECK(results[0].ok);
    CHECK(!results[1].ok);  // gamma = 1 generates F_2, a proper subfield
    CHECK(results[1].exitCode == 4);
    CHECK(results[2].ok);
    CHECK(results[0].gamma == "t");
    CHECK(results[2].gamma == "t + 1");
    // the shared series ran exactly once
    CHECK(pipe.stats().sharedFrobeniusComputations == 1);
}

TEST_CASE("batch output is bit-identical to sequential runs") {
    FamilyPipeline batchPipe = makePipe(3, "t^3 + t + 1");
    auto batch = batchPipe.runBatch({"t", "t^2", "t + 1", "t^2 + t"}, false);
    for (const auto& res : batch) REQUIRE(res.ok);
    for (const auto& expr : {"t", "t^2", "t + 1", "t^2 + t"}) {
        FamilyPipeline single = makePipe(3, "t^3 + t + 1");
        PipelineResult sres = single.runParameter(expr, false);
        bool found = false;
        for (const auto& res : batch)
            if (res.gamma == expr) {
                CHECK(res.record == sres.record);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("save and load give bit-identical records") {
    FamilyPipeline pipe = makePipe(2, "t^2 + t + 1");
    pipe.ensureFrobenius();
    std::ostringstream saved;
    pipe.saveFrobenius(saved);
    PipelineResult direct = pipe.runParameter("t", false);

    FamilyPipeline pipe2 = makePipe(2, "t^2 + t + 1");
    std::istringstream in(saved.str());
    pipe2.loadFrobenius(in);
    CHECK(pipe2.stats().sharedFrobeniusComputations == 0);
    PipelineResult loaded = pipe2.runParameter("t", false);
    CHECK(direct.record == loaded.record);
}

TEST_CASE("load rejects a mismatched header") {
    FamilyPipeline pipe = makePipe(2, "t^2 + t + 1");
    pipe.ensureFrobenius();
    std::ostringstream saved;
    pipe.saveFrobenius(saved);
    FamilyPipeline other = makePipe(3, "t^3 + t + 1");
    std::istringstream in(saved.str());
    CHECK_THROWS_AS(other.loadFrobenius(in), PrecisionError);
}

TEST_CASE("dumps are labeled text blocks") {
    FamilyPipeline pipe = makePipe(1, "t+1");
    CHECK(pipe.dumpPrecision().find("precision:") == 0);
    CHECK(pipe.dumpPrecision().find("NGamma=") != std::string::npos);
    pipe.ensureFrobenius();
    std::string fd = pipe.dumpFrobenius();
    CHECK(fd.find("frobenius-at-zero:") == 0);
    CHECK(fd.find("fprime-gamma-degrees:") != std::string::npos);
}

TEST_CASE("determinism: two pipelines produce byte-identical records") {
    FamilyPipeline p1 = makePipe(2, "t^2 + t + 1");
    FamilyPipeline p2 = makePipe(2, "t^2 + t + 1");
    CHECK(p1.runParameter("t", true).record == p2.runParameter("t", true).record);
}
