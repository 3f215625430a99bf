#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyzeta/pipeline.hpp"

using namespace hyzeta;

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cli", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta functions of hyperelliptic curve families over binary fields"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run the pipeline for one family and parameter(s)");
    std::string familyPath, extModulus, gammaExpr, batchPath, savePath, loadPath;
    int n = 1;
    bool verifyOracle = false, dumpPrecision = false, dumpFrobenius = false, timings = false;
    run->add_option("--family", familyPath, "family file")->required();
    run->add_option("--n", n, "extension degree over the family field")->required();
    run->add_option("--ext-modulus", extModulus,
                    "irreducible modulus of F_2^(a n) over F_2, in t")->required();
    run->add_option("--gamma", gammaExpr, "parameter expression in t");
    run->add_option("--batch", batchPath, "file with one parameter expression per line");
    run->add_flag("--verify-oracle", verifyOracle, "check against exhaustive counting");
    run->add_flag("--dump-precision", dumpPrecision, "print the precision profile");
    run->add_flag("--dump-frobenius", dumpFrobenius, "print F(0) and the F' degree profile");
    run->add_option("--save-family-frobenius", savePath, "write F'(Gamma) for reuse");
    run->add_option("--load-family-frobenius", loadPath, "reuse a saved F'(Gamma)");
    run->add_flag("--timings", timings, "print phase timings to stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gammaExpr.empty() == batchPath.empty())
            throw ParseError("cli", "exactly one of --gamma or --batch is required");

        FamilySpec spec = parseFamilyFile(readFile(familyPath));
        Gf2Poly ext = parseF2Polynomial(extModulus);
        FamilyPipeline pipe(std::move(spec), n, ext);

        if (dumpPrecision) std::cout << pipe.dumpPrecision();

        if (!loadPath.empty()) {
            std::ifstream in(loadPath);
            if (!in) throw ParseError("cli", "cannot open file: " + loadPath);
            pipe.loadFrobenius(in);
        } else {
            pipe.ensureFrobenius();
        }
        if (!savePath.empty()) {
            std::ofstream out(savePath);
            if (!out) throw ParseError("cli", "cannot open file: " + savePath);
            pipe.saveFrobenius(out);
        }
        if (dumpFrobenius) std::cout << pipe.dumpFrobenius();

        int exitCode = 0;
        if (!gammaExpr.empty()) {
            PipelineResult res = pipe.runParameter(gammaExpr, verifyOracle);
            std::cout << res.record;
            if (res.oracleChecked && !res.oracleMatch) exitCode = 6;
        } else {
            std::vector<std::string> gammas;
            std::istringstream in(readFile(batchPath));
            std::string line;
            while (std::getline(in, line)) {
                size_t b = line.find_first_not_of(" \t\r");
                if (b == std::string::npos) continue;
                size_t e = line.find_last_not_of(" \t\r");
                std::string t = line.substr(b, e - b + 1);
                if (!t.empty() && t[0] != '#') gammas.push_back(t);
            }
            auto results = pipe.runBatch(gammas, verifyOracle);
            for (const auto& res : results) {
                std::cout << res.record;
                if (!res.ok && exitCode == 0) exitCode = res.exitCode;
                if (res.oracleChecked && !res.oracleMatch) exitCode = 6;
            }
        }
        if (timings) {
            std::cerr << "timings: build=" << pipe.stats().buildSeconds
                      << "s specialize=" << pipe.stats().specializeSeconds
                      << "s specialize-muls=" << pipe.stats().specializeMuls << "\n";
        }
        return exitCode;
    } catch (const HyzetaError& e) {
        std::cerr << e.what() << "\n";
        return e.exitCode();
    } catch (const std::exception& e) {
        std::cerr << "[internal] " << e.what() << "\n";
        return 1;
    }
}
