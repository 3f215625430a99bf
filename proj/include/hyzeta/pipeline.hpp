#ifndef HYZETA_PIPELINE_HPP
#define HYZETA_PIPELINE_HPP

#include <iosfwd>
#include <memory>

#include "hyzeta/frobzero.hpp"
#include "hyzeta/oracle.hpp"
#include "hyzeta/parser.hpp"
#include "hyzeta/zeta.hpp"

namespace hyzeta {

// Parsed family file: [field] / [family] / [options]
struct FamilySpec {
    std::shared_ptr<BinField> Fq;
    RawFamily raw;
    ProfileOverrides overrides;
};

FamilySpec parseFamilyFile(const std::string& text);

struct RunStats {
    int sharedFrobeniusComputations = 0;   // how often steps 1-4 actually ran
    std::uint64_t specializeMuls = 0;      // base multiplications in the evaluation phase
    double buildSeconds = 0;
    double specializeSeconds = 0;
};

struct PipelineResult {
    std::string gamma;     // the parameter expression as given
    bool ok = false;
    std::string error;     // module-tagged message when !ok
    int exitCode = 0;
    ZetaNumerator zn;      // valid when ok
    std::string record;    // gamma/P/zeta/counts block (or gamma/error block)
    bool oracleChecked = false;
    bool oracleMatch = false;
};

// One family at one extension degree: builds F'(Gamma) once, then serves parameters.
class FamilyPipeline {
  public:
    FamilyPipeline(FamilySpec spec, int n, const Gf2Poly& extModulus,
                   ProfileOverrides extra = {});

    const PrecisionProfile& profile() const { return prof_; }
    const FamilyInput& familyInput() const { return fi_; }
    RunStats& stats() { return stats_; }
    const UnramExt& zq() const { return *zq_; }
    const FrobSeries& frobSeries() const { return fs_; }
    const LiftedFamily& lifted() const { return lf_; }
    const ZqMat& frobZero() const { return F0_; }
    const ConnectionMatrices& connection() const { return cm_; }

    // steps 1-4 (validate, lift, B/D, F(0), ODE); no-op if already available
    void ensureFrobenius();

    // single-parameter run (steps 5-6 over the minimal-polynomial tower)
    PipelineResult runParameter(const std::string& gammaExpr, bool verifyOracle = false);

    // batch over one common tower with subproduct-tree evaluation; per-parameter
    // failures are reported in the results without aborting the batch
    std::vector<PipelineResult> runBatch(const std::vector<std::string>& gammaExprs,
                                         bool verifyOracle = false);

    std::string dumpPrecision() const;
    std::string dumpFrobenius() const;

    void saveFrobenius(std::ostream& os) const;
    void loadFrobenius(std::istream& is);

  private:
    PipelineResult finishParameter(const std::string& gammaExpr, const TowerExt& tw,
                                   const TowerMat& Fz, const Gf2Poly& gamma, bool verifyOracle);
    Gf2Poly parseGamma(const std::string& expr) const;

    FamilySpec spec_;
    int n_;
    FamilyInput fi_;
    PrecisionProfile prof_;
    std::shared_ptr<BinField> bigF_;
    SubfieldEmbedding emb_;
    std::unique_ptr<UnramExt> zq_;
    LiftedFamily lf_;
    ConnectionMatrices cm_;
    ZqMat F0_;
    FrobSeries fs_;
    bool haveFrobenius_ = false;
    RunStats stats_;
};

}  // namespace hyzeta

#endif
