#include "hyzeta/pipeline.hpp"

#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyzeta {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

FamilySpec parseFamilyFile(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    int a = 0, genus = 0;
    std::string modulusStr, Hs, Qfs, hs;
    ProfileOverrides ov;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("cli", "bad section header on line " + std::to_string(lineno));
            section = t.substr(1, t.size() - 2);
            if (section != "field" && section != "family" && section != "options")
                throw ParseError("cli", "unknown section [" + section + "]");
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("cli", "expected key = value on line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        auto asInt = [&](const std::string& v) {
            try {
                return std::stoi(v);
            } catch (...) {
                throw ParseError("cli", "bad integer '" + v + "' on line " + std::to_string(lineno));
            }
        };
        if (section == "field") {
            if (key == "a")
                a = asInt(val);
            else if (key == "modulus")
                modulusStr = val;
            else
                throw ParseError("cli", "unknown [field] key '" + key + "'");
        } else if (section == "family") {
            if (key == "genus")
                genus = asInt(val);
            else if (key == "H")
                Hs = val;
            else if (key == "Qf")
                Qfs = val;
            else if (key == "h")
                hs = val;
            else
                throw ParseError("cli", "unknown [family] key '" + key + "'");
        } else if (section == "options") {
            if (key == "Nf")
                ov.minNf = asInt(val);
            else if (key == "N")
                ov.minN = asInt(val);
            else if (key == "N2")
                ov.minN2 = asInt(val);
            else if (key == "NGamma")
                ov.minNGamma = asInt(val);
            else
                throw ParseError("cli", "unknown [options] key '" + key + "'");
        } else {
            throw ParseError("cli", "key outside a section on line " + std::to_string(lineno));
        }
    }
    if (a <= 0) throw ParseError("cli", "[field] a missing or invalid");
    if (modulusStr.empty()) throw ParseError("cli", "[field] modulus missing");
    if (genus <= 0) throw ParseError("cli", "[family] genus missing or invalid");
    if (Hs.empty() || Qfs.empty() || hs.empty())
        throw ParseError("cli", "[family] needs H, Qf and h");

    Gf2Poly mq = parseF2Polynomial(modulusStr);
    if (mq.degree() != a) throw FamilyError("cli", "field modulus degree does not match a");
    FamilySpec spec;
    try {
        spec.Fq = std::make_shared<BinField>(mq);
    } catch (const std::exception& e) {
        throw FamilyError("cli", std::string("field modulus: ") + e.what());
    }
    ParseVars vars;
    vars.allowX = true;
    vars.allowG = true;
    vars.allowT = true;
    spec.raw.Fq = spec.Fq.get();
    spec.raw.genus = genus;
    spec.raw.H = parsePolynomial(Hs, spec.Fq.get(), vars);
    spec.raw.Qf = parsePolynomial(Qfs, spec.Fq.get(), vars);
    spec.raw.h = parsePolynomial(hs, spec.Fq.get(), vars);
    spec.overrides = ov;
    return spec;
}

FamilyPipeline::FamilyPipeline(FamilySpec spec, int n, const Gf2Poly& extModulus,
                               ProfileOverrides extra)
    : spec_(std::move(spec)), n_(n) {
    if (n_ < 1) throw ParameterError("cli", "n must be at least 1");
    fi_ = validateFamily(spec_.raw);
    ProfileOverrides ov = spec_.overrides;
    ov.minNf = std::max(ov.minNf, extra.minNf);
    ov.minN = std::max(ov.minN, extra.minN);
    ov.minN2 = std::max(ov.minN2, extra.minN2);
    ov.minNGamma = std::max(ov.minNGamma, extra.minNGamma);
    ov.extraN2 = spec_.overrides.extraN2 + extra.extraN2;
    prof_ = precisionProfile(fi_, n_, ov);
    if (extModulus.degree() != fi_.a * n_)
        throw ParameterError("cli", "extension modulus degree must be a*n");
    try {
        bigF_ = std::make_shared<BinField>(extModulus);
    } catch (const std::exception& e) {
        throw ParameterError("cli", std::string("extension modulus: ") + e.what());
    }
    emb_ = makeSubfieldEmbedding(bigF_.get(), spec_.Fq.get());
    zq_ = std::make_unique<UnramExt>(spec_.Fq.get(), ZWork(prof_.relBits));
}

void FamilyPipeline::ensureFrobenius() {
    if (haveFrobenius_) return;
    auto t0 = std::chrono::steady_clock::now();
    lf_ = liftFamily(fi_, zq_.get());
    cm_ = computeConnectionMatrices(lf_);
    FiberCtx fc = specializeAtZero(lf_);
    FrobY W = newtonFrobeniusY(fc, prof_);
    F0_ = frobeniusMatrixZero(fc, W, prof_);
    fs_ = solveDeformation(lf_, cm_, F0_, prof_);
    haveFrobenius_ = true;
    ++stats_.sharedFrobeniusComputations;
    stats_.buildSeconds += seconds(t0, std::chrono::steady_clock::now());
}

Gf2Poly FamilyPipeline::parseGamma(const std::string& expr) const {
    ParseVars vars;
    vars.allowT = true;
    FfBiPoly p = parsePolynomial(expr, bigF_.get(), vars);
    if (p.degX() > 0 || p.degG() > 0)
        throw ParseError("cli", "gamma must be an expression in t only");
    if (p.isZero()) return Gf2Poly();
    return p.coeffX(0).coeff(0);
}

PipelineResult FamilyPipeline::finishParameter(const std::string& gammaExpr, const TowerExt& tw,
                                               const TowerMat& Fz, const Gf2Poly& gamma,
                                               bool verifyOracle) {
    PipelineResult res;
    res.gamma = gammaExpr;
    TowerMat bigF = normFrobenius(tw, Fz, n_);
    auto c = charPolyDetIminusT(tw, bigF, prof_.Nf + 2);
    BigInt qn = BigInt::pow2(fi_.a * n_);
    res.zn = completeByFunctionalEquation(c, fi_.g, qn, prof_.Nf);
    res.ok = true;
    res.record = "gamma: " + gammaExpr + "\n" + zetaRecord(res.zn);
    if (verifyOracle) {
        res.oracleChecked = true;
        FfPoly hbar = fi_.hbar.evalG(gamma, bigF_.get(), &emb_);
        FfPoly fbar = fi_.fbar.evalG(gamma, bigF_.get(), &emb_);
        ZetaNumerator zo = zetaFromCounts(countCurve(hbar, fbar, fi_.g), fi_.g, qn);
        res.oracleMatch = true;
        for (int i = 0; i <= 2 * fi_.g; ++i)
            if (!(zo.b[i] == res.zn.b[i])) res.oracleMatch = false;
        res.record += res.oracleMatch ? "oracle: PASS\n" : "oracle: FAIL\n";
    }
    return res;
}

PipelineResult FamilyPipeline::runParameter(const std::string& gammaExpr, bool verifyOracle) {
    ensureFrobenius();
    Gf2Poly gamma = parseGamma(gammaExpr);
    if (!admissible(fi_, gamma, bigF_.get(), &emb_))
        throw ParameterError("zeta", "parameter not admissible");
    FfPoly psibar = minimalPolynomial(gamma, emb_);
    if (psibar.degree() != n_)
        throw ParameterError("cli",
                             "gamma generates a proper subfield (degree " +
                                 std::to_string(psibar.degree()) + " < n)");
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t m0 = ZWork::mulCount();
    TowerExt tw(zq_.get(), psibar);
    TowerElem z = tw.zClass();
    TowerMat Fz = specializeParameter(tw, fs_, lf_.r, prof_, z);
    stats_.specializeMuls += ZWork::mulCount() - m0;
    stats_.specializeSeconds += seconds(t0, std::chrono::steady_clock::now());
    return finishParameter(gammaExpr, tw, Fz, gamma, verifyOracle);
}

// ------------------------------------------------------------------ batch

namespace {

using TPoly = std::vector<TowerElem>;  // polynomial over the tower, low degree first

void tpTrim(TPoly& p) {
    while (!p.empty() && p.back().isZero()) p.pop_back();
}

TPoly tpMul(const TowerExt& tw, const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, tw.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].isZero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = tw.add(r[i + j], tw.mul(a[i], b[j]));
    }
    tpTrim(r);
    return r;
}

// remainder of a by monic b
TPoly tpModMonic(const TowerExt& tw, TPoly a, const TPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    tpTrim(a);
    while (static_cast<int>(a.size()) - 1 >= db) {
        int d = static_cast<int>(a.size()) - 1;
        TowerElem lead = a.back();
        if (!lead.isZero())
            for (int i = 0; i < db; ++i)
                a[d - db + i] = tw.sub(a[d - db + i], tw.mul(lead, b[i]));
        a.pop_back();
        tpTrim(a);
    }
    return a;
}

struct SubproductTree {
    // level 0 = leaves (Z - z_i); node p = product of children
    std::vector<std::vector<TPoly>> levels;
};

SubproductTree buildTree(const TowerExt& tw, const std::vector<TowerElem>& pts) {
    SubproductTree t;
    std::vector<TPoly> cur;
    for (const auto& z : pts) cur.push_back(TPoly{tw.neg(z), tw.one()});
    t.levels.push_back(cur);
    while (cur.size() > 1) {
        std::vector<TPoly> next;
        for (size_t i = 0; i + 1 < cur.size(); i += 2) next.push_back(tpMul(tw, cur[i], cur[i + 1]));
        if (cur.size() % 2) next.push_back(cur.back());
        t.levels.push_back(next);
        cur = t.levels.back();
    }
    return t;
}

// evaluate a polynomial with Zq coefficients at every point via the tree
std::vector<TowerElem> multipointEval(const TowerExt& tw, const std::vector<ZqElem>& coeffs,
                                      const SubproductTree& tree, size_t npts) {
    const TPoly& root = tree.levels.back()[0];
    int k = static_cast<int>(root.size()) - 1;
    // block Horner: p = sum B_j (Z^k)^j with deg B_j < k, Zk = Z^k mod root
    TPoly zk(k + 1, tw.zero());
    zk[k] = tw.one();
    zk = tpModMonic(tw, zk, root);
    TPoly acc;
    int nblocks = (static_cast<int>(coeffs.size()) + k - 1) / std::max(1, k);
    for (int j = nblocks - 1; j >= 0; --j) {
        acc = tpMul(tw, acc, zk);
        for (int d = 0; d < k; ++d) {
            size_t idx = static_cast<size_t>(j) * k + d;
            if (idx >= coeffs.size()) break;
            if (coeffs[idx].isZero()) continue;
            if (static_cast<size_t>(d) >= acc.size()) acc.resize(d + 1, tw.zero());
            acc[d] = tw.add(acc[d], tw.fromZq(coeffs[idx]));
        }
        acc = tpModMonic(tw, acc, root);
    }
    // descend the tree
    std::vector<TPoly> vals{acc};
    for (int lvl = static_cast<int>(tree.levels.size()) - 2; lvl >= 0; --lvl) {
        std::vector<TPoly> next(tree.levels[lvl].size());
        for (size_t node = 0; node < tree.levels[lvl].size(); ++node)
            next[node] = tpModMonic(tw, vals[node / 2], tree.levels[lvl][node]);
        vals = std::move(next);
    }
    std::vector<TowerElem> out(npts, tw.zero());
    for (size_t i = 0; i < npts; ++i)
        if (!vals[i].empty()) out[i] = vals[i][0];
    return out;
}

}  // namespace

std::vector<PipelineResult> FamilyPipeline::runBatch(const std::vector<std::string>& gammaExprs,
                                                     bool verifyOracle) {
    ensureFrobenius();
    // one common tower from the ambient generator's minimal polynomial over Fq
    Gf2Poly tbar = bigF_->reduce(Gf2Poly::x(1));
    FfPoly psibarGen = minimalPolynomial(tbar, emb_);
    if (psibarGen.degree() != n_)
        throw ParameterError("cli", "ambient generator does not have degree n over Fq");
    TowerExt tw(zq_.get(), psibarGen);

    // residue-field coordinates: express elements of bigF in the tower's basis
    // z^j theta^l via an F_2 change of basis
    int an = bigF_->degree(), a = fi_.a;
    std::vector<Gf2Poly> basisImg(static_cast<size_t>(an));
    {
        // z corresponds to tbar itself under the isomorphism
        for (int j = 0; j < n_; ++j)
            for (int l = 0; l < a; ++l) {
                Gf2Poly img = bigF_->mul(bigF_->pow(tbar, static_cast<std::uint64_t>(j)),
                                         emb_.thetaPow[l]);
                basisImg[static_cast<size_t>(j) * a + l] = img;
            }
    }
    // invert the F_2 matrix sending tower coordinates to bigF coordinates
    std::vector<std::vector<int>> M(an, std::vector<int>(2 * an, 0));
    for (int col = 0; col < an; ++col)
        for (int row = 0; row < an; ++row) M[row][col] = basisImg[col].bit(row) ? 1 : 0;
    for (int i = 0; i < an; ++i) M[i][an + i] = 1;
    for (int col = 0, row = 0; col < an && row < an; ++col, ++row) {
        int p = -1;
        for (int r = row; r < an; ++r)
            if (M[r][col]) {
                p = r;
                break;
            }
        if (p < 0) throw std::logic_error("batch: singular tower basis");
        std::swap(M[p], M[row]);
        for (int r = 0; r < an; ++r)
            if (r != row && M[r][col])
                for (int c = 0; c < 2 * an; ++c) M[r][c] ^= M[row][c];
    }
    auto toTowerResidue = [&](const Gf2Poly& g) {
        // coordinates in the z^j theta^l basis -> FfPoly over Fq in z
        std::vector<Gf2Poly> coords(an);
        for (int i = 0; i < an; ++i) {
            int bit = 0;
            for (int j = 0; j < an; ++j)
                if (M[i][an + j] && g.bit(j)) bit ^= 1;
            if (bit) coords[i] = Gf2Poly::one();
        }
        std::vector<Gf2Poly> zc(n_);
        for (int j = 0; j < n_; ++j) {
            Gf2Poly c;
            for (int l = 0; l < a; ++l)
                if (!coords[static_cast<size_t>(j) * a + l].isZero()) c.setBit(l);
            zc[j] = c;
        }
        return FfPoly(spec_.Fq.get(), std::move(zc));
    };

    struct Param {
        size_t index;
        Gf2Poly gamma;
        TowerElem z;
    };
    std::vector<PipelineResult> results(gammaExprs.size());
    std::vector<Param> good;
    for (size_t i = 0; i < gammaExprs.size(); ++i) {
        results[i].gamma = gammaExprs[i];
        try {
            Gf2Poly gamma = parseGamma(gammaExprs[i]);
            if (!admissible(fi_, gamma, bigF_.get(), &emb_))
                throw ParameterError("zeta", "parameter not admissible");
            FfPoly psibar = minimalPolynomial(gamma, emb_);
            if (psibar.degree() != n_)
                throw ParameterError("cli", "gamma generates a proper subfield (degree " +
                                                std::to_string(psibar.degree()) + " < n)");
            Param p;
            p.index = i;
            p.gamma = gamma;
            p.z = tw.teichmullerLift(toTowerResidue(gamma));
            good.push_back(std::move(p));
        } catch (const HyzetaError& e) {
            results[i].ok = false;
            results[i].error = e.what();
            results[i].exitCode = e.exitCode();
            results[i].record = "gamma: " + gammaExprs[i] + "\nerror: " + e.what() + "\n";
        }
    }
    if (good.empty()) return results;

    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t m0 = ZWork::mulCount();
    std::vector<TowerElem> pts;
    for (const auto& p : good) pts.push_back(p.z);
    SubproductTree tree = buildTree(tw, pts);
    int m = 2 * fi_.g;
    std::vector<std::vector<TowerElem>> entryVals(static_cast<size_t>(m) * m);
    int top = std::min<int>(static_cast<int>(fs_.Fprime.size()), prof_.NGamma);
    for (int e = 0; e < m * m; ++e) {
        std::vector<ZqElem> coeffs(top);
        for (int c = 0; c < top; ++c) coeffs[c] = fs_.Fprime[c].e[e];
        entryVals[e] = multipointEval(tw, coeffs, tree, pts.size());
    }
    stats_.specializeMuls += ZWork::mulCount() - m0;
    stats_.specializeSeconds += seconds(t0, std::chrono::steady_clock::now());

    for (size_t pi = 0; pi < good.size(); ++pi) {
        const Param& p = good[pi];
        try {
            // F(z) = r(z)^-chi1 * F'(z)
            TowerElem rz = tw.zero();
            for (int i = lf_.r.deg(); i >= 0; --i)
                rz = tw.add(tw.mul(rz, p.z), tw.fromZq(lf_.r.coeff(i)));
            if (rz.isZero() || rz.val() != 0)
                throw ParameterError("zeta", "parameter not admissible: r(z) is not a unit");
            TowerElem rinv = tw.inv(rz), rpow = tw.one();
            int e = prof_.chi1;
            TowerElem base = rinv;
            while (e) {
                if (e & 1) rpow = tw.mul(rpow, base);
                base = tw.mul(base, base);
                e >>= 1;
            }
            TowerMat Fz = TowerMat::zero(m);
            for (int ei = 0; ei < m * m; ++ei) Fz.e[ei] = tw.mul(entryVals[ei][pi], rpow);
            results[p.index] = finishParameter(gammaExprs[p.index], tw, Fz, p.gamma, verifyOracle);
        } catch (const HyzetaError& e) {
            results[p.index].ok = false;
            results[p.index].error = e.what();
            results[p.index].exitCode = e.exitCode();
            results[p.index].record =
                "gamma: " + gammaExprs[p.index] + "\nerror: " + std::string(e.what()) + "\n";
        }
    }
    return results;
}

// ------------------------------------------------------------------ dumps and reuse

std::string FamilyPipeline::dumpPrecision() const {
    const PrecisionProfile& p = prof_;
    std::ostringstream os;
    os << "precision:\n";
    os << "  g=" << p.g << " a=" << p.a << " n=" << p.n << " Dtilde=" << p.Dtilde
       << " kappa=" << p.kappa << " s=" << p.s << " eta=" << p.eta << " degXh=" << p.degXh << "\n";
    os << "  phi=" << p.phi << " phi0=" << p.phi0 << " Nf=" << p.Nf << " N=" << p.N
       << " N2=" << p.N2 << " NGamma=" << p.NGamma << "\n";
    os << "  chi1=" << p.chi1 << " chi2=" << p.chi2 << " M=" << p.M << " beta=" << p.beta
       << " betaD=" << p.betaD << " betaPrime=" << p.betaPrime << " alpha=" << p.alpha << "\n";
    os << "  as=" << p.asS << " bs=" << p.bsS << " atilde=" << p.atilde << " btilde=" << p.btilde
       << " omega=" << p.omega << " delta=" << p.delta << " capA=" << p.capA << " capB=" << p.capB
       << "\n";
    os << "  MitN=" << p.MitN << " MtitN=" << p.MtitN << " Mit=" << p.Mit << " Mtit=" << p.Mtit
       << " targetPrec=" << p.targetPrec << " relBits=" << p.relBits << "\n";
    return os.str();
}

std::string FamilyPipeline::dumpFrobenius() const {
    if (!haveFrobenius_) throw std::logic_error("dumpFrobenius before ensureFrobenius");
    std::ostringstream os;
    int m = 2 * fi_.g;
    os << "frobenius-at-zero:\n";
    for (int i = 0; i < m; ++i) {
        os << " ";
        for (int j = 0; j < m; ++j) {
            const ZqElem& e = F0_.at(i, j);
            os << " [";
            for (size_t c = 0; c < e.c.size(); ++c) os << (c ? "," : "") << e.c[c].toString();
            os << "]";
        }
        os << "\n";
    }
    os << "fprime-gamma-degrees:\n";
    for (int i = 0; i < m; ++i) {
        os << " ";
        for (int j = 0; j < m; ++j) {
            int deg = -1;
            for (int c = 0; c < static_cast<int>(fs_.Fprime.size()); ++c)
                if (fs_.Fprime[c].at(i, j).val() < prof_.N) deg = c;
            os << " " << deg;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

void writeElem(std::ostream& os, const ZqElem& e) {
    os << e.c.size();
    for (const auto& s : e.c) os << " " << s.toString();
    os << "\n";
}

ZqElem readElem(std::istream& is) {
    size_t len = 0;
    if (!(is >> len)) throw ParseError("cli", "family-frobenius file: truncated element");
    ZqElem e;
    e.c.resize(len);
    for (size_t i = 0; i < len; ++i) {
        std::string tok;
        if (!(is >> tok)) throw ParseError("cli", "family-frobenius file: truncated scalar");
        e.c[i] = PadicScalar::parse(tok, PadicScalar::kMaxLimbs);
    }
    e.trim();
    return e;
}

}  // namespace

void FamilyPipeline::saveFrobenius(std::ostream& os) const {
    if (!haveFrobenius_) throw std::logic_error("saveFrobenius before ensureFrobenius");
    os << "hyzeta-family-frobenius v1\n";
    os << "g " << prof_.g << "\na " << prof_.a << "\nn " << prof_.n << "\nkappa " << prof_.kappa
       << "\nM " << prof_.M << "\nN2 " << prof_.N2 << "\nNGamma " << prof_.NGamma << "\n";
    os << "r " << lf_.r.c.size() << "\n";
    for (const auto& e : lf_.r.c) writeElem(os, e);
    int m = 2 * prof_.g;
    os << "F " << m << " " << fs_.Fprime.size() << "\n";
    for (size_t c = 0; c < fs_.Fprime.size(); ++c)
        for (int i = 0; i < m * m; ++i) writeElem(os, fs_.Fprime[c].e[i]);
}

void FamilyPipeline::loadFrobenius(std::istream& is) {
    std::string magic, ver;
    is >> magic >> ver;
    if (magic != "hyzeta-family-frobenius" || ver != "v1")
        throw ParseError("cli", "not a family-frobenius file");
    auto expect = [&](const std::string& key, int want) {
        std::string k;
        int v;
        if (!(is >> k >> v) || k != key)
            throw ParseError("cli", "family-frobenius file: expected " + key);
        if (v != want)
            throw PrecisionError("cli", "family-frobenius file does not match this run (" + key +
                                            " " + std::to_string(v) + " != " +
                                            std::to_string(want) + ")");
    };
    expect("g", prof_.g);
    expect("a", prof_.a);
    expect("n", prof_.n);
    expect("kappa", prof_.kappa);
    expect("M", prof_.M);
    expect("N2", prof_.N2);
    expect("NGamma", prof_.NGamma);
    // the family polynomials and the reduction data are cheap: recompute them, then
    // install the stored series (they are what steps 2-4 would have produced)
    lf_ = liftFamily(fi_, zq_.get());
    cm_ = computeConnectionMatrices(lf_);
    std::string key;
    size_t rlen = 0;
    if (!(is >> key >> rlen) || key != "r") throw ParseError("cli", "family-frobenius file: expected r");
    ZqPoly r;
    r.c.resize(rlen);
    for (size_t i = 0; i < rlen; ++i) r.c[i] = readElem(is);
    r.trim();
    lf_.r = r;
    int m = 0;
    size_t ncoef = 0;
    if (!(is >> key >> m >> ncoef) || key != "F")
        throw ParseError("cli", "family-frobenius file: expected F");
    if (m != 2 * prof_.g) throw PrecisionError("cli", "family-frobenius file: wrong dimension");
    fs_.g = prof_.g;
    fs_.NGamma = prof_.NGamma;
    fs_.chi2 = prof_.chi2;
    fs_.K.clear();
    fs_.Fprime.assign(ncoef, ZqMat::zero(m));
    for (size_t c = 0; c < ncoef; ++c)
        for (int i = 0; i < m * m; ++i) fs_.Fprime[c].e[i] = readElem(is);
    F0_ = ZqMat::zero(m);
    haveFrobenius_ = true;
}

}  // namespace hyzeta
