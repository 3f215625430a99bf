#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyzeta/pipeline.hpp"

namespace py = pybind11;
using namespace hyzeta;

namespace {

py::int_ toPyInt(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.toDecimal().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict resultToDict(const PipelineResult& res) {
    py::dict d;
    d["gamma"] = res.gamma;
    d["ok"] = res.ok;
    d["record"] = res.record;
    if (!res.ok) {
        d["error"] = res.error;
        d["exit_code"] = res.exitCode;
        return d;
    }
    py::list P, counts;
    for (const auto& b : res.zn.b) P.append(toPyInt(b));
    for (const auto& c : res.zn.counts) counts.append(toPyInt(c));
    d["P"] = P;
    d["counts"] = counts;
    d["qn"] = toPyInt(res.zn.qn);
    if (res.oracleChecked) d["oracle_match"] = res.oracleMatch;
    return d;
}

FamilyPipeline makePipeline(const std::string& familyText, int n, const std::string& extModulus) {
    return FamilyPipeline(parseFamilyFile(familyText), n, parseF2Polynomial(extModulus));
}

py::dict runFamily(const std::string& familyText, int n, const std::string& extModulus,
                   const std::string& gamma, bool verifyOracle) {
    FamilyPipeline pipe = makePipeline(familyText, n, extModulus);
    return resultToDict(pipe.runParameter(gamma, verifyOracle));
}

py::list runBatch(const std::string& familyText, int n, const std::string& extModulus,
                  const std::vector<std::string>& gammas, bool verifyOracle) {
    FamilyPipeline pipe = makePipeline(familyText, n, extModulus);
    py::list out;
    for (const auto& res : pipe.runBatch(gammas, verifyOracle)) out.append(resultToDict(res));
    return out;
}

py::dict precisionProfileDict(const std::string& familyText, int n) {
    FamilySpec spec = parseFamilyFile(familyText);
    FamilyInput fi = validateFamily(spec.raw);
    PrecisionProfile p = precisionProfile(fi, n, spec.overrides);
    py::dict d;
    d["g"] = p.g;
    d["a"] = p.a;
    d["n"] = p.n;
    d["Dtilde"] = p.Dtilde;
    d["kappa"] = p.kappa;
    d["phi"] = p.phi;
    d["phi0"] = p.phi0;
    d["Nf"] = p.Nf;
    d["N"] = p.N;
    d["N2"] = p.N2;
    d["NGamma"] = p.NGamma;
    d["chi1"] = p.chi1;
    d["chi2"] = p.chi2;
    d["M"] = p.M;
    d["target_prec"] = p.targetPrec;
    return d;
}

py::dict oracleZeta(const std::string& familyText, int n, const std::string& extModulus,
                    const std::string& gamma) {
    FamilySpec spec = parseFamilyFile(familyText);
    FamilyInput fi = validateFamily(spec.raw);
    Gf2Poly ext = parseF2Polynomial(extModulus);
    BinField bigF{ext};
    SubfieldEmbedding emb = makeSubfieldEmbedding(&bigF, spec.Fq.get());
    ParseVars vars;
    FfBiPoly g = parsePolynomial(gamma, &bigF, vars);
    Gf2Poly gv = g.isZero() ? Gf2Poly() : g.coeffX(0).coeff(0);
    FfPoly hbar = fi.hbar.evalG(gv, &bigF, &emb);
    FfPoly fbar = fi.fbar.evalG(gv, &bigF, &emb);
    ZetaNumerator zn = zetaFromCounts(countCurve(hbar, fbar, fi.g), fi.g,
                                      BigInt::pow2(fi.a * n));
    py::dict d;
    py::list P, counts;
    for (const auto& b : zn.b) P.append(toPyInt(b));
    for (const auto& c : zn.counts) counts.append(toPyInt(c));
    d["P"] = P;
    d["counts"] = counts;
    return d;
}

std::string parseCheck(const std::string& src, const std::string& fieldModulus, bool allowX,
                       bool allowG) {
    BinField F{parseF2Polynomial(fieldModulus)};
    ParseVars vars;
    vars.allowX = allowX;
    vars.allowG = allowG;
    return parsePolynomial(src, &F, vars).toString();
}

}  // namespace

PYBIND11_MODULE(hyzeta, m) {
    m.doc() = "zeta functions of hyperelliptic curve families over binary fields";

    py::register_exception<HyzetaError>(m, "HyzetaError", PyExc_ValueError);

    m.def("run_family", &runFamily, py::arg("family_text"), py::arg("n"), py::arg("ext_modulus"),
          py::arg("gamma"), py::arg("verify_oracle") = false,
          "run the full pipeline for one parameter; returns P, counts and the record text");
    m.def("run_batch", &runBatch, py::arg("family_text"), py::arg("n"), py::arg("ext_modulus"),
          py::arg("gammas"), py::arg("verify_oracle") = false,
          "run many parameters over one shared deformation");
    m.def("precision_profile", &precisionProfileDict, py::arg("family_text"), py::arg("n"),
          "working-precision constants for a family at extension degree n");
    m.def("oracle_zeta", &oracleZeta, py::arg("family_text"), py::arg("n"),
          py::arg("ext_modulus"), py::arg("gamma"),
          "ground-truth numerator by exhaustive point counting");
    m.def("parse_polynomial", &parseCheck, py::arg("src"), py::arg("field_modulus") = "t + 1",
          py::arg("allow_x") = true, py::arg("allow_g") = true,
          "parse and echo a polynomial expression (raises on syntax errors)");
}
