#pragma once

// JSON encodings shared by the CLI and the tests.

#include "dblpt/corners.hpp"
#include "dblpt/error.hpp"
#include "dblpt/oracle.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/romer.hpp"
#include "dblpt/scheme.hpp"
#include "dblpt/shifts.hpp"

#include <json.hpp>

#include <vector>

namespace dblpt {

using Json = nlohmann::ordered_json;

inline Json to_json(const Bidegree& d) { return Json::array({d.x, d.y}); }
inline Json to_json(const Corner& c) { return Json::array({c.row, c.col}); }

/// Canonical order: lexicographically ascending with repeats kept.
inline Json to_json(const ShiftMultiset& s)
{
    Json out = Json::array();
    for (const auto& d : s.sorted()) {
        out.push_back(to_json(d));
    }
    return out;
}

inline Json to_json(const std::vector<Corner>& cs)
{
    Json out = Json::array();
    for (const auto& c : cs) {
        out.push_back(to_json(c));
    }
    return out;
}

inline ShiftMultiset shifts_from_json(const Json& j)
{
    ShiftMultiset out;
    for (const auto& e : j) {
        out.add({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    return out;
}

inline Json to_json(const FatPointScheme& z)
{
    return Json{{"rows", z.rows()}, {"cols", z.cols()}, {"mult", z.matrix()}};
}

inline FatPointScheme scheme_from_json(const Json& j)
{
    auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
    FatPointScheme z(std::move(mult));
    if (j.contains("rows") && j.at("rows").get<int>() != z.rows()) {
        throw error(errc::malformed_scheme, "declared rows disagree with mult");
    }
    if (j.contains("cols") && j.at("cols").get<int>() != z.cols()) {
        throw error(errc::malformed_scheme, "declared cols disagree with mult");
    }
    return z;
}

inline Json to_json(const Partition& lambda, const FreeResolution& res)
{
    return Json{{"lambda", lambda.parts()}, {"s0", to_json(res.s0)}, {"s1", to_json(res.s1)},
                {"s2", to_json(res.s2)}};
}

inline FreeResolution resolution_from_json(const Json& j)
{
    return {shifts_from_json(j.at("s0")), shifts_from_json(j.at("s1")), shifts_from_json(j.at("s2"))};
}

inline Json to_json(const CornerLedger& ledger)
{
    Json out = Json::array();
    for (const auto& e : ledger) {
        out.push_back(Json{{"corner", to_json(e.corner)},
                           {"u", e.u},
                           {"v", e.v},
                           {"a", e.a},
                           {"b", e.b},
                           {"matrix_after", e.matrix_after.to_rows()}});
    }
    return out;
}

inline Json to_json(const FormExponents& f)
{
    return Json{{"rexp", f.rexp}, {"qexp", f.qexp}, {"bidegree", to_json(f.bidegree)}};
}

inline Json to_json(const std::vector<CornerForm>& forms)
{
    Json out = Json::array();
    for (const auto& cf : forms) {
        Json e{{"corner", to_json(cf.corner)}};
        e.update(to_json(cf.form));
        out.push_back(std::move(e));
    }
    return out;
}

inline Json to_json(const VerificationReport& r)
{
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(Json{{"bidegree", to_json(m.bidegree)},
                                  {"oracle", m.oracle},
                                  {"resolution", m.resolution},
                                  {"kind", m.kind == Mismatch::Kind::hilbert ? "hilbert" : "generators"}});
    }
    return Json{{"lambda", r.lambda.parts()}, {"prime", r.prime},       {"seed", r.seed},
                {"box", to_json(r.box)},      {"pass", r.pass},          {"mismatches", std::move(mismatches)},
                {"deep", r.deep}};
}

inline Json to_json(const Partition& lambda, const RomerReport& r)
{
    Json maxshift = Json::array({r.maxshift.m1, r.maxshift.m2});
    maxshift.push_back(r.maxshift.m3 ? Json(*r.maxshift.m3) : Json(nullptr));
    Json out{{"lambda", lambda.parts()},
             {"d", r.d},
             {"beta", Json::array({r.beta.b1, r.beta.b2, r.beta.b3})},
             {"maxshift", std::move(maxshift)}};
    out["bounds"] = r.bounds ? Json(*r.bounds) : Json(nullptr);
    out["cohen_macaulay"] = r.cohen_macaulay;
    out["pass"] = r.pass;
    return out;
}

} // namespace dblpt
