#pragma once

// Plain-text renderings for the command line tool.

#include "dblpt/corners.hpp"
#include "dblpt/oracle.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/romer.hpp"
#include "dblpt/shifts.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace dblpt {

/// Matrix with the given positions bracketed, e.g. "[1]".
inline std::string render_matrix(const DegreeMatrix& m, const std::vector<Corner>& marked = {})
{
    std::ostringstream out;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            const bool mark = std::find(marked.begin(), marked.end(), Corner{i, j}) != marked.end();
            out << (mark ? " [" : "  ") << m(i, j) << (mark ? "]" : " ");
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render_corner_list(const std::vector<Corner>& cs)
{
    std::string s = "{";
    for (std::size_t k = 0; k < cs.size(); ++k) {
        s += (k ? "," : "") + to_string(cs[k]);
    }
    return s + "}";
}

inline std::string render_ledger(const CornerLedger& ledger)
{
    std::ostringstream out;
    out << std::left << std::setw(10) << "corner" << std::right << std::setw(5) << "u" << std::setw(5) << "v"
        << std::setw(5) << "a" << std::setw(5) << "b" << '\n';
    for (const auto& e : ledger) {
        out << std::left << std::setw(10) << to_string(e.corner) << std::right << std::setw(5) << e.u
            << std::setw(5) << e.v << std::setw(5) << e.a << std::setw(5) << e.b << '\n';
    }
    return out.str();
}

/// ⊕ S(-x,-y)^k in canonical order.
inline std::string render_free_module(const ShiftMultiset& s)
{
    if (s.empty()) {
        return "0";
    }
    std::ostringstream out;
    const auto sorted = s.sorted();
    bool first = true;
    for (std::size_t k = 0; k < sorted.size();) {
        std::size_t run = k;
        while (run < sorted.size() && sorted[run] == sorted[k]) {
            ++run;
        }
        out << (first ? "" : " + ") << "S(" << -sorted[k].x << "," << -sorted[k].y << ")";
        if (run - k > 1) {
            out << "^" << (run - k);
        }
        first = false;
        k = run;
    }
    return out.str();
}

inline std::string render_resolution(const FreeResolution& res)
{
    std::ostringstream out;
    out << "F2: " << render_free_module(res.s2) << '\n';
    out << "F1: " << render_free_module(res.s1) << '\n';
    out << "F0: " << render_free_module(res.s0) << '\n';
    return out.str();
}

/// Total-degree Betti table of S/I: column i lists β_{i,i+k} in row k.
inline std::string render_betti_table(const FreeResolution& res)
{
    std::map<int, std::vector<long>> rows;
    auto bump = [&](int hom, int degree) {
        auto& row = rows[degree - hom];
        row.resize(4, 0);
        ++row[static_cast<std::size_t>(hom)];
    };
    bump(0, 0);
    for (int k = 0; k < 3; ++k) {
        for (const auto& d : res.module(k).entries()) {
            bump(k + 1, d.total());
        }
    }
    const std::vector<long> totals{1, static_cast<long>(res.s0.size()), static_cast<long>(res.s1.size()),
                                   static_cast<long>(res.s2.size())};
    const int columns = res.s2.empty() ? 3 : 4;

    std::ostringstream out;
    out << std::setw(7) << "";
    for (int i = 0; i < columns; ++i) {
        out << std::setw(4) << i;
    }
    out << "\ntotal:";
    out << ' ';
    for (int i = 0; i < columns; ++i) {
        out << std::setw(4) << totals[static_cast<std::size_t>(i)];
    }
    out << '\n';
    for (const auto& [k, row] : rows) {
        out << std::setw(5) << k << ": ";
        for (int i = 0; i < columns; ++i) {
            const long v = row[static_cast<std::size_t>(i)];
            out << std::setw(4);
            if (v == 0) {
                out << '.';
            } else {
                out << v;
            }
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render_report(const VerificationReport& r)
{
    std::ostringstream out;
    out << "lambda " << to_string(r.lambda) << "  prime " << r.prime << "  seed " << r.seed << "  box [0,"
        << r.box.x << "]x[0," << r.box.y << "]" << (r.deep ? "  deep" : "") << '\n';
    for (const auto& m : r.mismatches) {
        out << "  mismatch " << (m.kind == Mismatch::Kind::hilbert ? "hilbert   " : "generators") << " at "
            << to_string(m.bidegree) << ": oracle " << m.oracle << ", resolution " << m.resolution << '\n';
    }
    out << (r.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

inline std::string render_romer(const Partition& lambda, const RomerReport& r)
{
    std::ostringstream out;
    out << "lambda " << to_string(lambda) << "  d = " << r.d << '\n';
    out << "betti  (" << r.beta.b1 << ", " << r.beta.b2 << ", " << r.beta.b3 << ")\n";
    out << "M      (" << r.maxshift.m1 << ", " << r.maxshift.m2 << ", "
        << (r.maxshift.m3 ? std::to_string(*r.maxshift.m3) : std::string("-")) << ")\n";
    if (r.cohen_macaulay) {
        out << "Cohen-Macaulay codimension 2 case; bound holds by the known result for that case\n";
    } else {
        const auto& b = *r.bounds;
        out << "beta1 " << r.beta.b1 << " <= " << b[0] << '\n';
        out << "beta2 " << r.beta.b2 << " <= " << b[1] << '\n';
        out << "beta3 " << r.beta.b3 << " <= " << b[2] << '\n';
    }
    out << (r.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

} // namespace dblpt
