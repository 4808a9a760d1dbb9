#pragma once

// Brute-force verification of resolutions through exact linear algebra over
// a prime field. Nothing here depends on the corner or resolution machinery.

#include "dblpt/corners.hpp"
#include "dblpt/error.hpp"
#include "dblpt/modular.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/resolution.hpp"
#include "dblpt/scheme.hpp"
#include "dblpt/shifts.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dblpt {

inline constexpr std::uint64_t default_prime = 1000003;
inline constexpr std::uint64_t alternate_prime = 1000033;

struct OracleConfig {
    std::uint64_t prime = default_prime;
    std::uint64_t seed = 0;
    /// Inclusive upper corner (xmax, ymax) of the verification box. When
    /// unset, [0, 2r+1] x [0, 2t+1] for an r x t grid.
    std::optional<Bidegree> box;
};

/// Throws unless the prime is above 10^6 (and below 2^31).
inline void validate(const OracleConfig& cfg)
{
    if (cfg.prime <= 1000000) {
        throw error(errc::invalid_config, "oracle prime must exceed 10^6");
    }
    (void)PrimeField{cfg.prime};
    if (cfg.box && (cfg.box->x < 0 || cfg.box->y < 0)) {
        throw error(errc::box_too_small, "box corner must be nonnegative");
    }
}

inline Bidegree default_box(int grid_rows, int grid_cols)
{
    return {2 * grid_rows + 1, 2 * grid_cols + 1};
}

/// Values indexed by bidegree (a, b) with 0 <= a <= xmax, 0 <= b <= ymax.
class HilbertTable {
public:
    explicit HilbertTable(Bidegree box)
        : box_(box), values_(static_cast<std::size_t>((box.x + 1) * (box.y + 1)), 0)
    { }

    Bidegree box() const noexcept { return box_; }

    long at(int a, int b) const { return values_.at(index(a, b)); }
    long& at(int a, int b) { return values_.at(index(a, b)); }

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

private:
    std::size_t index(int a, int b) const
    {
        return static_cast<std::size_t>(a * (box_.y + 1) + b);
    }

    Bidegree box_;
    std::vector<long> values_;
};

/// Distinct affine coordinates for the R_i (x-ruling) and Q_j (y-ruling),
/// drawn deterministically from the seed.
struct GridParameters {
    std::vector<std::uint64_t> rows;
    std::vector<std::uint64_t> cols;
};

inline GridParameters draw_parameters(int grid_rows, int grid_cols, const OracleConfig& cfg)
{
    const PrimeField field(cfg.prime);
    std::mt19937_64 engine(cfg.seed);
    constexpr int max_redraws = 1000;

    auto draw = [&](int count) {
        std::vector<std::uint64_t> out;
        int redraws = 0;
        while (static_cast<int>(out.size()) < count) {
            const std::uint64_t v = engine() % field.modulus();
            if (std::find(out.begin(), out.end(), v) != out.end()) {
                if (++redraws > max_redraws) {
                    throw error(errc::parameter_collision,
                                "could not draw distinct parameters; choose another seed");
                }
                continue;
            }
            out.push_back(v);
        }
        return out;
    };
    GridParameters params;
    params.rows = draw(grid_rows);
    params.cols = draw(grid_cols);
    return params;
}

namespace detail {

// Monomial s^i t^j of the affine chart x0 = y0 = 1 sits at column i*(b+1)+j
// of S_{(a,b)}.
inline std::size_t monomial_index(int i, int j, int b)
{
    return static_cast<std::size_t>(i * (b + 1) + j);
}

inline std::vector<std::uint64_t> powers(std::uint64_t base, int n, const PrimeField& f)
{
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k <= n; ++k) {
        out[static_cast<std::size_t>(k)] = f.mul(out[static_cast<std::size_t>(k - 1)], base);
    }
    return out;
}

} // namespace detail

/// Linear conditions on S_{(a,b)} for membership in I_Z. A simple point
/// imposes vanishing of the value; a double point additionally of both
/// first partials in the affine chart, i.e. membership in (L_R, L_Q)^2.
inline ModMatrix condition_matrix(const FatPointScheme& z, const GridParameters& params, int a, int b,
                                  const PrimeField& field)
{
    const std::size_t n = static_cast<std::size_t>((a + 1) * (b + 1));
    ModMatrix m(0, n);
    for (int i = 1; i <= z.rows(); ++i) {
        const auto rp = detail::powers(params.rows[static_cast<std::size_t>(i - 1)], a, field);
        for (int j = 1; j <= z.cols(); ++j) {
            const int mult = z.mult(i, j);
            if (mult == 0) {
                continue;
            }
            const auto qp = detail::powers(params.cols[static_cast<std::size_t>(j - 1)], b, field);
            std::vector<std::uint64_t> value(n, 0);
            for (int p = 0; p <= a; ++p) {
                for (int q = 0; q <= b; ++q) {
                    value[detail::monomial_index(p, q, b)]
                        = field.mul(rp[static_cast<std::size_t>(p)], qp[static_cast<std::size_t>(q)]);
                }
            }
            m.append_row(value);
            if (mult < 2) {
                continue;
            }
            std::vector<std::uint64_t> ds(n, 0);
            std::vector<std::uint64_t> dt(n, 0);
            for (int p = 0; p <= a; ++p) {
                for (int q = 0; q <= b; ++q) {
                    if (p > 0) {
                        ds[detail::monomial_index(p, q, b)] = field.mul(
                            static_cast<std::uint64_t>(p),
                            field.mul(rp[static_cast<std::size_t>(p - 1)], qp[static_cast<std::size_t>(q)]));
                    }
                    if (q > 0) {
                        dt[detail::monomial_index(p, q, b)] = field.mul(
                            static_cast<std::uint64_t>(q),
                            field.mul(rp[static_cast<std::size_t>(p)], qp[static_cast<std::size_t>(q - 1)]));
                    }
                }
            }
            m.append_row(ds);
            m.append_row(dt);
        }
    }
    return m;
}

/// dim_k (S/I_Z)_{(a,b)} over the whole box, as the rank of the conditions.
inline HilbertTable hilbert_function(const FatPointScheme& z, const OracleConfig& cfg)
{
    validate(cfg);
    const PrimeField field(cfg.prime);
    const Bidegree box = cfg.box.value_or(default_box(z.rows(), z.cols()));
    const auto params = draw_parameters(z.rows(), z.cols(), cfg);
    HilbertTable table(box);
    for (int a = 0; a <= box.x; ++a) {
        for (int b = 0; b <= box.y; ++b) {
            table.at(a, b) = static_cast<long>(rank(condition_matrix(z, params, a, b, field), field));
        }
    }
    return table;
}

/// Hilbert function of S/I predicted by the shifts of a resolution of I.
inline HilbertTable hilbert_from_resolution(const FreeResolution& res, Bidegree box)
{
    auto free_rank = [](int p, int q) -> long { return p >= 0 && q >= 0 ? long{p + 1} * (q + 1) : 0; };
    HilbertTable table(box);
    for (int a = 0; a <= box.x; ++a) {
        for (int b = 0; b <= box.y; ++b) {
            long n = free_rank(a, b);
            for (const auto& d : res.s0.entries()) {
                n -= free_rank(a - d.x, b - d.y);
            }
            for (const auto& d : res.s1.entries()) {
                n += free_rank(a - d.x, b - d.y);
            }
            for (const auto& d : res.s2.entries()) {
                n -= free_rank(a - d.x, b - d.y);
            }
            table.at(a, b) = n;
        }
    }
    return table;
}

/// Number of minimal generators of I_Z in each bidegree of the box:
/// dim I_{(a,b)} minus the dimension of the part generated from I_{(a-1,b)}
/// and I_{(a,b-1)}.
inline HilbertTable minimal_generator_counts(const FatPointScheme& z, const OracleConfig& cfg)
{
    validate(cfg);
    const PrimeField field(cfg.prime);
    const Bidegree box = cfg.box.value_or(default_box(z.rows(), z.cols()));
    const auto params = draw_parameters(z.rows(), z.cols(), cfg);

    // kernels[a][b] is a basis of I_{(a,b)} in the affine monomial basis.
    using Basis = std::vector<std::vector<std::uint64_t>>;
    std::vector<std::vector<Basis>> kernels(static_cast<std::size_t>(box.x + 1),
                                            std::vector<Basis>(static_cast<std::size_t>(box.y + 1)));
    HilbertTable counts(box);
    for (int a = 0; a <= box.x; ++a) {
        for (int b = 0; b <= box.y; ++b) {
            auto& here = kernels[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            here = kernel(condition_matrix(z, params, a, b, field), field);

            const std::size_t n = static_cast<std::size_t>((a + 1) * (b + 1));
            ModMatrix generated(0, n);
            if (a > 0) {
                // x0 * g keeps the affine polynomial, x1 * g multiplies it by s.
                for (const auto& g : kernels[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)]) {
                    std::vector<std::uint64_t> same(n, 0);
                    std::vector<std::uint64_t> shifted(n, 0);
                    for (int p = 0; p < a; ++p) {
                        for (int q = 0; q <= b; ++q) {
                            const auto c = g[detail::monomial_index(p, q, b)];
                            same[detail::monomial_index(p, q, b)] = c;
                            shifted[detail::monomial_index(p + 1, q, b)] = c;
                        }
                    }
                    generated.append_row(same);
                    generated.append_row(shifted);
                }
            }
            if (b > 0) {
                for (const auto& g : kernels[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)]) {
                    std::vector<std::uint64_t> same(n, 0);
                    std::vector<std::uint64_t> shifted(n, 0);
                    for (int p = 0; p <= a; ++p) {
                        for (int q = 0; q < b; ++q) {
                            const auto c = g[detail::monomial_index(p, q, b - 1)];
                            same[detail::monomial_index(p, q, b)] = c;
                            shifted[detail::monomial_index(p, q + 1, b)] = c;
                        }
                    }
                    generated.append_row(same);
                    generated.append_row(shifted);
                }
            }
            const auto spanned = generated.rows() == 0 ? 0 : rank(std::move(generated), field);
            counts.at(a, b) = static_cast<long>(here.size()) - static_cast<long>(spanned);
        }
        if (a > 0) {
            kernels[static_cast<std::size_t>(a - 1)].clear();
        }
    }
    return counts;
}

/// True iff the product of ruling forms described by `form` lies in I_Z:
/// the form is expanded into monomials and pushed through the conditions.
inline bool form_in_ideal(const FatPointScheme& z, const FormExponents& form, const OracleConfig& cfg)
{
    validate(cfg);
    const PrimeField field(cfg.prime);
    const auto params = draw_parameters(z.rows(), z.cols(), cfg);

    // Coefficients of Π (s - ρ_k)^{e_k} in s, then likewise in t.
    auto expand = [&](const std::vector<int>& exps, const std::vector<std::uint64_t>& roots) {
        std::vector<std::uint64_t> poly{1};
        for (std::size_t k = 0; k < exps.size(); ++k) {
            for (int e = 0; e < exps[k]; ++e) {
                std::vector<std::uint64_t> next(poly.size() + 1, 0);
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    next[d + 1] = field.add(next[d + 1], poly[d]);
                    next[d] = field.sub(next[d], field.mul(roots[k], poly[d]));
                }
                poly = std::move(next);
            }
        }
        return poly;
    };
    if (form.rexp.size() > params.rows.size() || form.qexp.size() > params.cols.size()) {
        throw error(errc::malformed_scheme, "form refers to more ruling lines than the grid has");
    }
    const auto ps = expand(form.rexp, params.rows);
    const auto pt = expand(form.qexp, params.cols);
    const int a = static_cast<int>(ps.size()) - 1;
    const int b = static_cast<int>(pt.size()) - 1;

    const auto conditions = condition_matrix(z, params, a, b, field);
    for (std::size_t i = 0; i < conditions.rows(); ++i) {
        std::uint64_t acc = 0;
        for (int p = 0; p <= a; ++p) {
            for (int q = 0; q <= b; ++q) {
                const auto coeff = field.mul(ps[static_cast<std::size_t>(p)], pt[static_cast<std::size_t>(q)]);
                acc = field.add(acc, field.mul(coeff, conditions.at(i, detail::monomial_index(p, q, b))));
            }
        }
        if (acc != 0) {
            return false;
        }
    }
    return true;
}

struct Mismatch {
    enum class Kind { hilbert, generators };
    Kind kind = Kind::hilbert;
    Bidegree bidegree;
    long oracle = 0;
    long resolution = 0;
};

struct VerificationReport {
    Partition lambda;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    Bidegree box;
    bool pass = false;
    bool deep = false;
    std::vector<Mismatch> mismatches;
};

/// Compares the engine's resolution of the double points on λ with the
/// brute-force Hilbert function (and, when deep, generator counts).
inline VerificationReport verify(const Partition& lambda, const FreeResolution& res, const OracleConfig& cfg,
                                 bool deep)
{
    validate(cfg);
    const auto z = double_points_of(lambda);
    const Bidegree box = cfg.box.value_or(default_box(z.rows(), z.cols()));
    for (int k = 0; k < 3; ++k) {
        for (const auto& d : res.module(k).entries()) {
            if (d.x + 1 > box.x || d.y + 1 > box.y) {
                throw error(errc::box_too_small, "box " + to_string(box) + " does not cover shift "
                                                     + to_string(d) + " with margin 1");
            }
        }
    }
    OracleConfig boxed = cfg;
    boxed.box = box;

    VerificationReport report{lambda, cfg.prime, cfg.seed, box, true, deep, {}};
    const auto oracle = hilbert_function(z, boxed);
    const auto predicted = hilbert_from_resolution(res, box);
    for (int a = 0; a <= box.x; ++a) {
        for (int b = 0; b <= box.y; ++b) {
            if (oracle.at(a, b) != predicted.at(a, b)) {
                report.mismatches.push_back(
                    {Mismatch::Kind::hilbert, {a, b}, oracle.at(a, b), predicted.at(a, b)});
            }
        }
    }
    if (deep) {
        const auto counts = minimal_generator_counts(z, boxed);
        HilbertTable expected(box);
        for (const auto& d : res.s0.entries()) {
            ++expected.at(d.x, d.y);
        }
        for (int a = 0; a <= box.x; ++a) {
            for (int b = 0; b <= box.y; ++b) {
                if (counts.at(a, b) != expected.at(a, b)) {
                    report.mismatches.push_back(
                        {Mismatch::Kind::generators, {a, b}, counts.at(a, b), expected.at(a, b)});
                }
            }
        }
    }
    report.pass = report.mismatches.empty();
    return report;
}

inline VerificationReport verify(const Partition& lambda, const OracleConfig& cfg, bool deep)
{
    return verify(lambda, resolve(lambda), cfg, deep);
}

} // namespace dblpt
