// Command line front end: compute, inspect, verify and sweep resolutions of
// double points with ACM support in P1 x P1.

#include "dblpt/dblpt.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using dblpt::Json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_verification_failed = 2;

struct Options {
    std::vector<int> lambda;
    bool json = false;
    std::string out;
    std::uint64_t prime = dblpt::default_prime;
    std::uint64_t seed = 0;
    std::vector<int> box;
    bool deep = false;
    int max_rows = 0;
    int max_width = 0;
    bool verify = false;
    std::string resolution_file;
};

dblpt::OracleConfig oracle_config(const Options& o)
{
    dblpt::OracleConfig cfg;
    cfg.prime = o.prime;
    cfg.seed = o.seed;
    if (!o.box.empty()) {
        if (o.box.size() != 2) {
            throw dblpt::error(dblpt::errc::box_too_small, "--box expects A,B");
        }
        cfg.box = dblpt::Bidegree{o.box[0], o.box[1]};
    }
    return cfg;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Result {
    std::string text;
    int code = exit_ok;
};

Result cmd_resolve(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto res = dblpt::resolve(lambda);
    if (o.json) {
        return {dump(dblpt::to_json(lambda, res))};
    }
    std::ostringstream out;
    out << "lambda " << dblpt::to_string(lambda) << "\n\n"
        << dblpt::render_resolution(res) << '\n'
        << dblpt::render_betti_table(res);
    return {out.str()};
}

Result cmd_completion(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto y = dblpt::completion_scheme(lambda);
    const auto alpha = dblpt::completion_alpha(lambda);
    const auto res = dblpt::completion_resolution(lambda);
    if (o.json) {
        auto j = dblpt::to_json(lambda, res);
        j["alpha"] = alpha.parts();
        j["scheme"] = dblpt::to_json(y);
        return {dump(j)};
    }
    std::ostringstream out;
    out << "lambda " << dblpt::to_string(lambda) << "\n";
    out << "completion (2 = double point, 1 = simple point)\n";
    for (const auto& row : y.matrix()) {
        for (int m : row) {
            out << "  " << m;
        }
        out << '\n';
    }
    out << "alpha_Y " << dblpt::to_string(alpha) << "\n\n" << dblpt::render_resolution(res);
    return {out.str()};
}

Result cmd_corners(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto base = dblpt::base_corners(lambda);
    const auto all = dblpt::corners(lambda);
    const auto outside = dblpt::outside_corners(lambda);
    const auto mz = dblpt::degree_matrix_z(lambda);
    const auto my = dblpt::degree_matrix_y(lambda);
    if (o.json) {
        Json j{{"lambda", lambda.parts()},
               {"degree_matrix_z", mz.to_rows()},
               {"degree_matrix_y", my.to_rows()},
               {"base_corners", dblpt::to_json(base)},
               {"corners", dblpt::to_json(all)},
               {"outside_corners", dblpt::to_json(outside)},
               {"forms_z", dblpt::to_json(dblpt::generator_exponents_z(lambda))},
               {"generators_y", dblpt::to_json(dblpt::generator_exponents_y(lambda))}};
        return {dump(j)};
    }
    std::ostringstream out;
    out << "lambda " << dblpt::to_string(lambda) << "\n\n";
    out << "degree matrix of Z, corners bracketed\n" << dblpt::render_matrix(mz, all) << '\n';
    out << "degree matrix of Y, outside corners bracketed\n" << dblpt::render_matrix(my, outside) << '\n';
    out << "base corners    " << dblpt::render_corner_list(base) << '\n';
    out << "corners         " << dblpt::render_corner_list(all) << '\n';
    out << "outside corners " << dblpt::render_corner_list(outside) << '\n';
    return {out.str()};
}

Result cmd_ledger(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto ledger = dblpt::corner_ledger(lambda);
    if (o.json) {
        return {dump(dblpt::to_json(ledger))};
    }
    std::ostringstream out;
    out << "lambda " << dblpt::to_string(lambda) << "\n\n" << dblpt::render_ledger(ledger);
    return {out.str()};
}

Result cmd_steps(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto ledger = dblpt::corner_ledger(lambda);
    const auto steps = dblpt::resolve_steps(lambda, ledger);
    if (o.json) {
        Json arr = Json::array();
        for (std::size_t k = 0; k < steps.size(); ++k) {
            auto j = dblpt::to_json(lambda, steps[k]);
            j.erase("lambda");
            Json entry{{"step", k}};
            if (k == 0) {
                entry["corner"] = nullptr;
                entry["colon_type"] = nullptr;
            } else {
                const auto& e = ledger[k - 1];
                entry["corner"] = dblpt::to_json(e.corner);
                entry["colon_type"] = Json::array({e.a, e.b});
            }
            entry.update(j);
            arr.push_back(std::move(entry));
        }
        return {dump(Json{{"lambda", lambda.parts()}, {"steps", std::move(arr)}})};
    }
    std::ostringstream out;
    out << "lambda " << dblpt::to_string(lambda) << '\n';
    for (std::size_t k = 0; k < steps.size(); ++k) {
        out << "\nstep " << k;
        if (k == 0) {
            out << ": completion\n";
        } else {
            const auto& e = ledger[k - 1];
            out << ": corner " << dblpt::to_string(e.corner) << ", colon ideal CI(" << e.a << "," << e.b << ")\n";
        }
        out << dblpt::render_resolution(steps[k]);
    }
    return {out.str()};
}

Result cmd_verify(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    dblpt::FreeResolution res;
    if (o.resolution_file.empty()) {
        res = dblpt::resolve(lambda);
    } else {
        std::ifstream in(o.resolution_file);
        if (!in) {
            throw dblpt::error(dblpt::errc::empty_input, "cannot read " + o.resolution_file);
        }
        Json j;
        try {
            j = Json::parse(in);
            res = dblpt::resolution_from_json(j);
        } catch (const Json::exception& e) {
            throw dblpt::error(dblpt::errc::empty_input, o.resolution_file + ": " + e.what());
        }
    }
    const auto report = dblpt::verify(lambda, res, oracle_config(o), o.deep);
    const int code = report.pass ? exit_ok : exit_verification_failed;
    if (o.json) {
        return {dump(dblpt::to_json(report)), code};
    }
    return {dblpt::render_report(report), code};
}

Result cmd_romer(const Options& o)
{
    const auto lambda = dblpt::Partition::from(o.lambda);
    const auto report = dblpt::romer_check(lambda);
    if (o.json) {
        return {dump(dblpt::to_json(lambda, report))};
    }
    return {dblpt::render_romer(lambda, report)};
}

Result cmd_enumerate(const Options& o)
{
    if (o.max_rows < 1 || o.max_width < 1) {
        throw dblpt::error(dblpt::errc::empty_input, "--max-rows and --max-width must be at least 1");
    }
    const auto cfg = oracle_config(o);
    Json arr = Json::array();
    std::ostringstream out;
    bool all_pass = true;
    std::size_t count = 0;
    for (const auto& lambda : dblpt::enumerate_partitions(o.max_rows, o.max_width)) {
        const auto res = dblpt::resolve(lambda);
        const auto betti = dblpt::betti_totals(lambda);
        Json entry{{"lambda", lambda.parts()},
                   {"d", dblpt::descent_count(lambda)},
                   {"betti", Json::array({res.s0.size(), res.s1.size(), res.s2.size()})}};
        bool ok = res.rank_balanced() && res.shift_sums_balanced()
                  && betti == dblpt::BettiTotals{static_cast<long>(res.s0.size()),
                                                 static_cast<long>(res.s1.size()),
                                                 static_cast<long>(res.s2.size())};
        entry["consistent"] = ok;
        if (o.verify) {
            const auto report = dblpt::verify(lambda, res, cfg, o.deep);
            entry["verified"] = report.pass;
            ok = ok && report.pass;
        }
        all_pass = all_pass && ok;
        ++count;
        out << std::left << std::setw(24) << dblpt::to_string(lambda) << " d=" << dblpt::descent_count(lambda)
            << "  betti " << res.s0.size() << " " << res.s1.size() << " " << res.s2.size()
            << (o.verify ? "  verify " : "  check ") << (ok ? "ok" : "FAILED") << '\n';
        arr.push_back(std::move(entry));
    }
    out << count << " partitions, " << (all_pass ? "all passed" : "FAILURES") << '\n';
    const int code = all_pass ? exit_ok : exit_verification_failed;
    if (o.json) {
        return {dump(Json{{"partitions", std::move(arr)}, {"pass", all_pass}}), code};
    }
    return {out.str(), code};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bigraded minimal free resolutions of double points with ACM support in P1 x P1"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_lambda) {
        auto* opt = sub->add_option("--lambda", o.lambda, "partition, comma separated (e.g. 6,5,3,1,1)")
                        ->delimiter(',');
        if (needs_lambda) {
            opt->required();
        }
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--out", o.out, "write output to FILE instead of stdout");
    };
    auto add_oracle = [&](CLI::App* sub) {
        sub->add_option("--prime", o.prime, "prime modulus for the oracle")->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for the point parameters")->capture_default_str();
        sub->add_option("--box", o.box, "verification box corner A,B")->delimiter(',');
        sub->add_flag("--deep", o.deep, "also compare minimal generator counts");
    };

    std::vector<std::pair<CLI::App*, Result (*)(const Options&)>> commands;
    auto* resolve = app.add_subcommand("resolve", "shifts of the minimal free resolution of I_Z");
    add_common(resolve, true);
    commands.emplace_back(resolve, cmd_resolve);
    auto* completion = app.add_subcommand("completion", "completion Y and its resolution");
    add_common(completion, true);
    commands.emplace_back(completion, cmd_completion);
    auto* corner = app.add_subcommand("corners", "degree matrices, corners and outside corners");
    add_common(corner, true);
    commands.emplace_back(corner, cmd_corners);
    auto* ledger = app.add_subcommand("ledger", "u, v, a, b for every corner");
    add_common(ledger, true);
    commands.emplace_back(ledger, cmd_ledger);
    auto* steps = app.add_subcommand("steps", "intermediate resolutions of I_0 = I_Y, ..., I_p = I_Z");
    add_common(steps, true);
    commands.emplace_back(steps, cmd_steps);
    auto* verify = app.add_subcommand("verify", "check the resolution against the Hilbert function oracle");
    add_common(verify, true);
    add_oracle(verify);
    verify->add_option("--resolution", o.resolution_file, "check shifts from a resolution JSON file instead");
    commands.emplace_back(verify, cmd_verify);
    auto* romer = app.add_subcommand("romer", "Betti totals, maximal shifts and the Romer bound");
    add_common(romer, true);
    commands.emplace_back(romer, cmd_romer);
    auto* enumerate = app.add_subcommand("enumerate", "sweep every partition inside a box");
    add_common(enumerate, false);
    add_oracle(enumerate);
    enumerate->add_option("--max-rows", o.max_rows, "largest number of parts")->required();
    enumerate->add_option("--max-width", o.max_width, "largest part")->required();
    enumerate->add_flag("--verify", o.verify, "run the oracle on every partition");
    commands.emplace_back(enumerate, cmd_enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        Result result;
        for (const auto& [sub, run] : commands) {
            if (sub->parsed()) {
                result = run(o);
            }
        }
        if (o.out.empty()) {
            std::cout << result.text;
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) {
                std::cerr << "cannot open " << o.out << " for writing\n";
                return exit_invalid;
            }
            file << result.text;
        }
        return result.code;
    } catch (const dblpt::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
