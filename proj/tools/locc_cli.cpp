// Copyright 2026 The locc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "locc/certify.hpp"
#include "locc/copies.hpp"
#include "locc/report.hpp"
#include "locc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;

struct CheckOptions {
    std::string psi_file;
    std::string phi_file;
    std::vector<unsigned> ks{1};
    std::string mode = "rational";
    bool embed = false;
    std::string format = "text";
    std::size_t max_entries = locc::kDefaultMaxTensorEntries;
};

template <locc::SpectrumScalar T>
locc::BasicSpectrum<T> read_single(const std::string &path) {
    auto spectra = locc::read_spectra_file<T>(path);
    if (spectra.size() != 1) {
        throw locc::Error(
            locc::ErrorKind::ParseError,
            "'" + path + "' must contain exactly one spectrum, found " + std::to_string(spectra.size()));
    }
    return std::move(spectra.front());
}

template <locc::SpectrumScalar T>
int run_check(const CheckOptions &opt) {
    auto psi = read_single<T>(opt.psi_file);
    auto phi = read_single<T>(opt.phi_file);
    if (psi.dimension() != phi.dimension()) {
        if (!opt.embed) {
            std::cerr << "error: dimension mismatch (" << psi.dimension() << " vs " << phi.dimension()
                      << "); pass --embed to zero-pad the smaller spectrum\n";
            return kExitUsage;
        }
        std::size_t d = std::max(psi.dimension(), phi.dimension());
        psi = locc::embed(psi, d);
        phi = locc::embed(phi, d);
    }
    auto pair = locc::make_state_pair(std::move(psi), std::move(phi));
    locc::TensorPowerLimits limits{opt.max_entries};
    for (unsigned k : opt.ks) {
        locc::tensor_power_length(pair.dimension(), k, limits);
    }
    auto verdicts = locc::copy_verdicts(pair, std::span<const unsigned>(opt.ks), limits);

    if (opt.format == "json") {
        std::cout << locc::to_json(verdicts, locc::BasicSpectrum<T>::mode).dump(2) << '\n';
    } else {
        std::cout << "mode: " << opt.mode << "  d=" << pair.dimension()
                  << "  necessary condition: " << (locc::necessary_condition(pair) ? "holds" : "fails") << '\n';
        std::cout << "k  transformable  first_violation\n";
        for (const auto &[k, v] : verdicts.per_k) {
            std::cout << std::left << std::setw(3) << k << std::setw(15) << (v.holds ? "yes" : "no")
                      << (v.first_violation ? std::to_string(*v.first_violation) : "-") << '\n';
        }
    }
    return verdicts.all_hold() ? kExitOk : kExitPropertyFails;
}

int run_verify_paper(const std::string &fixtures_file, const std::string &format) {
    auto fixtures = fixtures_file.empty() ? locc::published_counterexamples() : locc::read_fixtures_file(fixtures_file);
    auto cert = locc::certify(fixtures);

    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : cert.checks) {
            nlohmann::json item = {{"fixture", c.fixture}, {"property", c.property}, {"passed", c.passed}};
            if (c.verdict && c.verdict->first_violation) {
                item["first_violation"] = *c.verdict->first_violation;
            }
            if (c.violation_gap) {
                item["violation_gap"] = locc::to_string(*c.violation_gap);
            }
            if (c.float_agrees) {
                item["float_agrees"] = *c.float_agrees;
            }
            checks.push_back(item);
        }
        nlohmann::json doc = {
            {"schema_version", locc::kReportSchemaVersion},
            {"kind", "certification"},
            {"mode", "rational"},
            {"all_passed", cert.all_passed()},
            {"checks", checks},
        };
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "exact rational certification\n";
        std::cout << std::left << std::setw(10) << "fixture" << std::setw(22) << "check" << std::setw(8) << "result"
                  << std::setw(12) << "violation" << std::setw(22) << "prefix gap"
                  << "float agrees\n";
        for (const auto &c : cert.checks) {
            std::string violation =
                c.verdict && c.verdict->first_violation ? "m=" + std::to_string(*c.verdict->first_violation) : "-";
            std::string gap = c.violation_gap ? locc::to_string(*c.violation_gap) : "-";
            std::string agrees = c.float_agrees ? (*c.float_agrees ? "yes" : "no") : "-";
            std::cout << std::left << std::setw(10) << c.fixture << std::setw(22) << c.property << std::setw(8)
                      << (c.passed ? "PASS" : "FAIL") << std::setw(12) << violation << std::setw(22) << gap << agrees
                      << '\n';
        }
        std::size_t passed = 0;
        for (const auto &c : cert.checks) {
            passed += c.passed;
        }
        std::cout << passed << "/" << cert.checks.size() << " checks passed\n";
    }
    return cert.all_passed() ? kExitOk : kExitPropertyFails;
}

struct SearchOptions {
    locc::SearchConfig cfg;
    std::string mode = "rational-confirm";
    std::string measure = "uniform-entries";
    std::string out;
    std::string format = "json";
    std::string pairs_out;
    unsigned threads = 1;
};

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw locc::Error(locc::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    }
    f << text;
}

int run_search(SearchOptions opt) {
    opt.cfg.mode = locc::parse_search_mode(opt.mode);
    opt.cfg.measure = locc::parse_measure(opt.measure);
    opt.cfg.validate();
    unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;

    auto report = locc::run_search(opt.cfg, threads);
    if (opt.format == "csv") {
        write_text(opt.out, locc::to_csv(report));
    } else {
        write_text(opt.out, locc::to_json(report).dump(2) + "\n");
    }
    if (!opt.pairs_out.empty()) {
        write_text(opt.pairs_out, locc::format_counterexample_pairs(report));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact LOCC transformability of bipartite pure states and multi-copy counterexample search"};
    app.require_subcommand(1);

    CheckOptions check;
    auto *check_cmd = app.add_subcommand("check", "Decide |psi>^k -> |phi>^k for each requested k");
    check_cmd->add_option("psi_file", check.psi_file, "Source spectrum file")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("phi_file", check.phi_file, "Target spectrum file")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("-k,--k", check.ks, "Copy counts (comma separated)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_cmd->add_option("--mode", check.mode, "Arithmetic")
        ->check(CLI::IsMember({"float", "rational"}))
        ->capture_default_str();
    check_cmd->add_flag("--embed", check.embed, "Zero-pad the smaller spectrum to equal dimension");
    check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    check_cmd->add_option("--max-entries", check.max_entries, "Tensor power size cap")->capture_default_str();

    std::string fixtures_file;
    std::string verify_format = "text";
    auto *verify_cmd = app.add_subcommand("verify-paper", "Certify the published counterexamples exactly");
    verify_cmd->add_option("--fixtures", fixtures_file, "Alternative psi/phi fixture pairs to certify")
        ->check(CLI::ExistingFile);
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    SearchOptions search;
    auto *search_cmd = app.add_subcommand("search", "Monte Carlo search for multi-copy counterexamples");
    search_cmd->add_option("--dim", search.cfg.d, "Dimension d")->capture_default_str();
    search_cmd->add_option("--samples", search.cfg.samples, "Number of sampled pairs")->capture_default_str();
    search_cmd->add_option("--seed", search.cfg.seed, "64-bit seed")->capture_default_str();
    search_cmd->add_option("--k-success", search.cfg.k_success)->capture_default_str();
    search_cmd->add_option("--k-fail", search.cfg.k_fail)->capture_default_str();
    search_cmd->add_option("--mode", search.mode)
        ->check(CLI::IsMember({"float", "rational-confirm"}))
        ->capture_default_str();
    search_cmd->add_option("--measure", search.measure, "Spectrum sampling measure")
        ->check(CLI::IsMember({"uniform-entries", "flat-dirichlet"}))
        ->capture_default_str();
    search_cmd->add_option("--out", search.out, "Report path (default stdout)");
    search_cmd->add_option("--format", search.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    search_cmd->add_option("--pairs-out", search.pairs_out, "Write counterexample pairs in spectrum text format");
    search_cmd->add_option("--max-store", search.cfg.max_counterexamples_stored)->capture_default_str();
    search_cmd->add_option("--max-entries", search.cfg.max_tensor_entries, "Tensor power size cap")
        ->capture_default_str();
    search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check_cmd->parsed()) {
            return check.mode == "float" ? run_check<double>(check) : run_check<locc::Rational>(check);
        }
        if (verify_cmd->parsed()) {
            return run_verify_paper(fixtures_file, verify_format);
        }
        if (search_cmd->parsed()) {
            return run_search(search);
        }
    } catch (const locc::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
