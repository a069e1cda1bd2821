// Copyright 2026 The sqsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// sqs: encode datasets, build entanglement maps, run searches and benchmarks.
//
// Exit codes: 0 found/ok, 1 internal error, 2 input or encoding error,
// 3 target not found, 4 unsupported preparation angle.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqs/bench_table.hpp"
#include "sqs/circuit_io.hpp"
#include "sqs/emap.hpp"
#include "sqs/encoding.hpp"
#include "sqs/engine.hpp"
#include "sqs/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitAngle = 4;

namespace fs = std::filesystem;

sqs::Dataset load_dataset(const std::string &path) {
    return sqs::make_dataset(sqs::parse_dataset_text(sqs::read_file(path)));
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        sqs::write_file_atomic(path, text);
    }
}

/// Parses "2,3,4", "2..6" or a mix such as "2..4,8".
std::vector<int> parse_n_list(const std::string &text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) {
            continue;
        }
        try {
            const auto dots = item.find("..");
            std::size_t used = 0;
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
                continue;
            }
            const int lo = std::stoi(item.substr(0, dots));
            const int hi = std::stoi(item.substr(dots + 2));
            for (int n = lo; n <= hi; ++n) {
                out.push_back(n);
            }
        } catch (const std::logic_error &) {
            throw sqs::ParseError("bad qubit count '" + item + "' in n list");
        }
    }
    return out;
}

struct EncodeArgs {
    std::string dataset;
    std::string out;
    std::string em_out;
};

int cmd_encode(const EncodeArgs &a) {
    const auto dataset = load_dataset(a.dataset);
    const auto circuit = sqs::encode(dataset);
    const auto em = sqs::build_entanglement_map(circuit);
    emit(a.out, sqs::circuit_to_json(circuit));
    std::string em_path = a.em_out;
    if (em_path.empty() && !a.out.empty() && a.out != "-") {
        em_path = fs::path(a.out).replace_extension(".em.json").string();
    }
    if (!em_path.empty()) {
        emit(em_path, sqs::em_to_json(em));
    }
    const auto counts = sqs::count_gates(circuit);
    std::cerr << "encoded " << dataset.entries.size() << " entries on " << circuit.num_qubits
              << " qubits: " << counts.total << " gates, " << em.num_rows() << " EM row(s)\n";
    return kExitOk;
}

struct SearchArgs {
    std::string dataset;
    std::string circuit;
    std::string target;
    std::string mode = "exact";
    std::size_t shots = 1024;
    std::uint64_t seed = 0;
    std::string backend = "auto";
    int dense_limit = sqs::kDefaultDenseLimit;
    std::string out;
};

int cmd_search(const SearchArgs &a) {
    if (a.dataset.empty() == a.circuit.empty()) {
        throw sqs::ParseError("give exactly one of --dataset or --circuit");
    }
    sqs::Circuit prep = a.circuit.empty() ? sqs::encode(load_dataset(a.dataset))
                                          : sqs::circuit_from_json(sqs::read_file(a.circuit));
    const auto problem = sqs::make_problem(std::move(prep), a.target);
    sqs::SearchOptions opt;
    opt.mode = a.mode == "sampled" ? sqs::BranchMode::Sampled : sqs::BranchMode::Exact;
    opt.shots = a.shots;
    opt.seed = a.seed;
    opt.backend = a.backend == "dense"      ? sqs::Backend::Dense
                  : a.backend == "factored" ? sqs::Backend::Factored
                                            : sqs::Backend::Auto;
    opt.dense_limit = a.dense_limit;
    const auto result = sqs::run_sqs(problem, opt);
    emit(a.out, sqs::result_to_json(result));
    std::cerr << (result.found ? "found" : "not found") << " '" << a.target << "' with "
              << result.oracle_calls << " oracle call(s)\n";
    return result.found ? kExitOk : kExitNotFound;
}

struct BenchArgs {
    std::string n_list;
    std::string scenario = "full";
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::string out;
    std::string plot_out;
};

int cmd_bench(const BenchArgs &a) {
    const auto rows =
        sqs::complexity_table(parse_n_list(a.n_list), sqs::parse_scenario(a.scenario), a.seed,
                              a.trials);
    emit(a.out, sqs::table_csv(rows));
    if (!a.plot_out.empty()) {
        emit(a.plot_out, sqs::plot_csv(rows));
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string circuit;
    std::string dataset;
};

int cmd_verify(const VerifyArgs &a) {
    const auto circuit = sqs::circuit_from_json(sqs::read_file(a.circuit));
    const auto dataset = load_dataset(a.dataset);
    const auto report = sqs::verify_encoding(circuit, dataset);
    for (const auto &s : report.missing) {
        std::cout << "missing " << s << "\n";
    }
    for (const auto &s : report.extra) {
        std::cout << "extra " << s << "\n";
    }
    for (const auto &s : report.doubled) {
        std::cout << "doubled " << s << " (p = " << report.profile.at(s) << ")\n";
    }
    std::cout << (report.ok ? "ok" : "mismatch") << "\n";
    return report.ok ? kExitOk : kExitInput;
}

struct EmapArgs {
    std::string circuit;
    std::string out;
};

int cmd_emap(const EmapArgs &a) {
    const auto circuit = sqs::circuit_from_json(sqs::read_file(a.circuit));
    emit(a.out, sqs::em_to_json(sqs::build_entanglement_map(circuit)));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Structured quantum search simulator"};
    app.require_subcommand(1);

    EncodeArgs enc;
    auto *encode = app.add_subcommand("encode", "Encode a dataset into a preparation circuit");
    encode->add_option("--dataset", enc.dataset, "Dataset file, one bitstring per line")
        ->required();
    encode->add_option("--out", enc.out, "Circuit JSON output (default stdout)");
    encode->add_option("--em-out", enc.em_out, "Entanglement map JSON output");

    SearchArgs srch;
    auto *search = app.add_subcommand("search", "Run the structured search");
    search->add_option("--dataset", srch.dataset, "Dataset file to encode and search");
    search->add_option("--circuit", srch.circuit, "Preparation circuit JSON");
    search->add_option("--target", srch.target, "Target bitstring")->required();
    search->add_option("--mode", srch.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    search->add_option("--shots", srch.shots, "Shots in sampled mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--seed", srch.seed, "Random seed")->capture_default_str();
    search->add_option("--backend", srch.backend, "dense, factored or auto")
        ->check(CLI::IsMember({"dense", "factored", "auto"}))
        ->capture_default_str();
    search->add_option("--dense-limit", srch.dense_limit, "Largest dense register in qubits")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    search->add_option("--out", srch.out, "Result JSON output (default stdout)");

    BenchArgs bch;
    auto *bench = app.add_subcommand("bench", "Emit the query-complexity table");
    bench->add_option("--n", bch.n_list, "Qubit counts, e.g. 2,3,4 or 2..6");
    bench->add_option("--scenario", bch.scenario, "full, two-row or chain")
        ->check(CLI::IsMember({"full", "two-row", "chain"}))
        ->capture_default_str();
    bench->add_option("--seed", bch.seed, "Random seed")->capture_default_str();
    bench->add_option("--trials", bch.trials, "Linear-scan trials per row")->capture_default_str();
    bench->add_option("--out", bch.out, "Table CSV output (default stdout)");
    bench->add_option("--plot-out", bch.plot_out, "Plot-data CSV output");

    VerifyArgs vfy;
    auto *verify = app.add_subcommand("verify", "Check a circuit against a dataset");
    verify->add_option("--circuit", vfy.circuit, "Circuit JSON")->required();
    verify->add_option("--dataset", vfy.dataset, "Dataset file")->required();

    EmapArgs em;
    auto *emap = app.add_subcommand("emap", "Build the entanglement map of a circuit");
    emap->add_option("--circuit", em.circuit, "Circuit JSON")->required();
    emap->add_option("--out", em.out, "EM JSON output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*encode) {
            return cmd_encode(enc);
        }
        if (*search) {
            return cmd_search(srch);
        }
        if (*bench) {
            return cmd_bench(bch);
        }
        if (*verify) {
            return cmd_verify(vfy);
        }
        if (*emap) {
            return cmd_emap(em);
        }
    } catch (const sqs::UnsupportedAngle &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAngle;
    } catch (const sqs::PartnerConflict &e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto &[a, b] : e.pairs()) {
            std::cerr << "  conflict: " << a << " " << b << "\n";
        }
        return kExitInput;
    } catch (const sqs::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
