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
#include "sqs/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqs/bitstring.hpp"
#include "sqs/errors.hpp"

namespace sqs {

using nlohmann::json;

namespace {

const char *kind_name(GateKind k) {
    switch (k) {
    case GateKind::Identity:
        return "i";
    case GateKind::PauliX:
        return "x";
    case GateKind::PauliZ:
        return "z";
    case GateKind::Hadamard:
        return "h";
    case GateKind::RotY:
        return "ry";
    case GateKind::Unitary:
        return "u";
    }
    return "?";
}

GateKind kind_from_name(const std::string &s) {
    if (s == "i") return GateKind::Identity;
    if (s == "x") return GateKind::PauliX;
    if (s == "z") return GateKind::PauliZ;
    if (s == "h") return GateKind::Hadamard;
    if (s == "ry") return GateKind::RotY;
    if (s == "u") return GateKind::Unitary;
    throw ParseError("unknown gate kind '" + s + "'");
}

json op_to_json(const GateOp &op) {
    json j;
    j["kind"] = kind_name(op.kind);
    j["targets"] = op.targets;
    json controls = json::array();
    for (const auto &c : op.controls) {
        controls.push_back({{"qubit", c.qubit}, {"value", c.value}});
    }
    j["controls"] = std::move(controls);
    if (op.kind == GateKind::RotY) {
        j["angle"] = op.angle;
    }
    if (op.kind == GateKind::Unitary) {
        json m = json::array();
        for (const auto &z : op.matrix) {
            m.push_back({z.real(), z.imag()});
        }
        j["matrix"] = std::move(m);
    }
    return j;
}

GateOp op_from_json(const json &j) {
    GateOp op;
    op.kind = kind_from_name(j.at("kind").get<std::string>());
    op.targets = j.at("targets").get<std::vector<int>>();
    if (j.contains("controls")) {
        for (const auto &c : j.at("controls")) {
            op.controls.push_back(Control{c.at("qubit").get<int>(), c.at("value").get<int>()});
        }
    }
    if (op.kind == GateKind::RotY) {
        op.angle = j.at("angle").get<double>();
    }
    if (op.kind == GateKind::Unitary) {
        for (const auto &z : j.at("matrix")) {
            if (!z.is_array() || z.size() != 2) {
                throw ParseError("matrix entries must be [re, im] pairs");
            }
            op.matrix.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    return op;
}

} // namespace

std::string circuit_to_json(const Circuit &circuit) {
    json ops = json::array();
    for (const auto &op : circuit.ops) {
        ops.push_back(op_to_json(op));
    }
    json j;
    j["num_qubits"] = circuit.num_qubits;
    j["ops"] = std::move(ops);
    return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string &text) {
    Circuit c;
    try {
        const json j = json::parse(text);
        c.num_qubits = j.at("num_qubits").get<int>();
        for (const auto &op : j.at("ops")) {
            c.ops.push_back(op_from_json(op));
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
    validate_circuit(c);
    return c;
}

std::vector<std::string> parse_dataset_text(const std::string &text) {
    std::vector<std::string> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        std::string bits = line.substr(first, last - first + 1);
        if (!is_bitstring(bits)) {
            throw ParseError("dataset line " + std::to_string(lineno) + ": '" + bits +
                             "' is not a bitstring");
        }
        entries.push_back(std::move(bits));
    }
    return entries;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + tmp.string());
        }
        out << contents;
        if (!out) {
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace sqs
