// Copyright 2026 The floqmbl Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "floqmbl/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace floqmbl {

using nlohmann::json;

namespace {

class Locator {
  public:
    Locator(const std::string &text, std::string source)
        : text_(text), source_(std::move(source)) {}

    // Line of the first occurrence of "key", 0 when absent.
    [[nodiscard]] int line_of(const std::string &key) const {
        const auto pos = text_.find('"' + key + '"');
        if (pos == std::string::npos) {
            return 0;
        }
        return line_at(pos);
    }

    [[nodiscard]] int line_at(std::size_t byte) const {
        byte = std::min(byte, text_.size());
        return 1 + static_cast<int>(std::count(text_.begin(),
                                               text_.begin() + static_cast<long>(byte),
                                               '\n'));
    }

    [[noreturn]] void fail(const std::string &key,
                           const std::string &message) const {
        std::ostringstream out;
        out << source_;
        const int line = key.empty() ? 0 : line_of(key);
        if (line > 0) {
            out << ":" << line;
        }
        out << ": " << message;
        throw ConfigError(out.str());
    }

    [[nodiscard]] const std::string &source() const { return source_; }

  private:
    const std::string &text_;
    std::string source_;
};

class Reader {
  public:
    Reader(const json &obj, std::string path, const Locator &loc,
           std::string anchor)
        : obj_(obj), path_(std::move(path)), loc_(loc),
          anchor_(std::move(anchor)) {
        if (!obj_.is_object()) {
            loc_.fail(anchor_, "'" + display() + "' must be an object");
        }
    }

    [[nodiscard]] bool has(const std::string &key) const {
        return obj_.contains(key);
    }

    template <class T> std::optional<T> opt(const std::string &key) {
        used_.insert(key);
        if (!obj_.contains(key)) {
            return std::nullopt;
        }
        return convert<T>(obj_.at(key), key);
    }

    template <class T> T get(const std::string &key, T fallback) {
        auto v = opt<T>(key);
        return v ? *v : fallback;
    }

    template <class T> T require(const std::string &key) {
        auto v = opt<T>(key);
        if (!v) {
            loc_.fail(anchor_, "missing required field '" + field(key) + "'");
        }
        return *v;
    }

    Reader child(const std::string &key) {
        used_.insert(key);
        return Reader(obj_.at(key), field(key), loc_, key);
    }

    void finish() const {
        for (const auto &[key, value] : obj_.items()) {
            if (!used_.count(key)) {
                loc_.fail(key, "unknown field '" + field(key) + "'");
            }
        }
    }

    [[noreturn]] void fail(const std::string &key, const std::string &msg) const {
        loc_.fail(key, "field '" + field(key) + "': " + msg);
    }

  private:
    [[nodiscard]] std::string display() const {
        return path_.empty() ? "<root>" : path_;
    }
    [[nodiscard]] std::string field(const std::string &key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    template <class T> T convert(const json &v, const std::string &key) const {
        if constexpr (std::is_same_v<T, double>) {
            if (!v.is_number()) {
                fail(key, "expected a number");
            }
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                fail(key, "must be finite");
            }
            return d;
        } else if constexpr (std::is_same_v<T, int>) {
            if (!v.is_number_integer()) {
                fail(key, "expected an integer");
            }
            const auto i = v.get<long long>();
            if (i < INT32_MIN || i > INT32_MAX) {
                fail(key, "integer out of range");
            }
            return static_cast<int>(i);
        } else if constexpr (std::is_same_v<T, unsigned>) {
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                fail(key, "expected a nonnegative integer");
            }
            return static_cast<unsigned>(v.get<long long>());
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            if (!v.is_number_unsigned() &&
                !(v.is_number_integer() && v.get<long long>() >= 0)) {
                fail(key, "expected a nonnegative integer");
            }
            return v.get<std::uint64_t>();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) {
                fail(key, "expected a string");
            }
            return v.get<std::string>();
        } else if constexpr (std::is_same_v<T, std::vector<unsigned>>) {
            if (!v.is_array()) {
                fail(key, "expected an array of site indices");
            }
            std::vector<unsigned> out;
            for (const auto &e : v) {
                if (!e.is_number_integer() || e.get<long long>() < 0) {
                    fail(key, "expected an array of site indices");
                }
                out.push_back(static_cast<unsigned>(e.get<long long>()));
            }
            return out;
        } else if constexpr (std::is_same_v<T, ParamPoint>) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
                !v[1].is_number()) {
                fail(key, "expected [t0, theta0]");
            }
            return ParamPoint{v[0].get<double>(), v[1].get<double>()};
        } else {
            static_assert(sizeof(T) == 0, "unsupported config type");
        }
    }

    const json &obj_;
    std::string path_;
    const Locator &loc_;
    std::string anchor_;
    std::set<std::string> used_;
};

RunMode parse_mode(const std::string &name, Reader &r) {
    if (name == "dynamics") return RunMode::Dynamics;
    if (name == "scan") return RunMode::Scan;
    if (name == "randmeas") return RunMode::RandMeas;
    if (name == "validate") return RunMode::Validate;
    if (name == "export-qasm") return RunMode::ExportQasm;
    r.fail("mode", "unknown mode '" + name +
                       "' (expected dynamics, scan, randmeas, validate or "
                       "export-qasm)");
}

std::string block_name(RunMode mode) {
    switch (mode) {
    case RunMode::Dynamics: return "dynamics";
    case RunMode::Scan: return "scan";
    case RunMode::RandMeas: return "randmeas";
    case RunMode::Validate: return "validate";
    case RunMode::ExportQasm: return "export_qasm";
    }
    return {};
}

void require_positive(Reader &r, const std::string &key, int value) {
    if (value < 1) {
        r.fail(key, "must be >= 1");
    }
}

void check_op(Reader &r, const std::string &key, const std::string &op,
              unsigned num_qubits) {
    try {
        const PauliString p = PauliString::parse(op);
        if (p.min_qubits() > num_qubits) {
            r.fail(key, "operator '" + op + "' exceeds L = " +
                            std::to_string(num_qubits));
        }
    } catch (const std::invalid_argument &e) {
        r.fail(key, e.what());
    }
}

RunConfig parse_object(const json &doc, const Locator &loc) {
    Reader root(doc, "", loc, "");
    RunConfig cfg;
    cfg.mode = parse_mode(root.require<std::string>("mode"), root);
    cfg.seed = root.get<std::uint64_t>("seed", 0);
    cfg.output_dir = root.get<std::string>("output_dir", "out");
    if (cfg.output_dir.empty()) {
        root.fail("output_dir", "must not be empty");
    }

    if (!root.has("circuit")) {
        loc.fail("", "missing required field 'circuit' (with at least "
                     "'circuit.L')");
    }
    {
        Reader c = root.child("circuit");
        auto &circ = cfg.circuit;
        circ.num_qubits = c.require<unsigned>("L");
        if (circ.num_qubits < 2 || circ.num_qubits > kMaxQubits) {
            c.fail("L", "must be in [2, " + std::to_string(kMaxQubits) + "]");
        }
        circ.t0 = c.get<double>("t0", circ.t0);
        circ.theta0 = c.get<double>("theta0", circ.theta0);
        circ.t_modulation = c.get<double>("t_modulation", circ.t_modulation);
        circ.theta_modulation =
            c.get<double>("theta_modulation", circ.theta_modulation);
        circ.wavenumber = c.get<double>("wavenumber", circ.wavenumber);
        circ.jz = c.get<double>("jz", circ.jz);
        circ.phi = c.opt<double>("phi");
        c.finish();
    }
    const unsigned num_qubits = cfg.circuit.num_qubits;

    const std::string active = block_name(cfg.mode);
    for (const char *name :
         {"dynamics", "scan", "randmeas", "validate", "export_qasm"}) {
        if (name != active && root.has(name)) {
            loc.fail(name, std::string("block '") + name +
                               "' is not valid for mode '" +
                               to_string(cfg.mode) + "'");
        }
    }
    const bool has_block = root.has(active);
    const json empty = json::object();
    Reader b = has_block ? root.child(active) : Reader(empty, active, loc, "");

    switch (cfg.mode) {
    case RunMode::Dynamics: {
        auto &d = cfg.dynamics;
        d.op = b.get<std::string>("operator",
                                  central_bond_xx(num_qubits).to_string());
        check_op(b, "operator", d.op, num_qubits);
        d.n_steps = b.get<int>("n_steps", d.n_steps);
        require_positive(b, "n_steps", d.n_steps);
        break;
    }
    case RunMode::Scan: {
        auto &s = cfg.scan;
        s.start = b.get<ParamPoint>("start", s.start);
        s.end = b.get<ParamPoint>("end", s.end);
        s.num_points = b.get<int>("num_points", s.num_points);
        if (s.num_points < 2) {
            b.fail("num_points", "must be >= 2");
        }
        s.n_long = b.get<int>("n_long", s.n_long);
        s.n_short = b.get<int>("n_short", s.n_short);
        if (s.n_short < 4 || s.n_short > s.n_long) {
            b.fail("n_short", "need 4 <= n_short <= n_long");
        }
        s.num_phi = b.get<int>("num_phi", s.num_phi);
        require_positive(b, "num_phi", s.num_phi);
        s.op = b.get<std::string>("operator",
                                  central_bond_xx(num_qubits).to_string());
        check_op(b, "operator", s.op, num_qubits);
        break;
    }
    case RunMode::RandMeas: {
        auto &m = cfg.randmeas;
        m.op = b.get<std::string>("operator",
                                  central_bond_xx(num_qubits).to_string());
        check_op(b, "operator", m.op, num_qubits);
        std::vector<unsigned> all(num_qubits);
        for (unsigned q = 0; q < num_qubits; ++q) {
            all[q] = q;
        }
        m.flip_sites = b.get<std::vector<unsigned>>("flip_sites", all);
        m.num_unitaries = b.get<int>("num_unitaries", m.num_unitaries);
        require_positive(b, "num_unitaries", m.num_unitaries);
        m.n_steps = b.get<int>("n_steps", m.n_steps);
        require_positive(b, "n_steps", m.n_steps);
        try {
            m.variant = parse_variant(b.get<std::string>(
                "variant", std::string(to_string(m.variant))));
        } catch (const std::invalid_argument &e) {
            b.fail("variant", e.what());
        }
        try {
            RandomMeasConfig probe{num_qubits, *m.flip_sites, m.num_unitaries,
                                   m.n_steps, cfg.seed, m.variant};
            probe.validate();
        } catch (const std::invalid_argument &e) {
            b.fail("flip_sites", e.what());
        }
        break;
    }
    case RunMode::Validate: {
        auto &v = cfg.validate;
        if (num_qubits > kMaxDoubledQubits) {
            loc.fail("L", "validate mode needs L <= " +
                              std::to_string(kMaxDoubledQubits));
        }
        v.op = b.get<std::string>("operator",
                                  central_bond_xx(num_qubits).to_string());
        check_op(b, "operator", v.op, num_qubits);
        v.num_unitaries = b.get<int>("num_unitaries", v.num_unitaries);
        require_positive(b, "num_unitaries", v.num_unitaries);
        v.n_steps = b.get<int>("n_steps", v.n_steps);
        require_positive(b, "n_steps", v.n_steps);
        break;
    }
    case RunMode::ExportQasm: {
        auto &e = cfg.export_qasm;
        e.repetitions = b.get<int>("repetitions", e.repetitions);
        require_positive(b, "repetitions", e.repetitions);
        break;
    }
    }
    b.finish();
    root.finish();
    return cfg;
}

} // namespace

std::string to_string(RunMode mode) {
    switch (mode) {
    case RunMode::Dynamics: return "dynamics";
    case RunMode::Scan: return "scan";
    case RunMode::RandMeas: return "randmeas";
    case RunMode::Validate: return "validate";
    case RunMode::ExportQasm: return "export-qasm";
    }
    return {};
}

CircuitConfig CircuitSection::circuit(double phi_value) const {
    CircuitConfig cfg;
    cfg.num_qubits = num_qubits;
    cfg.t = {t0, t_modulation * t0, wavenumber, phi_value};
    cfg.theta = {theta0, theta_modulation * theta0, wavenumber, phi_value};
    cfg.jz = jz;
    return cfg;
}

void RunConfig::resolve() {
    if (!circuit.phi) {
        circuit.phi = disorder_phases(seed, 1).front();
    }
}

nlohmann::json RunConfig::to_json() const {
    json j;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["output_dir"] = output_dir;
    json c;
    c["L"] = circuit.num_qubits;
    c["t0"] = circuit.t0;
    c["theta0"] = circuit.theta0;
    c["t_modulation"] = circuit.t_modulation;
    c["theta_modulation"] = circuit.theta_modulation;
    c["wavenumber"] = circuit.wavenumber;
    c["jz"] = circuit.jz;
    if (circuit.phi) {
        c["phi"] = *circuit.phi;
    }
    j["circuit"] = c;
    switch (mode) {
    case RunMode::Dynamics:
        j["dynamics"] = {{"operator", dynamics.op},
                         {"n_steps", dynamics.n_steps}};
        break;
    case RunMode::Scan:
        j["scan"] = {{"start", {scan.start.t0, scan.start.theta0}},
                     {"end", {scan.end.t0, scan.end.theta0}},
                     {"num_points", scan.num_points},
                     {"n_long", scan.n_long},
                     {"n_short", scan.n_short},
                     {"num_phi", scan.num_phi},
                     {"operator", scan.op}};
        break;
    case RunMode::RandMeas: {
        json m = {{"operator", randmeas.op},
                  {"num_unitaries", randmeas.num_unitaries},
                  {"n_steps", randmeas.n_steps},
                  {"variant", std::string(floqmbl::to_string(randmeas.variant))}};
        if (randmeas.flip_sites) {
            m["flip_sites"] = *randmeas.flip_sites;
        }
        j["randmeas"] = m;
        break;
    }
    case RunMode::Validate:
        j["validate"] = {{"operator", validate.op},
                         {"num_unitaries", validate.num_unitaries},
                         {"n_steps", validate.n_steps}};
        break;
    case RunMode::ExportQasm:
        j["export_qasm"] = {{"repetitions", export_qasm.repetitions}};
        break;
    }
    return j;
}

RunConfig parse_config(const std::string &text,
                       const std::string &source_name) {
    const Locator loc(text, source_name);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        std::ostringstream out;
        out << source_name << ":" << loc.line_at(e.byte > 0 ? e.byte - 1 : 0)
            << ": JSON parse error: " << e.what();
        throw ConfigError(out.str());
    }
    if (!doc.is_object()) {
        throw ConfigError(source_name + ": top level must be a JSON object");
    }
    if (doc.contains("config") && doc.contains("library_version")) {
        return parse_object(doc.at("config"), loc);
    }
    return parse_object(doc, loc);
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot read config file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace floqmbl
