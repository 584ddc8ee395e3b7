#pragma once

// Command-line front end.  Every command is runnable in-process through
// run_command so the test suite can exercise the exact code path the binary
// uses; outputs are deterministic byte-for-byte.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "webinv/verify.hpp"

namespace webinv::cli {

// exit codes shared by every command
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kVerificationFailure = 2;

inline Signature parse_signature(const std::string& text) {
    Signature sig;
    for (char c : text) {
        if (c == 'B')
            sig.push_back(VertexColor::black);
        else if (c == 'W')
            sig.push_back(VertexColor::white);
        else
            throw std::invalid_argument("signature must be a word over B and W: " + text);
    }
    if (sig.empty()) throw std::invalid_argument("signature must be non-empty");
    return sig;
}

inline std::string signature_text(const Signature& sig) {
    std::string s;
    for (VertexColor c : sig) s += c == VertexColor::black ? 'B' : 'W';
    return s;
}

// "-" means standard input
inline Web load_web(const std::string& path, std::istream& in) {
    if (path == "-") return read_web(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open web file: " + path);
    return read_web(file);
}

inline std::string load_text(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open file: " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

inline nlohmann::json web_to_json(const Web& w) {
    nlohmann::json j;
    j["n"] = w.boundary.size();
    j["boundary"] = nlohmann::json::array();
    for (const auto& b : w.boundary)
        j["boundary"].push_back({{"id", b.id},
                                 {"color", b.color == VertexColor::black ? "B" : "W"},
                                 {"half_edges", b.half_edges}});
    j["internal"] = nlohmann::json::array();
    for (const auto& v : w.internal)
        j["internal"].push_back({{"id", v.id},
                                 {"color", v.color == VertexColor::black ? "B" : "W"},
                                 {"half_edges", v.half_edges}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : w.edges) j["edges"].push_back({e.h1, e.h2});
    if (!w.labels.empty()) {
        j["labels"] = nlohmann::json::array();
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
            if (!w.labels[i].first) continue;
            nlohmann::json l = {{"h1", w.edges[i].h1},
                                {"h2", w.edges[i].h2},
                                {"first", sign_state_token(*w.labels[i].first)}};
            if (w.labels[i].second) l["second"] = sign_state_token(*w.labels[i].second);
            j["labels"].push_back(l);
        }
    }
    return j;
}

inline void emit_json(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

inline void emit_web(const Web& w, bool json, std::ostream& out) {
    if (json)
        emit_json(web_to_json(w), out);
    else
        out << write_web(w);
}

inline std::string coloring_line(const EdgeColoring& col) {
    std::ostringstream line;
    for (std::size_t e = 0; e < col.size(); ++e) {
        if (e) line << ' ';
        line << e << '=' << col[e];
    }
    return line.str();
}

struct Options {
    std::string input = "-";     // web or polynomial file, "-" for stdin
    std::string string_arg;      // sign/state string for `grow`
    std::string signature;      // boundary colors for `expand`
    std::string out_dir = ".";  // where `expand` writes web files
    int max_len = 8;
    bool json = false;
    bool minimal = false;
    bool check = false;
};

inline int cmd_grow(const Options& o, std::ostream& out) {
    const SignStateString s = parse_sign_state(o.string_arg);
    if (!is_dominant(s))
        throw std::invalid_argument("string is not dominant: " + to_text(s));
    emit_web(grow(s), o.json, out);
    return kOk;
}

inline int cmd_label(const Options& o, std::istream& in, std::ostream& out) {
    const Web w = load_web(o.input, in);
    const SignStateString s = canonical_labeling(w);
    if (o.json)
        emit_json({{"labeling", to_text(s)}}, out);
    else
        out << to_text(s) << '\n';
    return kOk;
}

inline int cmd_colorings(const Options& o, std::istream& in, std::ostream& out) {
    const Web w = load_web(o.input, in);
    const auto errors = validate(w);
    if (!errors.empty()) throw std::invalid_argument("invalid web: " + errors.front());
    std::vector<EdgeColoring> cols;
    if (o.minimal)
        cols.push_back(minimal_coloring(w));
    else
        cols = enumerate_colorings(w);
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& col : cols) {
            nlohmann::json entry = nlohmann::json::array();
            for (std::size_t e = 0; e < col.size(); ++e)
                entry.push_back({{"edge", e}, {"color", col[e]}});
            j.push_back(entry);
        }
        emit_json({{"colorings", j}}, out);
    } else {
        for (const auto& col : cols) out << coloring_line(col) << '\n';
    }
    return kOk;
}

inline int cmd_invariant(const Options& o, std::istream& in, std::ostream& out) {
    const Web w = load_web(o.input, in);
    const VariableOrder ord(signature_of(w));
    const Polynomial p = evaluate(w);
    if (o.json) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
            terms.push_back({{"coefficient", it->second.str()},
                             {"monomial", monomial_text(it->first, ord)}});
        emit_json({{"polynomial", polynomial_text(p, ord)}, {"terms", terms}}, out);
    } else {
        out << polynomial_text(p, ord) << '\n';
    }
    return kOk;
}

inline int cmd_leading(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Web w = load_web(o.input, in);
    const VariableOrder ord(signature_of(w));
    const Term lead = leading_term_via_labeling(w);
    std::string check_status;
    if (o.check) {
        const Term full = evaluate(w).leading_term();
        check_status = full == lead ? "ok" : "mismatch";
    }
    if (o.json) {
        nlohmann::json j = {{"coefficient", lead.coefficient.str()},
                            {"monomial", monomial_text(lead.monomial, ord)},
                            {"text", term_text(lead, ord)}};
        if (o.check) j["check"] = check_status;
        emit_json(j, out);
    } else {
        out << term_text(lead, ord) << '\n';
        if (o.check) out << "check: " << check_status << '\n';
    }
    if (o.check && check_status != "ok") {
        err << "error: leading term from the canonical labeling disagrees with full evaluation\n";
        return kVerificationFailure;
    }
    return kOk;
}

inline int cmd_expand(const Options& o, std::istream& in, std::ostream& out) {
    const Signature sig = parse_signature(o.signature);
    const VariableOrder ord(sig);
    const Polynomial f = parse_polynomial(load_text(o.input, in), ord);
    const WebExpansion e = expand(f, sig);

    std::filesystem::create_directories(o.out_dir);
    Polynomial resummed;
    nlohmann::json terms = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> lines;
    int k = 0;
    for (const auto& [c, w] : e.terms) {
        const std::string name = "web-" + std::to_string(++k) + ".web";
        const std::string path = (std::filesystem::path(o.out_dir) / name).string();
        std::ofstream file(path);
        if (!file) throw std::invalid_argument("cannot write web file: " + path);
        file << write_web(w);
        lines.emplace_back(c.str(), path);
        terms.push_back({{"coefficient", c.str()}, {"file", path}});
        resummed += evaluate(w) * c;
    }
    const std::string digest = hex64(fnv1a64(polynomial_text(resummed, ord)));
    if (o.json) {
        emit_json({{"terms", terms}, {"digest", digest}}, out);
    } else {
        for (const auto& [c, path] : lines) out << c << ' ' << path << '\n';
        out << "digest: " << digest << '\n';
    }
    return kOk;
}

inline int cmd_trim(const Options& o, std::istream& in, std::ostream& out) {
    const Web w = load_web(o.input, in);
    emit_web(trim(w, canonical_labeling(w)).first, o.json, out);
    return kOk;
}

inline int cmd_unclasp(const Options& o, std::istream& in, std::ostream& out) {
    emit_web(unclasp(load_web(o.input, in)), o.json, out);
    return kOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto strings = enumerate_dominant(o.max_len);
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : strings) j.push_back(to_text(s));
        emit_json({{"strings", j}}, out);
    } else {
        for (const auto& s : strings) out << to_text(s) << '\n';
    }
    return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const std::vector<CheckResult> results = run_verification(o.max_len);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    if (o.json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results)
            checks.push_back(
                {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        emit_json({{"checks", checks},
                   {"passed", results.size() - failed},
                   {"failed", failed},
                   {"max_len", o.max_len}},
                  out);
    } else {
        for (const auto& r : results) {
            out << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)";
            if (!r.detail.empty()) out << " — " << r.detail;
            out << '\n';
        }
        out << "passed " << results.size() - failed << " of " << results.size() << " checks\n";
    }
    return failed == 0 ? kOk : kVerificationFailure;
}

// args excludes the program name and is in natural order
inline int run_command(std::vector<std::string> args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"SL3 web invariants: growth, colorings, invariant polynomials, leading terms,"
                 " and web-basis expansion"};
    app.name("webinv");
    app.require_subcommand(1);
    Options o;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", o.input, "web file, or - for standard input");
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "emit structured JSON instead of plain text");
    };

    CLI::App* grow_cmd = app.add_subcommand("grow", "grow the web of a dominant sign/state string");
    grow_cmd->add_option("string", o.string_arg, "sign/state string, e.g. +1,-1,--1,+-1")
        ->required();
    add_json(grow_cmd);

    CLI::App* label_cmd =
        app.add_subcommand("label", "read off the canonical boundary labeling of a web");
    add_input(label_cmd);
    add_json(label_cmd);

    CLI::App* colorings_cmd =
        app.add_subcommand("colorings", "list the proper edge colorings of a web");
    add_input(colorings_cmd);
    colorings_cmd->add_flag("--minimal", o.minimal, "emit only the minimal coloring");
    add_json(colorings_cmd);

    CLI::App* invariant_cmd =
        app.add_subcommand("invariant", "evaluate the invariant polynomial of a web");
    add_input(invariant_cmd);
    add_json(invariant_cmd);

    CLI::App* leading_cmd =
        app.add_subcommand("leading", "leading term of a web's invariant via its canonical labeling");
    add_input(leading_cmd);
    leading_cmd->add_flag("--check", o.check, "cross-verify against full evaluation");
    add_json(leading_cmd);

    CLI::App* expand_cmd =
        app.add_subcommand("expand", "expand a polynomial into the web basis");
    add_input(expand_cmd);
    expand_cmd
        ->add_option("--signature", o.signature,
                     "boundary colors of the variables as a word over B and W, e.g. BWWB")
        ->required();
    expand_cmd->add_option("--out-dir", o.out_dir, "directory for the emitted web files");
    add_json(expand_cmd);

    CLI::App* trim_cmd = app.add_subcommand("trim", "trim one labeled strand off a web");
    add_input(trim_cmd);
    add_json(trim_cmd);

    CLI::App* unclasp_cmd =
        app.add_subcommand("unclasp", "split every boundary vertex into single-strand vertices");
    add_input(unclasp_cmd);
    add_json(unclasp_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite");
    verify_cmd->add_option("--max-len", o.max_len, "bound on the enumerated string lengths")
        ->check(CLI::Range(1, 12));
    add_json(verify_cmd);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "list all dominant sign/state strings up to a length");
    enumerate_cmd->add_option("--max-len", o.max_len, "bound on the string lengths")
        ->check(CLI::Range(1, 12));
    add_json(enumerate_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (grow_cmd->parsed()) return cmd_grow(o, out);
        if (label_cmd->parsed()) return cmd_label(o, in, out);
        if (colorings_cmd->parsed()) return cmd_colorings(o, in, out);
        if (invariant_cmd->parsed()) return cmd_invariant(o, in, out);
        if (leading_cmd->parsed()) return cmd_leading(o, in, out, err);
        if (expand_cmd->parsed()) return cmd_expand(o, in, out);
        if (trim_cmd->parsed()) return cmd_trim(o, in, out);
        if (unclasp_cmd->parsed()) return cmd_unclasp(o, in, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    err << "error: no command given\n";
    return kInputError;
}

}  // namespace webinv::cli
