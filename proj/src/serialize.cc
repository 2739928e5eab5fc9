#include "sct/serialize.hh"

#include "sct/errors.hh"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace sct {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

std::uint64_t as_index(const json& value, const std::string& path) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ParseError(path + ": expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::string escape_dot(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

} // namespace

std::string to_json(const Cdfa& a) {
    json doc;
    doc["letters"] = a.labels();
    doc["states"] = a.state_count();
    doc["initial"] = a.initial();
    doc["finals"] = a.finals().members();
    json rows = json::array();
    for (State q = 0; q < a.state_count(); ++q) {
        auto row = a.row(q);
        rows.push_back(std::vector<State>(row.begin(), row.end()));
    }
    doc["transitions"] = std::move(rows);
    return doc.dump();
}

Cdfa from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document root must be an object");
    }

    const json& letters = field(doc, "letters");
    if (!letters.is_array() || letters.empty()) {
        throw ParseError("letters: expected a non-empty array of strings");
    }
    std::vector<std::string> labels;
    for (std::size_t l = 0; l < letters.size(); ++l) {
        if (!letters[l].is_string()) {
            throw ParseError("letters[" + std::to_string(l) + "]: expected a string");
        }
        labels.push_back(letters[l].get<std::string>());
    }

    const auto states = as_index(field(doc, "states"), "states");
    if (states == 0) {
        throw ParseError("states: must be positive");
    }
    const auto initial = as_index(field(doc, "initial"), "initial");
    if (initial >= states) {
        throw ParseError("initial: state " + std::to_string(initial) + " out of range");
    }

    const json& finals_doc = field(doc, "finals");
    if (!finals_doc.is_array()) {
        throw ParseError("finals: expected an array");
    }
    StateSet finals(states);
    for (std::size_t k = 0; k < finals_doc.size(); ++k) {
        const std::string path = "finals[" + std::to_string(k) + "]";
        const auto q = as_index(finals_doc[k], path);
        if (q >= states) {
            throw ParseError(path + ": state " + std::to_string(q) + " out of range");
        }
        finals.insert(static_cast<State>(q));
    }

    const json& rows = field(doc, "transitions");
    if (!rows.is_array() || rows.size() != states) {
        throw ParseError("transitions: expected " + std::to_string(states) + " rows");
    }
    std::vector<State> table;
    table.reserve(states * labels.size());
    for (std::size_t q = 0; q < states; ++q) {
        const std::string row_path = "transitions[" + std::to_string(q) + "]";
        if (!rows[q].is_array() || rows[q].size() != labels.size()) {
            throw ParseError(row_path + ": expected " + std::to_string(labels.size()) + " entries");
        }
        for (std::size_t l = 0; l < labels.size(); ++l) {
            const std::string cell = row_path + "[" + std::to_string(l) + "]";
            const auto t = as_index(rows[q][l], cell);
            if (t >= states) {
                throw ParseError(cell + ": target " + std::to_string(t) + " out of range");
            }
            table.push_back(static_cast<State>(t));
        }
    }
    const std::size_t letter_count = labels.size();
    return Cdfa(letter_count, states, static_cast<State>(initial), std::move(finals), std::move(table),
                std::move(labels));
}

std::string to_dot(const Cdfa& a, std::string_view graph_name) {
    std::ostringstream os;
    os << "digraph \"" << escape_dot(graph_name) << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  __init [shape=point];\n";
    for (State q = 0; q < a.state_count(); ++q) {
        os << "  " << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  __init -> " << a.initial() << ";\n";
    for (State q = 0; q < a.state_count(); ++q) {
        std::map<State, std::string> by_target;
        for (Letter l = 0; l < a.letter_count(); ++l) {
            auto& label = by_target[a.target(q, l)];
            if (!label.empty()) {
                label += ',';
            }
            label += a.labels()[l];
        }
        for (const auto& [t, label] : by_target) {
            os << "  " << q << " -> " << t << " [label=\"" << escape_dot(label) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

Cdfa read_cdfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return from_json(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
}

} // namespace sct
