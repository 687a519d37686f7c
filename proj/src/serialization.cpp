#include "observa/serialization.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace observa {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& object, const char* key, const std::string& where) {
    const auto it = object.find(key);
    if (it == object.end()) throw ParseError(std::string("missing field '") + key + "'", where);
    return *it;
}

std::string label_at(const json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError("expected a string label", where);
    return value.get<std::string>();
}

std::vector<std::string> label_array(const json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError("expected an array of labels", where);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(label_at(value[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

NodeId node_ref(const ColoredDigraph& g, const json& value, const std::string& where) {
    const std::string label = label_at(value, where);
    const auto id = g.find_node(label);
    if (!id) throw ParseError("unknown node '" + label + "'", where);
    return *id;
}

ColorId color_ref(const ColoredDigraph& g, const json& value, const std::string& where) {
    const std::string label = label_at(value, where);
    const auto id = g.find_color(label);
    if (!id) throw ParseError("unknown color '" + label + "'", where);
    return *id;
}

}  // namespace

nlohmann::json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON", line_column(text, e.byte == 0 ? 0 : e.byte - 1));
    }
}

ColoredDigraph graph_from_json(const json& document) {
    if (!document.is_object()) throw ParseError("expected a JSON object", "$");
    ColoredDigraph g;
    g.node_labels = label_array(require(document, "nodes", "$"), "nodes");
    g.color_labels = label_array(require(document, "colors", "$"), "colors");

    std::optional<std::vector<std::optional<ColorId>>> node_color;
    if (const auto it = document.find("node_colors"); it != document.end()) {
        if (!it->is_object()) throw ParseError("expected an object", "node_colors");
        node_color.emplace(g.node_count());
        for (const auto& [node, color] : it->items()) {
            const std::string where = "node_colors." + node;
            const auto id = g.find_node(node);
            if (!id) throw ParseError("unknown node '" + node + "'", where);
            (*node_color)[*id] = color_ref(g, color, where);
        }
    }

    const json& edges = require(document, "edges", "$");
    if (!edges.is_array()) throw ParseError("expected an array", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw ParseError("expected [from, to] or [from, to, color]", where);
        const NodeId from = node_ref(g, e[0], where + "[0]");
        const NodeId to = node_ref(g, e[1], where + "[1]");
        if (e.size() == 3) {
            if (node_color) throw ParseError("edges carry colors while node_colors is given", where);
            g.add_edge(from, to, color_ref(g, e[2], where + "[2]"));
        } else if (node_color) {
            const auto c = (*node_color)[to];
            if (!c) throw ParseError("target node '" + g.node_labels[to] + "' has no color", where);
            g.add_edge(from, to, *c);
        } else {
            g.unobservable.push_back({from, to});
        }
    }

    if (const auto it = document.find("unobservable"); it != document.end()) {
        if (!it->is_array()) throw ParseError("expected an array", "unobservable");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "unobservable[" + std::to_string(i) + "]";
            const json& a = (*it)[i];
            if (!a.is_array() || a.size() != 2) throw ParseError("expected [from, to]", where);
            g.unobservable.push_back({node_ref(g, a[0], where + "[0]"), node_ref(g, a[1], where + "[1]")});
        }
    }
    return g;
}

json graph_to_json(const ColoredDigraph& graph) {
    json doc;
    doc["nodes"] = graph.node_labels;
    doc["colors"] = graph.color_labels;
    json edges = json::array();
    for (const Edge& e : graph.edges)
        edges.push_back({graph.node_labels.at(e.from), graph.node_labels.at(e.to), graph.color_labels.at(e.color)});
    json silent = json::array();
    for (const Arc& a : graph.unobservable) silent.push_back({graph.node_labels.at(a.from), graph.node_labels.at(a.to)});
    if (graph.color_labels.empty() && graph.edges.empty()) {
        doc["edges"] = std::move(silent);
    } else {
        doc["edges"] = std::move(edges);
        if (!silent.empty()) doc["unobservable"] = std::move(silent);
    }
    return doc;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

enum class TokenKind { id, arrow, undirected_edge, lbrace, rbrace, lbracket, rbracket, equals, semicolon, comma, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
};

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    const std::optional<std::vector<std::string>>& colors_hint() const { return colors_hint_; }

    Token next() {
        skip_blank();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {TokenKind::end, "", start};
        const char c = text_[pos_];
        auto single = [&](TokenKind k) {
            ++pos_;
            return Token{k, std::string(1, c), start};
        };
        switch (c) {
            case '{': return single(TokenKind::lbrace);
            case '}': return single(TokenKind::rbrace);
            case '[': return single(TokenKind::lbracket);
            case ']': return single(TokenKind::rbracket);
            case '=': return single(TokenKind::equals);
            case ';': return single(TokenKind::semicolon);
            case ',': return single(TokenKind::comma);
            default: break;
        }
        if (c == '-' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
            pos_ += 2;
            return {text_[pos_ - 1] == '>' ? TokenKind::arrow : TokenKind::undirected_edge, "", start};
        }
        if (c == '"') return quoted(start);
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
            static_cast<unsigned char>(c) >= 0x80) {
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' ||
                    static_cast<unsigned char>(d) >= 0x80 ||
                    (d == '-' && !(pos_ + 1 < text_.size() && (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-'))))
                    ++pos_;
                else
                    break;
            }
            return {TokenKind::id, std::string(text_.substr(start, pos_ - start)), start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_column(text_, start));
    }

private:
    Token quoted(std::size_t start) {
        ++pos_;
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
                value += text_[pos_ + 1];
                pos_ += 2;
            } else {
                value += text_[pos_++];
            }
        }
        if (pos_ >= text_.size()) throw ParseError("unterminated string", line_column(text_, start));
        ++pos_;
        return {TokenKind::id, value, start};
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                line_comment(pos_ + 2);
            } else if (c == '#' && (pos_ == 0 || text_[pos_ - 1] == '\n')) {
                line_comment(pos_ + 1);
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                const std::size_t end = text_.find("*/", pos_ + 2);
                if (end == std::string_view::npos) throw ParseError("unterminated comment", line_column(text_, pos_));
                pos_ = end + 2;
            } else {
                break;
            }
        }
    }

    void line_comment(std::size_t body) {
        std::size_t end = text_.find('\n', body);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view line = text_.substr(body, end - body);
        constexpr std::string_view tag = "colors:";
        const std::size_t at = line.find(tag);
        if (at != std::string_view::npos && line.substr(0, at).find_first_not_of(" \t") == std::string_view::npos) {
            const auto payload = line.substr(at + tag.size());
            try {
                colors_hint_ = json::parse(payload.begin(), payload.end()).get<std::vector<std::string>>();
            } catch (const json::exception&) {
                throw ParseError("malformed colors comment", line_column(text_, pos_));
            }
        }
        pos_ = end;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<std::vector<std::string>> colors_hint_;
};

class DotParser {
public:
    explicit DotParser(std::string_view text) : text_(text), lexer_(text) { advance(); }

    ColoredDigraph parse() {
        if (is_keyword("strict")) advance();
        if (is_keyword("graph")) fail("undirected graphs are not supported");
        if (!is_keyword("digraph")) fail("expected 'digraph'");
        advance();
        if (current_.kind == TokenKind::id) advance();
        expect(TokenKind::lbrace, "'{'");
        statements();
        expect(TokenKind::rbrace, "'}'");
        if (current_.kind != TokenKind::end) fail("trailing content after graph");
        return std::move(graph_);
    }

private:
    void statements() {
        while (current_.kind != TokenKind::rbrace && current_.kind != TokenKind::end) {
            statement();
            if (current_.kind == TokenKind::semicolon) advance();
        }
    }

    void statement() {
        if (is_keyword("subgraph") || current_.kind == TokenKind::lbrace) fail("subgraphs are not supported");
        if (current_.kind != TokenKind::id) fail("expected a statement");
        if (is_keyword("graph") || is_keyword("node") || is_keyword("edge")) {
            advance();
            if (current_.kind == TokenKind::lbracket) attributes();
            return;
        }
        Token first = current_;
        advance();
        if (current_.kind == TokenKind::equals) {  // graph attribute a=b
            advance();
            if (current_.kind != TokenKind::id) fail("expected a value");
            advance();
            return;
        }
        std::vector<Token> chain{first};
        while (current_.kind == TokenKind::arrow || current_.kind == TokenKind::undirected_edge) {
            if (current_.kind == TokenKind::undirected_edge) fail("undirected edge '--' in a digraph");
            advance();
            if (current_.kind != TokenKind::id) fail("expected a node after '->'");
            chain.push_back(current_);
            advance();
        }
        std::optional<std::pair<std::string, std::size_t>> label;
        if (current_.kind == TokenKind::lbracket) label = attributes();

        if (chain.size() == 1) {
            node(first.text);
            return;
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const NodeId from = node(chain[i].text);
            const NodeId to = node(chain[i + 1].text);
            if (!label) {
                graph_.unobservable.push_back({from, to});
            } else {
                graph_.add_edge(from, to, color(label->first, label->second));
            }
        }
    }

    // Returns the label attribute when present.
    std::optional<std::pair<std::string, std::size_t>> attributes() {
        std::optional<std::pair<std::string, std::size_t>> label;
        while (current_.kind == TokenKind::lbracket) {
            advance();
            while (current_.kind == TokenKind::id) {
                const std::string key = current_.text;
                advance();
                expect(TokenKind::equals, "'='");
                if (current_.kind != TokenKind::id) fail("expected an attribute value");
                if (key == "label") label.emplace(current_.text, current_.offset);
                advance();
                if (current_.kind == TokenKind::comma || current_.kind == TokenKind::semicolon) advance();
            }
            expect(TokenKind::rbracket, "']'");
        }
        return label;
    }

    NodeId node(const std::string& label) {
        if (const auto id = graph_.find_node(label)) return *id;
        return graph_.add_node(label);
    }

    ColorId color(const std::string& label, std::size_t offset) {
        if (const auto id = graph_.find_color(label)) return *id;
        if (lexer_.colors_hint()) throw ParseError("color '" + label + "' is not declared", line_column(text_, offset));
        return graph_.add_color(label);
    }

    bool is_keyword(std::string_view word) const {
        if (current_.kind != TokenKind::id || current_.text.size() != word.size()) return false;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(current_.text[i])) != word[i]) return false;
        return true;
    }

    void advance() {
        current_ = lexer_.next();
        if (!colors_applied_ && lexer_.colors_hint()) {
            colors_applied_ = true;
            for (const auto& c : *lexer_.colors_hint())
                if (!graph_.find_color(c)) graph_.add_color(c);
        }
    }

    void expect(TokenKind kind, const char* what) {
        if (current_.kind != kind) fail(std::string("expected ") + what);
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_column(text_, current_.offset));
    }

    std::string_view text_;
    DotLexer lexer_;
    Token current_{TokenKind::end, "", 0};
    ColoredDigraph graph_;
    bool colors_applied_ = false;
};

}  // namespace

ColoredDigraph graph_from_dot(std::string_view text) { return DotParser(text).parse(); }

std::string graph_to_dot(const ColoredDigraph& graph) {
    std::ostringstream out;
    out << "digraph G {\n";
    out << "  // colors: " << json(graph.color_labels).dump() << "\n";
    for (const auto& label : graph.node_labels) out << "  " << quote(label) << ";\n";
    for (const Edge& e : graph.edges) {
        out << "  " << quote(graph.node_labels.at(e.from)) << " -> " << quote(graph.node_labels.at(e.to))
            << " [label=" << quote(graph.color_labels.at(e.color)) << "];\n";
    }
    for (const Arc& a : graph.unobservable) {
        out << "  " << quote(graph.node_labels.at(a.from)) << " -> " << quote(graph.node_labels.at(a.to))
            << " [style=dotted];\n";
    }
    out << "}\n";
    return out.str();
}

GraphFormat detect_format(std::string_view text) {
    const std::size_t at = text.find_first_not_of(" \t\r\n");
    if (at != std::string_view::npos && text[at] == '{') return GraphFormat::json;
    return GraphFormat::dot;
}

ColoredDigraph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::json) return graph_from_json(parse_json_text(text));
    return graph_from_dot(text);
}

std::string serialize_graph(const ColoredDigraph& graph, GraphFormat format) {
    if (format == GraphFormat::json) return graph_to_json(graph).dump() + "\n";
    return graph_to_dot(graph);
}

}  // namespace observa
